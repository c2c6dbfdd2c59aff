"""
GF(2) algebra, channel model and process fan-out helpers
"""

from .gf2 import (
    Gf2Matrix,
    hconcat,
    kron,
    mat_mul,
    rank,
    shift_matrix,
    solve_left,
    vconcat,
)
from .network import (
    ChannelMatrix,
    ClassificationResult,
    claim1_check,
    classify_closed_form,
    classify_constructive,
    receive,
    transfer_matrices,
)
from .parallel import gather_in_processes, run_in_processes

__all__ = [
    'Gf2Matrix',
    'hconcat',
    'kron',
    'mat_mul',
    'rank',
    'shift_matrix',
    'solve_left',
    'vconcat',
    'ChannelMatrix',
    'ClassificationResult',
    'claim1_check',
    'classify_closed_form',
    'classify_constructive',
    'receive',
    'transfer_matrices',
    'gather_in_processes',
    'run_in_processes',
]
