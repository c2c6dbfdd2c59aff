"""
Linear codes and their constructions
"""

from .linear_code import (
    LinearCode,
    code_from_levels,
    embed_levels,
    empty_code,
    repeat_code,
    stack_codes,
    swap_transmitters,
)
from .schemes import (
    case2_beamformers,
    compose_from_decomposition,
    construct_case1,
    construct_case2,
    construct_composed,
    construct_degenerate,
    construct_gap1_L2,
    construct_luser_gap1,
    construct_uncoded,
)

__all__ = [
    'LinearCode',
    'code_from_levels',
    'embed_levels',
    'empty_code',
    'repeat_code',
    'stack_codes',
    'swap_transmitters',
    'case2_beamformers',
    'compose_from_decomposition',
    'construct_case1',
    'construct_case2',
    'construct_composed',
    'construct_degenerate',
    'construct_gap1_L2',
    'construct_luser_gap1',
    'construct_uncoded',
]
