"""adtcomp package initializer.

Computing the modulo-2 sum of every source over linear deterministic
interference networks: capacity formulas, decompositions, explicit codes and
exact verification. Environment variables (ADTCOMP_*) are loaded once at
package import time so the CLI and scripts share one configuration.
"""

__version__ = "0.1.0"


_ADTCOMP_ENV_LOADED: bool = False


def _load_env_once() -> None:
    """Load environment variables once at package import time."""
    global _ADTCOMP_ENV_LOADED
    if _ADTCOMP_ENV_LOADED:
        return
    try:
        from dotenv import load_dotenv  # type: ignore
        from pathlib import Path as _Path

        # repo root is 2 parents up: adtcomp/__init__.py -> src -> repo root
        repo_root = _Path(__file__).resolve().parents[2]
        candidates = [repo_root / ".env", _Path.cwd() / ".env"]
        for _p in candidates:
            if _p.exists():
                load_dotenv(_p)
                break
    except Exception:
        # Optional dependency; skip silently if unavailable
        pass
    _ADTCOMP_ENV_LOADED = True


_load_env_once()

# Main Engine
from .adtcomp_engine import AdtEngine, ClassifyOutcome
from .config import AdtConfig

# Errors
from .errors import AdtError, CodeFormatError, DimensionMismatchError, PreconditionError

# Schemas
from .schemas import (
    CodePayload,
    CurveSample,
    MatrixPayload,
    NetworkClass,
    NetworkParams2x2,
    NetworkParamsSym,
    OracleMode,
    OracleStatus,
    Orientation,
    Scheme,
    SweepRow,
    parse_params,
)

# GF(2) algebra and channel model
from .tools import (
    ChannelMatrix,
    ClassificationResult,
    Gf2Matrix,
    claim1_check,
    classify_closed_form,
    classify_constructive,
    hconcat,
    kron,
    mat_mul,
    rank,
    receive,
    shift_matrix,
    solve_left,
    transfer_matrices,
    vconcat,
)

# Formulas
from .capacity import (
    CapacityReport,
    capacity_2x2,
    capacity_degenerate,
    capacity_report,
    capacity_symmetric,
    luser_linear_capacity,
    luser_upper_bound,
    normalized_capacity,
    normalized_curve,
    separation_rate,
    upper_cutset,
    upper_nondegenerate,
)

# Decomposition
from .decomposition import (
    ColoringMap,
    Decomposition,
    SubModel,
    adt_graph,
    decompose_odd,
    decompose_scale,
    full_decompose,
    validate_coloring,
)

# Codes
from .codes import (
    LinearCode,
    case2_beamformers,
    compose_from_decomposition,
    construct_case1,
    construct_case2,
    construct_composed,
    construct_degenerate,
    construct_gap1_L2,
    construct_luser_gap1,
    construct_uncoded,
    embed_levels,
    repeat_code,
    stack_codes,
    swap_transmitters,
)

# Verification and search
from .verification import (
    SubspaceReport,
    VerificationReport,
    decoder_exists,
    rank_condition,
    simulate,
    subspace_dims,
)
from .oracle import OracleResult, OracleSearch, oracle_search
from .selection import construct_auto


# Convenience functions
def build_and_verify(params: NetworkParams2x2 | NetworkParamsSym, scheme: Scheme = Scheme.AUTO) -> tuple[LinearCode, VerificationReport]:
    """Construct a code for params and run decoder_exists on it"""
    engine = AdtEngine()
    code = engine.construct(params, scheme)
    return code, engine.verify(code, simulate_trials=0)


async def sweep_capacity(n: int, L: int, m_values: list[int], **kwargs) -> list[SweepRow]:
    """Convenience function for capacity sweeps"""
    return await AdtEngine().sweep(n, L, m_values, **kwargs)


__all__ = [
    # Main Engine
    'AdtEngine',
    'AdtConfig',
    'ClassifyOutcome',
    'build_and_verify',
    'sweep_capacity',

    # Errors
    'AdtError',
    'CodeFormatError',
    'DimensionMismatchError',
    'PreconditionError',

    # Schemas
    'CodePayload',
    'CurveSample',
    'MatrixPayload',
    'NetworkClass',
    'NetworkParams2x2',
    'NetworkParamsSym',
    'OracleMode',
    'OracleStatus',
    'Orientation',
    'Scheme',
    'SweepRow',
    'parse_params',

    # GF(2) and channel
    'ChannelMatrix',
    'ClassificationResult',
    'Gf2Matrix',
    'claim1_check',
    'classify_closed_form',
    'classify_constructive',
    'hconcat',
    'kron',
    'mat_mul',
    'rank',
    'receive',
    'shift_matrix',
    'solve_left',
    'transfer_matrices',
    'vconcat',

    # Formulas
    'CapacityReport',
    'capacity_2x2',
    'capacity_degenerate',
    'capacity_report',
    'capacity_symmetric',
    'luser_linear_capacity',
    'luser_upper_bound',
    'normalized_capacity',
    'normalized_curve',
    'separation_rate',
    'upper_cutset',
    'upper_nondegenerate',

    # Decomposition
    'ColoringMap',
    'Decomposition',
    'SubModel',
    'adt_graph',
    'decompose_odd',
    'decompose_scale',
    'full_decompose',
    'validate_coloring',

    # Codes
    'LinearCode',
    'case2_beamformers',
    'compose_from_decomposition',
    'construct_auto',
    'construct_case1',
    'construct_case2',
    'construct_composed',
    'construct_degenerate',
    'construct_gap1_L2',
    'construct_luser_gap1',
    'construct_uncoded',
    'embed_levels',
    'repeat_code',
    'stack_codes',
    'swap_transmitters',

    # Verification and search
    'SubspaceReport',
    'VerificationReport',
    'decoder_exists',
    'rank_condition',
    'simulate',
    'subspace_dims',
    'OracleResult',
    'OracleSearch',
    'oracle_search',
]
