"""
Automatic scheme selection.

Every candidate is checked with decoder_exists before it is returned. The
three-slot alignment code loses rank on some points of its range, e.g. (5,6);
composition over gap-1 models reaches the same rate there.
"""

import logging

from .codes.linear_code import LinearCode
from .codes.schemes import (
    construct_case1,
    construct_case2,
    construct_composed,
    construct_degenerate,
    construct_uncoded,
)
from .errors import PreconditionError
from .schemas import NetworkClass, NetworkParams2x2, NetworkParamsSym
from .tools.network import classify_closed_form
from .verification import decoder_exists

logger = logging.getLogger("adtcomp.selection")


def _case2_or_composed(m: int, n: int) -> LinearCode:
    code = construct_case2(m, n)
    if decoder_exists(code).passed:
        return code
    logger.info(f"[selection.construct_auto] case2 ({m},{n}) is rank deficient, composing gap-1 codes")
    return construct_composed(m, n, 2)


def construct_auto(params: NetworkParams2x2 | NetworkParamsSym) -> LinearCode:
    """Pick the scheme that reaches the known capacity for these parameters."""
    if isinstance(params, NetworkParams2x2):
        if classify_closed_form(params) is NetworkClass.DEGENERATE:
            return construct_degenerate(params)
        if params.is_symmetric():
            return construct_auto(NetworkParamsSym(m=params.n12, n=params.n11, L=2))
        raise PreconditionError(f"no construction known for {params.describe()}")
    m, n, L = params.m, params.n, params.L
    if m == n:
        return construct_uncoded(m, n, L)
    if L >= 3:
        return construct_composed(m, n, L)
    low, high = min(m, n), max(m, n)
    if 2 * low < high:
        return construct_composed(m, n, L)
    if 3 * low <= 2 * high:
        return construct_case1(m, n)
    return _case2_or_composed(m, n)


__all__ = ["construct_auto"]
