"""
Explicit code constructions for symmetric and degenerate networks.

Levels are 1-based from the top. In a symmetric (m, n) network with m < n the
direct link is unshifted and the cross link shifts down by n - m; the m > n
case is the same picture with the transmitters swapped.
"""

import logging

from ..decomposition import Decomposition, full_decompose, validate_coloring
from ..errors import PreconditionError
from ..schemas import NetworkClass, NetworkParams2x2, NetworkParamsSym, Orientation, Scheme
from ..tools.gf2 import (
    Gf2Matrix,
    coordinate_block,
    coordinate_vector,
    hconcat,
    kron,
    shift_matrix,
)
from ..tools.network import classify_closed_form
from .linear_code import (
    LinearCode,
    code_from_levels,
    embed_levels,
    empty_code,
    repeat_code,
    stack_codes,
    swap_transmitters,
)

logger = logging.getLogger("adtcomp.schemes")


def construct_uncoded(m: int, n: int, L: int = 2) -> LinearCode:
    """m = n: the channel already adds the sources level by level."""
    if m != n:
        raise PreconditionError(f"uncoded transmission needs m = n, got ({m},{n})")
    params = NetworkParamsSym(m=m, n=n, L=L)
    eye = Gf2Matrix.identity(n)
    return LinearCode(params, 1, n, (eye,) * L, Scheme.UNCODED.value)


def construct_degenerate(params: NetworkParams2x2) -> LinearCode:
    """Single-receiver equivalent code for a degenerate 2x2 network.

    The weaker receiver w is receiver 2 when n11 - n12 >= 0, else receiver 1.
    Bit k of transmitter j goes on level k + (n_jw - min(n_1w, n_2w)), so both
    transmitters hit the same bottom levels of w; the other receiver sees the
    same pattern shifted up.
    """
    if classify_closed_form(params) is not NetworkClass.DEGENERATE:
        raise PreconditionError(f"{params.describe()} is not degenerate")
    K = min(params.as_tuple())
    if K == 0:
        return empty_code(params, Scheme.DEGENERATE)
    weak = 1 if params.n11 - params.n12 >= 0 else 0
    floor = min(params.link_levels(0, weak), params.link_levels(1, weak))
    assignments = [
        [[(0, k + params.link_levels(tx, weak) - floor)] for k in range(1, K + 1)]
        for tx in range(2)
    ]
    return code_from_levels(params, assignments, label=Scheme.DEGENERATE)


# ===== Two-user alignment codes =====

def construct_case1(m: int, n: int) -> LinearCode:
    """One-shot alignment for 1/2 <= min/max <= 2/3, rate min(m, n)."""
    if m > n:
        return swap_transmitters(construct_case1(n, m), NetworkParamsSym(m=m, n=n, L=2))
    if n == 0 or not (2 * m >= n and 3 * m <= 2 * n):
        raise PreconditionError(f"case1 needs 1/2 <= m/n <= 2/3, got ({m},{n})")
    gap = n - m
    n1 = n2 = 2 * m - n  # overlap at each receiver
    b_level: dict[int, int] = {}
    for j in range(1, n1 + 1):
        b_level[gap + j] = j            # aligns with a_{gap+j} at receiver 1
    for k in range(1, n2 + 1):
        b_level[k] = gap + k            # aligns with a_k at receiver 2
    for t in range(1, 2 * n - 3 * m + 1):
        b_level[n2 + t] = n1 + t        # vacant levels, no alignment
    assignments = [
        [[(0, i)] for i in range(1, m + 1)],
        [[(0, b_level[i])] for i in range(1, m + 1)],
    ]
    logger.debug(f"[schemes.construct_case1] ({m},{n}) overlaps N1={n1} N2={n2}")
    return code_from_levels(NetworkParamsSym(m=m, n=n, L=2), assignments, label=Scheme.CASE1)


def case2_beamformers(m: int, n: int) -> tuple[Gf2Matrix, Gf2Matrix]:
    """(V1, V2) of the three-slot alignment code, for m < n.

    V = I_3 (x) [e_1 .. e_{n-m}] is common. The P columns put
    e_{n-m+1..2m-n} in slot 3 and e_{2(n-m)+1..m} + e_{3(n-m)+1..n} in slot 2
    (for V1) or slot 1 (for V2).
    """
    if not (m < n and 3 * m >= 2 * n):
        raise PreconditionError(f"case2 needs 2/3 <= m/n < 1, got ({m},{n})")
    gap = n - m

    def slot(i: int) -> Gf2Matrix:
        return coordinate_vector(i, 3)

    common = kron(Gf2Matrix.identity(3), coordinate_block(1, gap, n))
    slot3_part = kron(slot(3), coordinate_block(gap + 1, 2 * m - n, n))
    paired = coordinate_block(2 * gap + 1, m, n) + coordinate_block(3 * gap + 1, n, n)
    p1 = slot3_part + kron(slot(2), paired)
    p2 = slot3_part + kron(slot(1), paired)
    return hconcat([common, p1]), hconcat([common, p2])


def construct_case2(m: int, n: int) -> LinearCode:
    """Three-slot alignment for 2/3 <= min/max < 1, rate 2 max(m, n) / 3.

    Transmitter 1 sends a through V1 and a' through T V2; transmitter 2 sends
    b through T V1 and b' through V2, with T = I_3 (x) G^{n-m}. Column i of
    either transmitter carries the same sum index.
    """
    if m > n:
        return swap_transmitters(construct_case2(n, m), NetworkParamsSym(m=m, n=n, L=2))
    v1, v2 = case2_beamformers(m, n)
    t = kron(Gf2Matrix.identity(3), shift_matrix(n, n - m))
    tx1 = hconcat([v1, t @ v2])
    tx2 = hconcat([t @ v1, v2])
    return LinearCode(NetworkParamsSym(m=m, n=n, L=2), 3, 2 * n, (tx1, tx2), Scheme.CASE2.value)


# ===== Gap-1 building blocks =====

def _gap1_params(low: int, orientation: Orientation, L: int) -> NetworkParamsSym:
    """(low, low+1) for UP, (low+1, low) for DOWN."""
    if orientation is Orientation.UP:
        return NetworkParamsSym(m=low, n=low + 1, L=L)
    return NetworkParamsSym(m=low + 1, n=low, L=L)


def _paired_groups(groups: int) -> list[list[list[tuple[int, int]]]]:
    """Per 3-level group k: a_{2k-1}, a_{2k} on its first two levels; b in swapped order."""
    tx1, tx2 = [], []
    for k in range(1, groups + 1):
        top, mid = 3 * k - 2, 3 * k - 1
        tx1 += [[(0, top)], [(0, mid)]]
        tx2 += [[(0, mid)], [(0, top)]]
    return [tx1, tx2]


def _gap1_up(r: int) -> LinearCode:
    params = NetworkParamsSym(m=r, n=r + 1, L=2)
    if r == 0:
        return empty_code(params, Scheme.GAP1)
    if r == 1:
        return construct_case1(1, 2).relabel(Scheme.GAP1)
    blocks, rest = divmod(r + 1, 3)
    if rest == 0:
        return code_from_levels(params, _paired_groups(blocks), label=Scheme.GAP1)

    # r = 3l or 3l+1: l-1 paired groups on top, a (3,4) or (4,5) three-slot block at the bottom
    tail = 3 + rest - 1
    groups = (r - tail) // 3
    parts = []
    if groups:
        head_params = NetworkParamsSym(m=2, n=3, L=2)
        head = repeat_code(code_from_levels(head_params, _paired_groups(1)), 3)
        for k in range(1, groups + 1):
            levels = [3 * k - 2, 3 * k - 1, 3 * k]
            parts.append(embed_levels(head, params, [levels, levels]))
    bottom = construct_case2(tail, tail + 1)
    levels = list(range(r - tail + 1, r + 2))
    parts.append(embed_levels(bottom, params, [levels, levels]))
    return stack_codes(params, parts, Scheme.GAP1)


def construct_gap1_L2(r: int, orientation: Orientation = Orientation.UP) -> LinearCode:
    """Two-user gap-1 code for (r, r+1) or, mirrored, (r+1, r)."""
    if r < 0:
        raise PreconditionError(f"gap-1 model needs r >= 0, got {r}")
    up = _gap1_up(r)
    if orientation is Orientation.UP:
        return up
    return swap_transmitters(up, NetworkParamsSym(m=r + 1, n=r, L=2))


def construct_luser_gap1(r: int, orientation: Orientation = Orientation.UP, L: int = 3) -> LinearCode:
    """L-user code for the (r-1, r) model (UP) or (r, r-1) model (DOWN), rate r/2.

    Even r = 2k: bit i on level 2i-1, one slot. Odd r = 2k+1: two slots; slot 1
    carries bits 1..k on odd levels and bit k+1 on level 2k, slot 2 repeats bit
    k+1 on level 1 and carries bits k+2..2k+1 on levels 2, 4, .., 2k.
    The same placement works for both orientations.
    """
    if L < 3:
        raise PreconditionError(f"L-user gap-1 codes need L >= 3, got {L}")
    if r < 1:
        raise PreconditionError(f"L-user gap-1 model needs r >= 1, got {r}")
    params = _gap1_params(r - 1, orientation, L)
    if r == 1:
        return empty_code(params, Scheme.LUSER)
    k, odd = divmod(r, 2)
    if not odd:
        bits = [[(0, 2 * i - 1)] for i in range(1, k + 1)]
        return code_from_levels(params, [bits] * L, N=1, label=Scheme.LUSER)
    bits = [[(0, 2 * i - 1)] for i in range(1, k + 1)]
    bits.append([(0, 2 * k), (1, 1)])
    bits += [[(1, 2 * i)] for i in range(1, k + 1)]
    return code_from_levels(params, [bits] * L, N=2, label=Scheme.LUSER)


# ===== Composition =====

def compose_from_decomposition(params: NetworkParamsSym, dec: Decomposition, subcodes: list[LinearCode]) -> LinearCode:
    """Lift one sub-code per color through the coloring and run them side by side."""
    if not validate_coloring(params, dec):
        raise PreconditionError(f"coloring does not decompose {params.describe()}")
    if len(subcodes) != len(dec.color_models):
        raise PreconditionError(f"{len(dec.color_models)} colors but {len(subcodes)} sub-codes")
    parts = []
    for color, (sub, (m_sub, n_sub)) in enumerate(zip(subcodes, dec.color_models)):
        if sub.params.q != max(m_sub, n_sub) or sub.num_users != params.L or not _same_links(sub, m_sub, n_sub):
            raise PreconditionError(f"sub-code for color {color} is not a ({m_sub},{n_sub}) code")
        level_maps = [dec.coloring.levels_of("tx", user, color) for user in range(1, params.L + 1)]
        parts.append(embed_levels(sub, params, level_maps))
    return stack_codes(params, parts, Scheme.COMPOSE)


def _same_links(code: LinearCode, m_sub: int, n_sub: int) -> bool:
    p = code.params
    return p.link_levels(0, 0) == n_sub and p.link_levels(0, 1) == m_sub


def construct_composed(m: int, n: int, L: int = 2) -> LinearCode:
    """Decompose into gap-1 models, code each, compose."""
    dec = full_decompose(m, n, L)
    subcodes = []
    for m_sub, n_sub in dec.color_models:
        orientation = Orientation.UP if m_sub < n_sub else Orientation.DOWN
        if L == 2:
            subcodes.append(construct_gap1_L2(min(m_sub, n_sub), orientation))
        else:
            subcodes.append(construct_luser_gap1(max(m_sub, n_sub), orientation, L))
    code = compose_from_decomposition(NetworkParamsSym(m=m, n=n, L=L), dec, subcodes)
    logger.info(f"[schemes.construct_composed] ({m},{n},{L}) {dec.factorization()} -> rate {code.rate}")
    return code


__all__ = [
    "construct_uncoded",
    "construct_degenerate",
    "construct_case1",
    "case2_beamformers",
    "construct_case2",
    "construct_gap1_L2",
    "construct_luser_gap1",
    "compose_from_decomposition",
    "construct_composed",
]
