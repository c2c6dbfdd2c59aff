"""
Linear deterministic channel: transfer matrices, reception and 2x2 classification.

Receiver l sees Y_l = sum_j G^{q - n_jl} X_j, with G the q x q down-shift.
Signals for N channel uses are stacked slot-major: row t*q + (p-1) is level p
of slot t.
"""

import logging
from dataclasses import dataclass
from functools import cache
from typing import Optional, Sequence

from ..errors import DimensionMismatchError, PreconditionError
from ..schemas import NetworkClass, NetworkParams2x2, NetworkParamsSym
from .gf2 import Gf2Matrix, hconcat, kron, shift_matrix, solve_left, vconcat

logger = logging.getLogger("adtcomp.network")

Params = NetworkParams2x2 | NetworkParamsSym


@dataclass(frozen=True)
class ChannelMatrix:
    """Per-receiver transfer blocks plus the stacked map (X_1..X_L) -> (Y_1..Y_L)"""
    params: Params
    q: int
    blocks: tuple[tuple[Gf2Matrix, ...], ...]  # blocks[rx][tx]
    stacked: Gf2Matrix

    @property
    def num_users(self) -> int:
        return len(self.blocks)

    def block(self, tx: int, rx: int) -> Gf2Matrix:
        return self.blocks[rx][tx]

    def transfer(self, tx: int, rx: int, uses: int = 1) -> Gf2Matrix:
        """Block-diagonal transfer from `tx` to `rx` over `uses` channel uses."""
        return _repeat_block(self.blocks[rx][tx], uses)

    def receiver_row(self, rx: int) -> Gf2Matrix:
        return hconcat(list(self.blocks[rx])) if self.q else Gf2Matrix.zeros(0, 0)


@cache
def _repeat_block(block: Gf2Matrix, uses: int) -> Gf2Matrix:
    return kron(Gf2Matrix.identity(uses), block)


@cache
def transfer_matrices(params: Params) -> ChannelMatrix:
    q = params.q
    users = params.num_users
    blocks = tuple(
        tuple(shift_matrix(q, q - params.link_levels(tx, rx)) for tx in range(users))
        for rx in range(users)
    )
    if q:
        stacked = vconcat([hconcat(list(row)) for row in blocks])
    else:
        stacked = Gf2Matrix.zeros(0, 0)
    return ChannelMatrix(params=params, q=q, blocks=blocks, stacked=stacked)


def receive(ch: ChannelMatrix, inputs: Sequence[Gf2Matrix]) -> list[Gf2Matrix]:
    """Push one q x N input per transmitter (column t = slot t) through the channel."""
    if len(inputs) != ch.num_users:
        raise DimensionMismatchError(f"expected {ch.num_users} inputs, got {len(inputs)}")
    width = inputs[0].cols if inputs else 0
    for x in inputs:
        if x.rows != ch.q or x.cols != width:
            raise DimensionMismatchError(f"input of shape {x.shape}, expected ({ch.q}, {width})")
    outputs = []
    for rx in range(ch.num_users):
        y = Gf2Matrix.zeros(ch.q, width)
        for tx, x in enumerate(inputs):
            y = y + ch.block(tx, rx) @ x
        outputs.append(y)
    return outputs


def split_uses(stacked: Gf2Matrix, q: int) -> Gf2Matrix:
    """Nq x 1 slot-major column -> q x N matrix with one column per slot."""
    if stacked.cols != 1 or (q and stacked.rows % q):
        raise DimensionMismatchError(f"cannot split {stacked.shape} into slots of {q} levels")
    uses = stacked.rows // q if q else 0
    return Gf2Matrix.from_rows(
        [[stacked.data[t * q + p] for t in range(uses)] for p in range(q)], cols=uses
    )


def join_uses(per_slot: Gf2Matrix) -> Gf2Matrix:
    """Inverse of split_uses."""
    q, uses = per_slot.shape
    return Gf2Matrix.column_vector([per_slot.get(p, t) for t in range(uses) for p in range(q)])


# ===== Classification =====

def classify_closed_form(params: NetworkParams2x2) -> NetworkClass:
    if params.n11 - params.n12 == params.n21 - params.n22:
        return NetworkClass.DEGENERATE
    return NetworkClass.NON_DEGENERATE


@dataclass(frozen=True)
class ClassificationResult:
    network_class: NetworkClass
    witness: Optional[tuple[int, int]] = None  # 1-based (i, j)
    decoder: Optional[Gf2Matrix] = None

    @property
    def is_degenerate(self) -> bool:
        return self.network_class is NetworkClass.DEGENERATE


def classify_constructive(params: NetworkParams2x2) -> ClassificationResult:
    """Search for a transmit signal G^{q-n_ij} X_i that (Y_1, Y_2) determines.

    Links with zero levels carry the zero signal and never count as a witness.
    """
    ch = transfer_matrices(params)
    q = ch.q
    for i in range(2):
        for j in range(2):
            if params.link_levels(i, j) == 0:
                continue
            target_blocks = [Gf2Matrix.zeros(q, q), Gf2Matrix.zeros(q, q)]
            target_blocks[i] = ch.block(i, j)
            decoder = solve_left(ch.stacked, hconcat(target_blocks))
            if decoder is not None:
                logger.debug(f"[network.classify_constructive] {params.describe()} witness ({i + 1},{j + 1})")
                return ClassificationResult(NetworkClass.NON_DEGENERATE, (i + 1, j + 1), decoder)
    return ClassificationResult(NetworkClass.DEGENERATE)


def claim1_check(params: NetworkParamsSym) -> bool:
    """True iff every transmit vector X_l is a linear function of (Y_1..Y_L)."""
    if params.m == params.n:
        raise PreconditionError(f"claim1_check needs m != n, got {params.describe()}")
    ch = transfer_matrices(params)
    q, users = ch.q, params.L
    for ell in range(users):
        selector = [Gf2Matrix.zeros(q, q)] * users
        selector[ell] = Gf2Matrix.identity(q)
        if solve_left(ch.stacked, hconcat(selector)) is None:
            return False
    return True


__all__ = [
    "ChannelMatrix",
    "ClassificationResult",
    "transfer_matrices",
    "receive",
    "split_uses",
    "join_uses",
    "classify_closed_form",
    "classify_constructive",
    "claim1_check",
]
