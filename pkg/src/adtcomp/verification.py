"""
Zero-error verification of linear codes.

A code is decodable at receiver l when some matrix D_l maps the receiver's
view of all beamforming columns onto [I_K | ... | I_K], i.e. every source bit
of every transmitter lands on the matching sum bit.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Iterator, Optional

import numpy as np

from .codes.linear_code import LinearCode
from .errors import PreconditionError
from .schemas import NetworkParamsSym, Scheme
from .tools.gf2 import (
    Gf2Matrix,
    hconcat,
    identity_stack,
    kron,
    rank,
    rank_of_bitsets,
    shift_matrix,
    solve_left,
)
from .tools.network import join_uses, receive, split_uses, transfer_matrices

logger = logging.getLogger("adtcomp.verification")

MAX_EXHAUSTIVE_SOURCE_BITS = 20


@dataclass
class ReceiverReport:
    index: int  # 1-based
    rank: int
    decoder: Optional[Gf2Matrix] = None

    @property
    def passed(self) -> bool:
        return self.decoder is not None


@dataclass
class SubspaceReport:
    """dims[i][l] = dim W_{i,l}: span of bit i's beamforming columns as seen by receiver l"""
    dims: list[list[int]]
    independent: list[bool]
    pattern_check_applicable: bool
    forbidden_patterns: list[tuple[int, int, int]] = field(default_factory=list)  # (bit, rx with dim 1, rx with dim <= 2), 1-based

    @property
    def ok(self) -> bool:
        return all(self.independent) and not self.forbidden_patterns


@dataclass
class VerificationReport:
    label: str
    params: str
    N: int
    K: int
    receivers: list[ReceiverReport]
    subspace: Optional[SubspaceReport] = None
    simulated: Optional[bool] = None  # None when no simulation ran

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.receivers) and self.simulated is not False

    def to_dict(self) -> dict:
        out = {
            "label": self.label,
            "params": self.params,
            "N": self.N,
            "K": self.K,
            "passed": self.passed,
            "simulated": self.simulated,
            "receivers": [
                {
                    "index": r.index,
                    "rank": r.rank,
                    "decoder": None if r.decoder is None else r.decoder.to_payload().model_dump(),
                }
                for r in self.receivers
            ],
        }
        if self.subspace is not None:
            out["subspace"] = {
                "dims": self.subspace.dims,
                "independent": self.subspace.independent,
                "pattern_check_applicable": self.subspace.pattern_check_applicable,
                "forbidden_patterns": [list(v) for v in self.subspace.forbidden_patterns],
            }
        return out


def receiver_map(code: LinearCode, rx: int) -> Gf2Matrix:
    """A_rx = [T_{1,rx} V_1 | ... | T_{L,rx} V_L], shape (N*q) x (L*K)."""
    ch = transfer_matrices(code.params)
    return hconcat([ch.transfer(tx, rx, code.N) @ code.V[tx] for tx in range(code.num_users)])


def decoder_exists(code: LinearCode) -> VerificationReport:
    target = identity_stack(code.K, code.num_users)
    receivers = []
    for rx in range(code.num_users):
        a = receiver_map(code, rx)
        receivers.append(ReceiverReport(index=rx + 1, rank=rank(a), decoder=solve_left(a, target)))
    report = VerificationReport(
        label=code.label,
        params=code.params.describe(),
        N=code.N,
        K=code.K,
        receivers=receivers,
    )
    logger.debug(
        f"[verification.decoder_exists] {code.label} {report.params} K={code.K} N={code.N} "
        f"{'✅ pass' if report.passed else '❌ fail'}"
    )
    return report


def _source_blocks(code: LinearCode, seed: int, trials: int, exhaustive: bool) -> Iterator[np.ndarray]:
    shape = (code.num_users, code.K)
    if exhaustive:
        total = code.num_users * code.K
        if total > MAX_EXHAUSTIVE_SOURCE_BITS:
            raise PreconditionError(f"exhaustive simulation over 2^{total} source tuples is too large")
        for bits in itertools.product((0, 1), repeat=total):
            yield np.array(bits, dtype=np.uint8).reshape(shape)
        return
    rng = np.random.default_rng(seed)
    yield from rng.integers(0, 2, size=(trials, *shape), dtype=np.uint8)


def simulate(code: LinearCode, seed: int = 0, trials: int = 1000, exhaustive: bool = False,
             report: Optional[VerificationReport] = None) -> bool:
    """Send random (or all) source blocks end to end and compare every decoded sum."""
    report = report or decoder_exists(code)
    if not report.passed:
        raise PreconditionError("simulate needs a code that passes decoder_exists")
    ch = transfer_matrices(code.params)
    decoders = [r.decoder for r in report.receivers]
    for sources in _source_blocks(code, seed, trials, exhaustive):
        per_source = Gf2Matrix.from_array(sources.T)  # column tx holds the bits of transmitter tx
        inputs = [
            split_uses(code.V[tx] @ per_source.select_columns([tx]), code.q)
            for tx in range(code.num_users)
        ]
        expected = Gf2Matrix.from_array(np.bitwise_xor.reduce(sources, axis=0)[:, np.newaxis])
        for rx, y in enumerate(receive(ch, inputs)):
            if decoders[rx] @ join_uses(y) != expected:
                logger.warning(f"[verification.simulate] ❌ receiver {rx + 1} decoded a wrong sum")
                return False
    return True


def rank_condition(code: LinearCode) -> tuple[int, int]:
    """(rank[V1, T V2, T^2 V1], rank[V2, T V1, T^2 V2]) for a three-slot alignment code."""
    params = code.params
    if code.label != Scheme.CASE2.value or not isinstance(params, NetworkParamsSym) or params.L != 2:
        raise PreconditionError(f"rank_condition needs a two-user case2 code, got {code.label}")
    half = code.K // 2
    if params.m < params.n:
        v1 = code.V[0].column_slice(0, half)
        v2 = code.V[1].column_slice(half, code.K)
    else:
        v1 = code.V[1].column_slice(0, half)
        v2 = code.V[0].column_slice(half, code.K)
    t = kron(Gf2Matrix.identity(code.N), shift_matrix(params.q, abs(params.n - params.m)))
    t2 = t @ t
    return (rank(hconcat([v1, t @ v2, t2 @ v1])), rank(hconcat([v2, t @ v1, t2 @ v2])))


def subspace_dims(code: LinearCode) -> SubspaceReport:
    params = code.params
    if not isinstance(params, NetworkParamsSym):
        raise PreconditionError("subspace_dims needs a symmetric network code")
    L, K, width = code.num_users, code.K, code.N * code.q
    seen = [receiver_map(code, rx).columns() for rx in range(L)]

    dims = [[0] * L for _ in range(K)]
    independent = []
    for rx in range(L):
        total = 0
        for i in range(K):
            dims[i][rx] = rank_of_bitsets((seen[rx][tx * K + i] for tx in range(L)), width)
            total += dims[i][rx]
        independent.append(rank_of_bitsets(seen[rx], width) == total)

    applicable = L >= 3 and params.m != params.n
    violations = []
    if applicable:
        for i in range(K):
            for rx in range(L):
                if dims[i][rx] != 1:
                    continue
                violations.extend(
                    (i + 1, rx + 1, other + 1)
                    for other in range(L)
                    if other != rx and dims[i][other] <= 2
                )
    return SubspaceReport(dims=dims, independent=independent,
                          pattern_check_applicable=applicable, forbidden_patterns=violations)


__all__ = [
    "ReceiverReport",
    "SubspaceReport",
    "VerificationReport",
    "receiver_map",
    "decoder_exists",
    "simulate",
    "rank_condition",
    "subspace_dims",
]
