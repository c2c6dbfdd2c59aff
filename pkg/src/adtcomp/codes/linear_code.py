"""
LinearCode: per-transmitter beamforming over N channel uses, and the
operations that move codes between networks (repeat, embed, stack, mirror).
"""

import json
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from pydantic import ValidationError

from ..errors import CodeFormatError, DimensionMismatchError, PreconditionError
from ..schemas import CodePayload, NetworkParams2x2, NetworkParamsSym, Scheme
from ..tools.gf2 import Gf2Matrix, hconcat, kron

logger = logging.getLogger("adtcomp.codes")

Params = NetworkParams2x2 | NetworkParamsSym


@dataclass(frozen=True)
class LinearCode:
    """V[l] is the (N*q) x K beamforming matrix of transmitter l; column i carries source bit i."""
    params: Params
    N: int
    K: int
    V: tuple[Gf2Matrix, ...]
    label: str = Scheme.CUSTOM.value

    def __post_init__(self):
        if self.N < 1 or self.K < 0:
            raise DimensionMismatchError(f"invalid code size N={self.N}, K={self.K}")
        if len(self.V) != self.params.num_users:
            raise DimensionMismatchError(
                f"{self.params.describe()} has {self.params.num_users} transmitters, code has {len(self.V)}"
            )
        expected = (self.N * self.params.q, self.K)
        for idx, matrix in enumerate(self.V):
            if matrix.shape != expected:
                raise DimensionMismatchError(f"V[{idx}] has shape {matrix.shape}, expected {expected}")

    @property
    def q(self) -> int:
        return self.params.q

    @property
    def num_users(self) -> int:
        return len(self.V)

    @property
    def rate(self) -> Fraction:
        return Fraction(self.K, self.N)

    def transmits_every_bit(self) -> bool:
        return all(col != 0 for matrix in self.V for col in matrix.columns())

    def relabel(self, label: str | Scheme) -> "LinearCode":
        value = label.value if isinstance(label, Scheme) else label
        return LinearCode(self.params, self.N, self.K, self.V, value)

    # ===== Serialization =====

    def to_payload(self) -> CodePayload:
        return CodePayload(
            params=self.params,
            N=self.N,
            K=self.K,
            V=[matrix.to_payload() for matrix in self.V],
            label=self.label,
        )

    def to_json(self) -> str:
        return self.to_payload().model_dump_json(indent=2)

    @classmethod
    def from_payload(cls, payload: CodePayload) -> "LinearCode":
        try:
            return cls(
                params=payload.params,
                N=payload.N,
                K=payload.K,
                V=tuple(Gf2Matrix.from_payload(m) for m in payload.V),
                label=payload.label,
            )
        except DimensionMismatchError as e:
            raise CodeFormatError(f"code payload is inconsistent: {e}") from e

    @classmethod
    def from_json(cls, text: str) -> "LinearCode":
        try:
            payload = CodePayload.model_validate(json.loads(text))
        except (json.JSONDecodeError, ValidationError) as e:
            raise CodeFormatError(f"not a code payload: {e}") from e
        return cls.from_payload(payload)


def empty_code(params: Params, label: str | Scheme = Scheme.CUSTOM) -> LinearCode:
    """Rate-0 code: K = 0, one channel use."""
    value = label.value if isinstance(label, Scheme) else label
    return LinearCode(params, 1, 0, tuple(Gf2Matrix.zeros(params.q, 0) for _ in range(params.num_users)), value)


def code_from_levels(params: Params, assignments: Sequence[Sequence[Sequence[tuple[int, int]]]],
                     N: int = 1, label: str | Scheme = Scheme.CUSTOM) -> LinearCode:
    """Build a code from explicit placements.

    assignments[tx][bit] lists (slot, level) pairs (slot 0-based, level 1-based)
    on which transmitter `tx` sends source bit `bit`.
    """
    q = params.q
    K = len(assignments[0]) if assignments else 0
    matrices = []
    for per_tx in assignments:
        if len(per_tx) != K:
            raise DimensionMismatchError("every transmitter must carry the same number of bits")
        columns = []
        for placements in per_tx:
            column = 0
            for slot, level in placements:
                if not (0 <= slot < N and 1 <= level <= q):
                    raise PreconditionError(f"placement (slot {slot}, level {level}) outside {N} x {q}")
                column ^= 1 << (slot * q + level - 1)
            columns.append(column)
        matrices.append(Gf2Matrix.from_columns(N * q, columns))
    value = label.value if isinstance(label, Scheme) else label
    return LinearCode(params, N, K, tuple(matrices), value)


def repeat_code(code: LinearCode, times: int) -> LinearCode:
    """Run the code `times` times back to back; fresh source bits every repetition."""
    if times < 1:
        raise PreconditionError(f"repeat count must be >= 1, got {times}")
    if times == 1:
        return code
    eye = Gf2Matrix.identity(times)
    return LinearCode(code.params, code.N * times, code.K * times,
                      tuple(kron(eye, v) for v in code.V), code.label)


def embed_levels(code: LinearCode, params: Params, level_maps: Sequence[Sequence[int]]) -> LinearCode:
    """Move a sub-network code into a larger network.

    level_maps[tx][s-1] is the level of the larger network that plays the role
    of sublevel s at transmitter tx. Slots are kept.
    """
    if len(level_maps) != code.num_users or params.num_users != code.num_users:
        raise DimensionMismatchError("level maps must cover every transmitter")
    q_sub, q = code.q, params.q
    matrices = []
    for tx, v in enumerate(code.V):
        mapping = level_maps[tx]
        if len(mapping) != q_sub:
            raise DimensionMismatchError(f"transmitter {tx + 1}: {len(mapping)} levels mapped, need {q_sub}")
        data = [0] * (code.N * q)
        for slot in range(code.N):
            for s, level in enumerate(mapping):
                data[slot * q + level - 1] = v.data[slot * q_sub + s]
        matrices.append(Gf2Matrix(code.N * q, code.K, tuple(data)))
    return LinearCode(params, code.N, code.K, tuple(matrices), code.label)


def stack_codes(params: Params, parts: Sequence[LinearCode], label: str | Scheme) -> LinearCode:
    """Side-by-side union of codes on the same network; parts are first aligned to a common N."""
    value = label.value if isinstance(label, Scheme) else label
    if not parts:
        return empty_code(params, value)
    uses = math.lcm(*(part.N for part in parts))
    aligned = [repeat_code(part, uses // part.N) for part in parts]
    for part in aligned:
        if part.params != params:
            raise PreconditionError(f"cannot stack a code for {part.params.describe()} onto {params.describe()}")
    matrices = tuple(
        hconcat([part.V[tx] for part in aligned]) for tx in range(params.num_users)
    )
    return LinearCode(params, uses, sum(part.K for part in aligned), matrices, value)


def swap_transmitters(code: LinearCode, params: Params) -> LinearCode:
    """Mirror a two-user code: transmitter roles exchanged, placed on `params`."""
    if code.num_users != 2:
        raise PreconditionError("mirroring is defined for two-user codes")
    return LinearCode(params, code.N, code.K, (code.V[1], code.V[0]), code.label)


__all__ = [
    "LinearCode",
    "empty_code",
    "code_from_levels",
    "repeat_code",
    "embed_levels",
    "stack_codes",
    "swap_transmitters",
]
