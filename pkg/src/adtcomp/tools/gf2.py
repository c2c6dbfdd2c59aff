"""
Dense linear algebra over GF(2).

Rows are stored as Python ints used as bitsets: bit j of a row is the entry
in column j. Every operation returns a new matrix; nothing mutates in place.
"""

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np
from typing_extensions import Self

from ..errors import DimensionMismatchError, PreconditionError
from ..schemas import MatrixPayload


def _lowbit_index(x: int) -> int:
    return (x & -x).bit_length() - 1


def _iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True, slots=True)
class Gf2Matrix:
    """Immutable bit matrix over GF(2)"""

    rows: int
    cols: int
    data: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatchError(f"negative shape {self.rows}x{self.cols}")
        if len(self.data) != self.rows:
            raise DimensionMismatchError(
                f"expected {self.rows} rows of data, got {len(self.data)}"
            )
        limit = 1 << self.cols
        for row in self.data:
            if row < 0 or row >= limit:
                raise DimensionMismatchError(f"row bitset {row} exceeds {self.cols} columns")

    # ===== Constructors =====

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Self:
        return cls(rows, cols, (0,) * rows)

    @classmethod
    def identity(cls, size: int) -> Self:
        return cls(size, size, tuple(1 << i for i in range(size)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int] | str], cols: Optional[int] = None) -> Self:
        """Build from nested 0/1 sequences or '0101' strings (first character = column 0)."""
        if not rows:
            return cls(0, cols or 0, ())
        width = len(rows[0]) if cols is None else cols
        packed = []
        for entry in rows:
            if len(entry) != width:
                raise DimensionMismatchError(f"ragged row of length {len(entry)}, expected {width}")
            value = 0
            for j, bit in enumerate(entry):
                if int(bit) & 1:
                    value |= 1 << j
            packed.append(value)
        return cls(len(rows), width, tuple(packed))

    @classmethod
    def from_columns(cls, rows: int, columns: Sequence[int]) -> Self:
        """Build from column bitsets (bit i of a column = entry in row i)."""
        data = [0] * rows
        for j, column in enumerate(columns):
            if column >> rows:
                raise DimensionMismatchError(f"column {j} exceeds {rows} rows")
            for i in _iter_bits(column):
                data[i] |= 1 << j
        return cls(rows, len(columns), tuple(data))

    @classmethod
    def column_vector(cls, bits: Sequence[int]) -> Self:
        return cls(len(bits), 1, tuple(int(b) & 1 for b in bits))

    @classmethod
    def from_array(cls, array: np.ndarray) -> Self:
        arr = np.asarray(array, dtype=np.uint8) & 1
        if arr.ndim != 2:
            raise DimensionMismatchError(f"expected a 2-D array, got {arr.ndim}-D")
        return cls.from_rows(arr.tolist(), cols=arr.shape[1])

    # ===== Accessors =====

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def get(self, i: int, j: int) -> int:
        return (self.data[i] >> j) & 1

    def column(self, j: int) -> int:
        """Column j as a bitset over rows."""
        value = 0
        for i, row in enumerate(self.data):
            if (row >> j) & 1:
                value |= 1 << i
        return value

    def columns(self) -> list[int]:
        return [self.column(j) for j in range(self.cols)]

    def is_zero(self) -> bool:
        return not any(self.data)

    # ===== Derived matrices =====

    def transpose(self) -> "Gf2Matrix":
        return Gf2Matrix(self.cols, self.rows, tuple(self.columns()))

    def select_columns(self, indices: Iterable[int]) -> "Gf2Matrix":
        picked = list(indices)
        data = []
        for row in self.data:
            value = 0
            for k, j in enumerate(picked):
                if (row >> j) & 1:
                    value |= 1 << k
            data.append(value)
        return Gf2Matrix(self.rows, len(picked), tuple(data))

    def column_slice(self, start: int, stop: int) -> "Gf2Matrix":
        return self.select_columns(range(start, stop))

    def __add__(self, other: "Gf2Matrix") -> "Gf2Matrix":
        if self.shape != other.shape:
            raise DimensionMismatchError(f"cannot add {self.shape} and {other.shape}")
        return Gf2Matrix(self.rows, self.cols, tuple(a ^ b for a, b in zip(self.data, other.data)))

    __xor__ = __add__

    def __matmul__(self, other: "Gf2Matrix") -> "Gf2Matrix":
        return mat_mul(self, other)

    # ===== Serialization =====

    def to_payload(self) -> MatrixPayload:
        # payload strings put column 0 first (most significant)
        return MatrixPayload(
            rows=self.rows,
            cols=self.cols,
            data=["".join(str((row >> j) & 1) for j in range(self.cols)) for row in self.data],
        )

    @classmethod
    def from_payload(cls, payload: MatrixPayload) -> Self:
        return cls.from_rows(payload.data, cols=payload.cols)

    def __str__(self) -> str:
        return "\n".join("".join(str((row >> j) & 1) for j in range(self.cols)) for row in self.data)


# ===== Operations =====

def shift_matrix(q: int, power: int) -> Gf2Matrix:
    """G^power for the q x q down-shift G with [G]_ij = 1{i = j+1}."""
    if q < 0 or power < 0:
        raise PreconditionError(f"shift_matrix needs q >= 0 and power >= 0, got q={q}, power={power}")
    return Gf2Matrix(q, q, tuple((1 << (i - power)) if i >= power else 0 for i in range(q)))


def mat_mul(a: Gf2Matrix, b: Gf2Matrix) -> Gf2Matrix:
    if a.cols != b.rows:
        raise DimensionMismatchError(f"cannot multiply {a.shape} by {b.shape}")
    out = []
    for row in a.data:
        acc = 0
        for j in _iter_bits(row):
            acc ^= b.data[j]
        out.append(acc)
    return Gf2Matrix(a.rows, b.cols, tuple(out))


def kron(a: Gf2Matrix, b: Gf2Matrix) -> Gf2Matrix:
    out = []
    for arow in a.data:
        set_cols = list(_iter_bits(arow))
        for brow in b.data:
            acc = 0
            for j in set_cols:
                acc |= brow << (j * b.cols)
            out.append(acc)
    return Gf2Matrix(a.rows * b.rows, a.cols * b.cols, tuple(out))


def hconcat(blocks: Sequence[Gf2Matrix]) -> Gf2Matrix:
    if not blocks:
        raise DimensionMismatchError("hconcat needs at least one block")
    rows = blocks[0].rows
    if any(block.rows != rows for block in blocks):
        raise DimensionMismatchError(f"hconcat row counts differ: {[blk.rows for blk in blocks]}")
    data = [0] * rows
    offset = 0
    for block in blocks:
        for i, row in enumerate(block.data):
            data[i] |= row << offset
        offset += block.cols
    return Gf2Matrix(rows, offset, tuple(data))


def vconcat(blocks: Sequence[Gf2Matrix]) -> Gf2Matrix:
    if not blocks:
        raise DimensionMismatchError("vconcat needs at least one block")
    cols = blocks[0].cols
    if any(block.cols != cols for block in blocks):
        raise DimensionMismatchError(f"vconcat column counts differ: {[blk.cols for blk in blocks]}")
    return Gf2Matrix(sum(blk.rows for blk in blocks), cols, tuple(r for blk in blocks for r in blk.data))


def coordinate_vector(i: int, n: int) -> Gf2Matrix:
    """e_i^(n) as an n x 1 column, 1-based."""
    if not 1 <= i <= n:
        raise PreconditionError(f"coordinate index {i} outside 1..{n}")
    return Gf2Matrix(n, 1, tuple(1 if r == i - 1 else 0 for r in range(n)))


def coordinate_block(first: int, last: int, n: int) -> Gf2Matrix:
    """[e_first ... e_last] in F2^n; empty (n x 0) when last < first."""
    if last < first:
        return Gf2Matrix.zeros(n, 0)
    return hconcat([coordinate_vector(i, n) for i in range(first, last + 1)])


class EchelonBasis:
    """Incremental row basis with lowest-column pivots.

    Each stored row may carry tag bits above `width`; reducing a vector
    against the basis XORs the tags too, which records the combination used.
    """

    def __init__(self, width: int):
        self.width = width
        self.mask = (1 << width) - 1
        self.pivots: dict[int, int] = {}

    def reduce(self, vector: int) -> int:
        while vector & self.mask:
            pivot = _lowbit_index(vector & self.mask)
            stored = self.pivots.get(pivot)
            if stored is None:
                break
            vector ^= stored
        return vector

    def insert(self, vector: int) -> bool:
        reduced = self.reduce(vector)
        if reduced & self.mask:
            self.pivots[_lowbit_index(reduced & self.mask)] = reduced
            return True
        return False

    def __len__(self) -> int:
        return len(self.pivots)


def rank_of_bitsets(vectors: Iterable[int], width: int) -> int:
    basis = EchelonBasis(width)
    for v in vectors:
        basis.insert(v)
    return len(basis)


def rank(a: Gf2Matrix) -> int:
    return rank_of_bitsets(a.data, a.cols)


def solve_left(a: Gf2Matrix, b: Gf2Matrix) -> Optional[Gf2Matrix]:
    """Return D with D @ a == b, or None when a row of b is outside the row space of a.

    Rows of `a` enter the pivot basis in order; every row of `b` is reduced
    against it and the recorded combination becomes the matching row of D.
    Rows of `a` that never serve as a pivot get coefficient zero.
    """
    if a.cols != b.cols:
        raise DimensionMismatchError(f"solve_left needs equal column counts, got {a.cols} and {b.cols}")
    basis = EchelonBasis(a.cols)
    for i, row in enumerate(a.data):
        basis.insert(row | (1 << (a.cols + i)))
    out = []
    for row in b.data:
        reduced = basis.reduce(row)
        if reduced & basis.mask:
            return None
        out.append(reduced >> a.cols)
    return Gf2Matrix(b.rows, a.rows, tuple(out))


def identity_stack(k: int, copies: int) -> Gf2Matrix:
    """[I_k | I_k | ... ] with `copies` blocks."""
    return hconcat([Gf2Matrix.identity(k)] * copies) if copies else Gf2Matrix.zeros(k, 0)


__all__ = [
    "Gf2Matrix",
    "EchelonBasis",
    "shift_matrix",
    "mat_mul",
    "kron",
    "hconcat",
    "vconcat",
    "coordinate_vector",
    "coordinate_block",
    "rank",
    "rank_of_bitsets",
    "solve_left",
    "identity_stack",
]
