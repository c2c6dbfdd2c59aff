"""
Closed-form capacities and bounds, all as exact Fractions.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import PreconditionError
from .schemas import NetworkClass, NetworkParams2x2, NetworkParamsSym
from .tools.network import classify_closed_form


def upper_cutset(params: NetworkParams2x2) -> Fraction:
    return Fraction(min(params.as_tuple()))


def upper_nondegenerate(params: NetworkParams2x2) -> Optional[Fraction]:
    """(max(n11,n21) + max(n22,n12)) / 3, only for non-degenerate networks."""
    if classify_closed_form(params) is NetworkClass.DEGENERATE:
        return None
    return Fraction(max(params.n11, params.n21) + max(params.n22, params.n12), 3)


def capacity_degenerate(params: NetworkParams2x2) -> Fraction:
    if classify_closed_form(params) is not NetworkClass.DEGENERATE:
        raise PreconditionError(f"{params.describe()} is not degenerate")
    return Fraction(min(params.as_tuple()))


def capacity_symmetric(m: int, n: int) -> Fraction:
    if m == n:
        return Fraction(n)
    return min(Fraction(m), Fraction(n), Fraction(2 * max(m, n), 3))


def capacity_2x2(params: NetworkParams2x2) -> Optional[Fraction]:
    """Known capacity of a 2x2 network, or None where only bounds are known."""
    if classify_closed_form(params) is NetworkClass.DEGENERATE:
        return capacity_degenerate(params)
    if params.is_symmetric():
        return capacity_symmetric(params.n12, params.n11)
    return None


def normalized_capacity(m: int, n: int) -> Fraction:
    """min(alpha, 2/3) below alpha = 1, else 1; the empty network gives 0."""
    q = max(m, n)
    if q == 0:
        return Fraction(0)
    alpha = Fraction(min(m, n), q)
    return min(alpha, Fraction(2, 3)) if alpha < 1 else Fraction(1)


def separation_rate(m: int, n: int, L: int = 2) -> Fraction:
    """Decode every source then add: q * min(alpha, 1/L)."""
    q = max(m, n)
    if q == 0:
        return Fraction(0)
    return q * min(Fraction(min(m, n), q), Fraction(1, L))


def _require_luser(L: int) -> None:
    if L < 3:
        raise PreconditionError(f"L-user formulas need L >= 3, got L={L}; use the 2x2 formulas")


def luser_linear_capacity(m: int, n: int, L: int) -> Fraction:
    _require_luser(L)
    if m == n:
        return Fraction(n)
    return min(Fraction(m), Fraction(n), Fraction(max(m, n), 2))


def luser_upper_bound(m: int, n: int, L: int) -> Fraction:
    _require_luser(L)
    if m == n:
        return Fraction(n)
    return min(Fraction(m), Fraction(n), Fraction(L * max(m, n), 2 * L - 1))


def symmetric_target_rate(params: NetworkParamsSym) -> Fraction:
    """Rate the auto-selected linear scheme is expected to reach."""
    if params.L == 2:
        return capacity_symmetric(params.m, params.n)
    return luser_linear_capacity(params.m, params.n, params.L)


@dataclass(frozen=True)
class CapacityReport:
    """Every bound that applies to one parameter point"""
    params: NetworkParams2x2 | NetworkParamsSym
    cutset: Fraction
    nondegenerate_bound: Optional[Fraction]
    capacity: Optional[Fraction]
    separation: Optional[Fraction]
    luser_linear: Optional[Fraction] = None
    luser_upper: Optional[Fraction] = None

    def as_dict(self) -> dict[str, Optional[str]]:
        def fmt(value: Optional[Fraction]) -> Optional[str]:
            return None if value is None else str(value)

        return {
            "params": self.params.describe(),
            "cutset": fmt(self.cutset),
            "nondegenerate_bound": fmt(self.nondegenerate_bound),
            "capacity": fmt(self.capacity),
            "separation": fmt(self.separation),
            "luser_linear": fmt(self.luser_linear),
            "luser_upper": fmt(self.luser_upper),
        }


def capacity_report(params: NetworkParams2x2 | NetworkParamsSym) -> CapacityReport:
    if isinstance(params, NetworkParams2x2):
        separation = None
        if params.is_symmetric():
            separation = separation_rate(params.n12, params.n11)
        return CapacityReport(
            params=params,
            cutset=upper_cutset(params),
            nondegenerate_bound=upper_nondegenerate(params),
            capacity=capacity_2x2(params),
            separation=separation,
        )
    m, n, L = params.m, params.n, params.L
    two_user = params.to_2x2()
    if L == 2:
        return CapacityReport(
            params=params,
            cutset=upper_cutset(two_user),
            nondegenerate_bound=upper_nondegenerate(two_user),
            capacity=capacity_symmetric(m, n),
            separation=separation_rate(m, n),
        )
    # for L >= 3 the capacity is known only where the linear rate meets the upper bound
    linear, upper = luser_linear_capacity(m, n, L), luser_upper_bound(m, n, L)
    return CapacityReport(
        params=params,
        cutset=Fraction(min(m, n)),
        nondegenerate_bound=None,
        capacity=linear if linear == upper else None,
        separation=separation_rate(m, n, L),
        luser_linear=linear,
        luser_upper=upper,
    )


def normalized_curve(q: int) -> list[tuple[Fraction, Fraction, Fraction]]:
    """(alpha, normalized capacity, normalized separation rate) for m = 0..q, n = q."""
    if q < 1:
        raise PreconditionError(f"curve needs q >= 1, got {q}")
    return [
        (Fraction(m, q), normalized_capacity(m, q), separation_rate(m, q) / q)
        for m in range(q + 1)
    ]


__all__ = [
    "CapacityReport",
    "upper_cutset",
    "upper_nondegenerate",
    "capacity_degenerate",
    "capacity_symmetric",
    "capacity_2x2",
    "normalized_capacity",
    "separation_rate",
    "luser_linear_capacity",
    "luser_upper_bound",
    "symmetric_target_rate",
    "capacity_report",
    "normalized_curve",
]
