"""
AdtEngine - Main interface for capacity, construction and verification

The AdtEngine gives the CLI (and notebooks) one object that evaluates the
capacity formulas, classifies networks, decomposes symmetric models, builds
and verifies codes, runs the oracle and emits capacity sweeps. Constructed
codes are cached per engine in session_context.
"""

import logging
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .capacity import (
    CapacityReport,
    capacity_report,
    capacity_symmetric,
    luser_linear_capacity,
    luser_upper_bound,
    normalized_curve,
    separation_rate,
    upper_nondegenerate,
)
from .codes.linear_code import LinearCode
from .codes.schemes import (
    construct_case1,
    construct_case2,
    construct_composed,
    construct_degenerate,
    construct_gap1_L2,
    construct_luser_gap1,
    construct_uncoded,
)
from .config import AdtConfig
from .decomposition import Decomposition, decompose_odd, decompose_scale, full_decompose, validate_coloring
from .errors import AdtError, PreconditionError
from .oracle import OracleResult, OracleSearch
from .schemas import (
    CurveSample,
    NetworkClass,
    NetworkParams2x2,
    NetworkParamsSym,
    OracleMode,
    Orientation,
    Scheme,
    SweepRow,
)
from .selection import construct_auto
from .tools.network import ClassificationResult, claim1_check, classify_closed_form, classify_constructive
from .tools.parallel import gather_in_processes
from .verification import VerificationReport, decoder_exists, simulate, subspace_dims

Params = NetworkParams2x2 | NetworkParamsSym


@dataclass
class ClassifyOutcome:
    """Both degeneracy tests plus, for symmetric models, the strong-receiver check"""
    params: Params
    closed_form: NetworkClass
    constructive: ClassificationResult
    claim1: Optional[bool] = None

    @property
    def agree(self) -> bool:
        return self.closed_form is self.constructive.network_class


def _pair(value: Fraction) -> tuple[int, int]:
    return value.numerator, value.denominator


def _sweep_point(m: int, n: int, L: int, formulas_only: bool) -> dict:
    """One sweep row; module level so process pools can pickle it."""
    q = max(m, n)
    alpha = Fraction(min(m, n), q) if q else Fraction(0)
    if L == 2:
        capacity = capacity_symmetric(m, n)
        upper = upper_nondegenerate(NetworkParamsSym(m=m, n=n, L=2).to_2x2())
    else:
        capacity = luser_linear_capacity(m, n, L)
        upper = luser_upper_bound(m, n, L)
    row = SweepRow(
        m=m, n=n, L=L,
        alpha_num=alpha.numerator, alpha_den=alpha.denominator,
        capacity_num=capacity.numerator, capacity_den=capacity.denominator,
        sep_num=separation_rate(m, n, L).numerator, sep_den=separation_rate(m, n, L).denominator,
        cutset=min(m, n),
    )
    if upper is not None:
        row.upper3_num, row.upper3_den = _pair(upper)
    if not formulas_only:
        code = construct_auto(NetworkParamsSym(m=m, n=n, L=L))
        row.scheme = code.label
        if decoder_exists(code).passed:
            row.achieved_num, row.achieved_den = _pair(code.rate)
    return row.model_dump()


class AdtEngine:
    def __init__(self, config: Optional[AdtConfig] = None):
        """
        Initialize AdtEngine

        Args:
            config: tunables for search, simulation and sweeps (defaults from AdtConfig)
        """
        self.config = config or AdtConfig()
        self.logger = logging.getLogger("AdtEngine")
        self.oracle = OracleSearch(self.config)

        # Session context for in-memory storage
        self.session_context = {}

    # ===== Formulas =====

    def capacity(self, params: Params) -> CapacityReport:
        return capacity_report(params)

    def curve(self, q: int) -> list[CurveSample]:
        samples = []
        for alpha, normcap, sepnorm in normalized_curve(q):
            samples.append(CurveSample(
                alpha_num=alpha.numerator, alpha_den=alpha.denominator,
                normcap_num=normcap.numerator, normcap_den=normcap.denominator,
                sepnorm_num=sepnorm.numerator, sepnorm_den=sepnorm.denominator,
            ))
        return samples

    # ===== Structure =====

    def classify(self, params: Params) -> ClassifyOutcome:
        two_user = params if isinstance(params, NetworkParams2x2) else params.to_2x2()
        outcome = ClassifyOutcome(
            params=params,
            closed_form=classify_closed_form(two_user),
            constructive=classify_constructive(two_user),
        )
        if isinstance(params, NetworkParamsSym) and params.m != params.n:
            outcome.claim1 = claim1_check(params)
        if not outcome.agree:
            self.logger.info(f"[adtcomp_engine.classify] closed form and constructive test differ on {params.describe()}")
        return outcome

    def decompose(self, params: NetworkParamsSym, rule: str = "full", k: Optional[int] = None) -> Decomposition:
        """
        Split a symmetric model into smaller symmetric models.

        Args:
            params: symmetric network
            rule: "full" (gap-1 models), "odd" (two colors) or "scale" (k colors)
            k: number of colors for the scale rule
        """
        m, n, L = params.m, params.n, params.L
        if rule == "full":
            dec = full_decompose(m, n, L)
        elif rule == "odd":
            dec = decompose_odd(m, n, L)
        elif rule == "scale":
            if k is None or k < 1 or m % k or n % k:
                raise PreconditionError(f"the scale rule needs k >= 1 dividing both m and n, got k={k}")
            dec = decompose_scale(m // k, n // k, k, L)
        else:
            raise PreconditionError(f"unknown decomposition rule {rule!r}")
        if not validate_coloring(params, dec):
            raise AdtError(f"coloring for {params.describe()} failed validation")
        self.logger.info(f"[adtcomp_engine.decompose] {params.describe()} -> {dec.factorization()}")
        return dec

    # ===== Codes =====

    def construct(self, params: Params, scheme: Scheme = Scheme.AUTO) -> LinearCode:
        context_key = ("construct", params, scheme)
        if context_key in self.session_context:
            self.logger.debug("[adtcomp_engine.construct] Using session context")
            return self.session_context[context_key]

        code = self._build(params, scheme)
        self.session_context[context_key] = code
        self.logger.info(f"[adtcomp_engine.construct] {params.describe()} {code.label}: K={code.K} N={code.N}")
        return code

    def _build(self, params: Params, scheme: Scheme) -> LinearCode:
        if scheme is Scheme.AUTO:
            return construct_auto(params)
        if scheme is Scheme.DEGENERATE:
            return construct_degenerate(params if isinstance(params, NetworkParams2x2) else params.to_2x2())
        if not isinstance(params, NetworkParamsSym):
            raise PreconditionError(f"scheme {scheme.value} needs symmetric parameters")

        m, n, L = params.m, params.n, params.L
        if scheme is Scheme.UNCODED:
            return construct_uncoded(m, n, L)
        if scheme is Scheme.COMPOSE:
            return construct_composed(m, n, L)
        if scheme in (Scheme.CASE1, Scheme.CASE2, Scheme.GAP1) and L != 2:
            raise PreconditionError(f"scheme {scheme.value} is a two-user scheme, got L={L}")
        if scheme is Scheme.CASE1:
            return construct_case1(m, n)
        if scheme is Scheme.CASE2:
            return construct_case2(m, n)

        if abs(m - n) != 1:
            raise PreconditionError(f"scheme {scheme.value} needs a gap-1 model, got {params.describe()}")
        orientation = Orientation.UP if m < n else Orientation.DOWN
        if scheme is Scheme.GAP1:
            return construct_gap1_L2(min(m, n), orientation)
        if scheme is Scheme.LUSER:
            return construct_luser_gap1(max(m, n), orientation, L)
        raise PreconditionError(f"scheme {scheme.value} cannot be constructed")

    def verify(self, code: LinearCode, dims: bool = False, simulate_trials: Optional[int] = None,
               exhaustive: bool = False) -> VerificationReport:
        """decoder_exists, then optional subspace table and end-to-end simulation."""
        trials = self.config.simulate_trials if simulate_trials is None else simulate_trials
        report = decoder_exists(code)
        if dims and isinstance(code.params, NetworkParamsSym):
            report.subspace = subspace_dims(code)
        if report.passed and (trials > 0 or exhaustive):
            report.simulated = simulate(code, seed=self.config.seed, trials=trials,
                                        exhaustive=exhaustive, report=report)
        mark = "✅" if report.passed else "❌"
        self.logger.info(f"[adtcomp_engine.verify] {mark} {code.label} {report.params}")
        return report

    def search(self, params: Params, K: int, N: int = 1, mode: OracleMode = OracleMode.EXHAUSTIVE,
               trials: Optional[int] = None, seed: Optional[int] = None,
               jobs: Optional[int] = None) -> OracleResult:
        return self.oracle.search(params, K, N, mode=mode, trials=trials, seed=seed, jobs=jobs)

    # ===== Sweeps =====

    async def sweep(self, n: int, L: int, m_values: Sequence[int], formulas_only: bool = False,
                    jobs: Optional[int] = None) -> list[SweepRow]:
        """One row per m, in the order given; rows are identical for any job count."""
        if L < 2:
            raise PreconditionError(f"sweep needs L >= 2, got {L}")
        jobs = self.config.jobs if jobs is None else jobs
        start_time = time.time()
        args = [(m, n, L, formulas_only) for m in m_values]
        rows = [SweepRow(**data) for data in await gather_in_processes(_sweep_point, args, jobs)]
        failed = [row.m for row in rows if not formulas_only and row.achieved_num is None]
        if failed:
            self.logger.warning(f"[adtcomp_engine.sweep] ❌ no verified code for m in {failed}")
        self.logger.info(f"[adtcomp_engine.sweep] {len(rows)} rows in {time.time() - start_time:.2f}s")
        return rows

    def clear_cache(self):
        """Clear the session context"""
        self.session_context.clear()
        self.logger.debug("[adtcomp_engine.clear_cache] Session context cleared")


__all__ = ["AdtEngine", "ClassifyOutcome"]
