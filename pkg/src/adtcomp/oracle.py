"""
Brute-force search for linear codes on small networks.

Exhaustive mode walks every beamforming tuple up to symmetry: transmitter 1's
matrix is fixed to the reduced column-echelon representative of its column
space (any invertible recombination of the K source bits, applied at every
transmitter, keeps decodability), and every transmitter needs full column rank
(a null vector of V_l would be a source pattern nobody can see). Randomized
mode draws tuples from per-trial seeds. Both modes shard across workers and
keep the witness with the smallest index, so the answer does not depend on
the worker count.
"""

import itertools
import logging
from dataclasses import dataclass
from functools import reduce
from typing import Optional, Sequence

import numpy as np

from .codes.linear_code import LinearCode
from .config import AdtConfig
from .errors import PreconditionError
from .schemas import NetworkParams2x2, NetworkParamsSym, OracleMode, OracleStatus, Scheme, parse_params
from .tools.gf2 import Gf2Matrix, rank_of_bitsets
from .tools.network import transfer_matrices
from .tools.parallel import run_in_processes
from .verification import decoder_exists

Params = NetworkParams2x2 | NetworkParamsSym

Columns = tuple[int, ...]


@dataclass
class OracleResult:
    status: OracleStatus
    params: Params
    K: int
    N: int
    mode: OracleMode
    space: int
    explored: int = 0
    witness: Optional[LinearCode] = None
    seed: Optional[int] = None
    diagnostic: str = ""

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "params": self.params.model_dump(),
            "K": self.K,
            "N": self.N,
            "mode": self.mode.value,
            "space": self.space,
            "seed": self.seed,
            "diagnostic": self.diagnostic,
            "witness": None if self.witness is None else self.witness.to_payload().model_dump(),
        }


# ===== Candidate spaces =====

def full_rank_tuples(dim: int, K: int) -> list[Columns]:
    """All K-tuples of nonzero columns in F2^dim with rank K, lexicographic."""
    return [
        cols for cols in itertools.product(range(1, 1 << dim), repeat=K)
        if rank_of_bitsets(cols, dim) == K
    ]


def _is_reduced_echelon(cols: Columns) -> bool:
    pivots = [(c & -c) for c in cols]
    if any(b <= a for a, b in zip(pivots, pivots[1:])):
        return False
    return all(not (other & p) for i, p in enumerate(pivots) for j, other in enumerate(cols) if i != j)


def echelon_representatives(dim: int, K: int) -> list[Columns]:
    """One column tuple per K-dimensional subspace of F2^dim."""
    return [cols for cols in full_rank_tuples(dim, K) if _is_reduced_echelon(cols)]


def count_full_rank(dim: int, K: int) -> int:
    return reduce(lambda acc, i: acc * ((1 << dim) - (1 << i)), range(K), 1) if K <= dim else 0


def count_subspaces(dim: int, K: int) -> int:
    if K > dim:
        return 0
    num = reduce(lambda acc, i: acc * ((1 << (dim - i)) - 1), range(K), 1)
    den = reduce(lambda acc, i: acc * ((1 << (i + 1)) - 1), range(K), 1)
    return num // den


def reduced_space_size(users: int, dim: int, K: int) -> int:
    return count_subspaces(dim, K) * count_full_rank(dim, K) ** (users - 1)


# ===== Decodability on column bitsets =====

class _Checker:
    """Receiver images of transmit columns per (tx, rx), filled in as columns are seen."""

    def __init__(self, params: Params, K: int, N: int):
        ch = transfer_matrices(params)
        self.users = params.num_users
        self.dim = N * params.q
        self.K = K
        self.transfers = [[ch.transfer(tx, rx, N).data for rx in range(self.users)] for tx in range(self.users)]
        self.images: list[list[dict[int, int]]] = [[{} for _ in range(self.users)] for _ in range(self.users)]

    def image(self, tx: int, rx: int, col: int) -> int:
        cache = self.images[tx][rx]
        seen = cache.get(col)
        if seen is None:
            seen = 0
            for r, row in enumerate(self.transfers[tx][rx]):
                seen |= ((row & col).bit_count() & 1) << r
            cache[col] = seen
        return seen

    def decodable(self, per_tx: Sequence[Columns]) -> bool:
        for rx in range(self.users):
            plain = []
            tagged = []
            for tx, cols in enumerate(per_tx):
                for i, col in enumerate(cols):
                    seen = self.image(tx, rx, col)
                    plain.append(seen)
                    tagged.append(seen | (1 << (self.dim + i)))
            if rank_of_bitsets(plain, self.dim) != rank_of_bitsets(tagged, self.dim + self.K):
                return False
        return True


# ===== Shard workers (top level so they pickle) =====

def _exhaustive_shard(params_data: dict, K: int, N: int, shard: int, shards: int):
    params = parse_params(params_data)
    checker = _Checker(params, K, N)
    reps = echelon_representatives(checker.dim, K)
    others = full_rank_tuples(checker.dim, K)
    explored = 0
    for r_index in range(shard, len(reps), shards):
        for o_index, rest in enumerate(itertools.product(others, repeat=checker.users - 1)):
            explored += 1
            candidate = (reps[r_index], *rest)
            if checker.decodable(candidate):
                return (r_index, o_index), candidate, explored
    return None, None, explored


def _random_shard(params_data: dict, K: int, N: int, seed: int, trials: int, shard: int, shards: int):
    params = parse_params(params_data)
    checker = _Checker(params, K, N)
    explored = 0
    for trial in range(shard, trials, shards):
        explored += 1
        rng = np.random.default_rng([seed, trial])
        bits = rng.integers(0, 2, size=(checker.users, K, checker.dim), dtype=np.uint8)
        candidate = tuple(
            tuple(sum(1 << int(j) for j in np.flatnonzero(column)) for column in bits[tx])
            for tx in range(checker.users)
        )
        if any(0 in cols for cols in candidate):
            continue
        if checker.decodable(candidate):
            return trial, candidate, explored
    return None, None, explored


# ===== Search driver =====

class OracleSearch:
    """Exhaustive or randomized search for a decodable linear code"""

    def __init__(self, config: Optional[AdtConfig] = None):
        self.config = config or AdtConfig()
        self.logger = logging.getLogger("OracleSearch")

    def search(self, params: Params, K: int, N: int = 1, mode: OracleMode = OracleMode.EXHAUSTIVE,
               budget: Optional[int] = None, trials: Optional[int] = None,
               seed: Optional[int] = None, jobs: Optional[int] = None) -> OracleResult:
        """
        Args:
            params: network to search on
            K: source bits per transmitter
            N: channel uses
            mode: exhaustive (can prove impossibility) or random (cannot)
            budget: cap on candidate tuples for exhaustive mode
            trials: number of random draws
            seed: base seed for random mode
            jobs: worker processes

        Returns:
            OracleResult with the smallest-index witness when one is found
        """
        if K < 1 or N < 1:
            raise PreconditionError(f"oracle needs K >= 1 and N >= 1, got K={K}, N={N}")
        if N > self.config.max_channel_uses:
            raise PreconditionError(f"N={N} exceeds max_channel_uses={self.config.max_channel_uses}")
        budget = self.config.oracle_budget if budget is None else budget
        trials = self.config.oracle_trials if trials is None else trials
        seed = self.config.seed if seed is None else seed
        jobs = max(1, self.config.jobs if jobs is None else jobs)
        users, dim = params.num_users, N * params.q
        space = reduced_space_size(users, dim, K)
        data = params.model_dump()

        if mode is OracleMode.EXHAUSTIVE:
            if space > budget:
                return OracleResult(
                    OracleStatus.UNKNOWN, params, K, N, mode, space,
                    diagnostic=f"search space {space} exceeds budget {budget} (raw 2^{users * dim * K})",
                )
            reps = count_subspaces(dim, K)
            shards = max(1, min(jobs, reps))
            args = [(data, K, N, shard, shards) for shard in range(shards)]
            results = run_in_processes(_exhaustive_shard, args, shards)
            found_status = OracleStatus.IMPOSSIBLE
            result_seed = None
        else:
            args = [(data, K, N, seed, trials, shard, jobs) for shard in range(jobs)]
            results = run_in_processes(_random_shard, args, jobs)
            found_status = OracleStatus.UNKNOWN
            result_seed = seed

        explored = sum(r[2] for r in results)
        hits = [(index, candidate) for index, candidate, _ in results if index is not None]
        if not hits:
            self.logger.info(f"[oracle.search] {params.describe()} K={K} N={N}: {found_status.value}")
            return OracleResult(found_status, params, K, N, mode, space, explored, seed=result_seed)

        _, candidate = min(hits, key=lambda hit: hit[0])
        witness = LinearCode(
            params, N, K,
            tuple(Gf2Matrix.from_columns(dim, list(cols)) for cols in candidate),
            Scheme.CUSTOM.value,
        )
        if not decoder_exists(witness).passed:
            raise RuntimeError("oracle witness failed decoder_exists")
        self.logger.info(f"[oracle.search] ✅ {params.describe()} K={K} N={N}: achievable")
        return OracleResult(OracleStatus.ACHIEVABLE, params, K, N, mode, space, explored,
                            witness=witness, seed=result_seed)


def oracle_search(params: Params, K: int, N: int = 1, budget: Optional[int] = None,
                  mode: OracleMode = OracleMode.EXHAUSTIVE, trials: Optional[int] = None,
                  seed: Optional[int] = None, jobs: int = 1) -> OracleResult:
    return OracleSearch().search(params, K, N, mode=mode, budget=budget, trials=trials, seed=seed, jobs=jobs)


__all__ = [
    "OracleResult",
    "OracleSearch",
    "oracle_search",
    "full_rank_tuples",
    "echelon_representatives",
    "count_full_rank",
    "count_subspaces",
    "reduced_space_size",
]
