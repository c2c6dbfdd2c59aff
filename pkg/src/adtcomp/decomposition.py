"""
Network decomposition by level coloring.

A coloring assigns every level of every transmitter and receiver a color and
a sublevel. When no channel edge joins two colors, each color class is an
independent symmetric network, and codes for the classes can be run side by
side. The three rules implemented here give (km, kn) = (m, n)^k, the odd split
(2m+1, 2n+1) = (m, n) x (m+1, n+1), and the gap-1 split by level mod |n-m|.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterator

import networkx as nx

from .errors import PreconditionError
from .schemas import NetworkParamsSym

logger = logging.getLogger("adtcomp.decomposition")

NodeLevel = tuple[str, int, int]  # ("tx" | "rx", user 1..L, level 1..q)
LevelColor = tuple[int, int]      # (color, sublevel 1..q_c)


@dataclass(frozen=True)
class SubModel:
    m_sub: int
    n_sub: int
    multiplicity: int = 1

    @property
    def label(self) -> str:
        return f"({self.m_sub},{self.n_sub})"


@dataclass(frozen=True, eq=True)
class ColoringMap:
    """Color and sublevel for each (node, level)"""
    assignments: dict[NodeLevel, LevelColor] = field(hash=False)
    num_colors: int

    def color_of(self, kind: str, user: int, level: int) -> LevelColor:
        return self.assignments[(kind, user, level)]

    def levels_of(self, kind: str, user: int, color: int) -> list[int]:
        """Original levels of one color at one node, ordered by sublevel."""
        found = [
            (sub, level)
            for (k, u, level), (c, sub) in self.assignments.items()
            if k == kind and u == user and c == color
        ]
        return [level for _, level in sorted(found)]

    def table(self) -> Iterator[tuple[str, int, int, int]]:
        """(node, level, color, sublevel) rows in node then level order."""
        def order(key: NodeLevel) -> tuple[int, int, int]:
            kind, user, level = key
            return (0 if kind == "tx" else 1, user, level)

        for key in sorted(self.assignments, key=order):
            kind, user, level = key
            color, sub = self.assignments[key]
            yield (f"{kind}{user}", level, color, sub)

    def with_assignment(self, key: NodeLevel, value: LevelColor) -> "ColoringMap":
        updated = dict(self.assignments)
        updated[key] = value
        return ColoringMap(updated, self.num_colors)


@dataclass(frozen=True)
class Decomposition:
    """Sub-model per color plus the coloring that realizes the split"""
    m: int
    n: int
    L: int
    color_models: tuple[tuple[int, int], ...]
    coloring: ColoringMap

    @property
    def params(self) -> NetworkParamsSym:
        return NetworkParamsSym(m=self.m, n=self.n, L=self.L)

    @property
    def factors(self) -> list[SubModel]:
        counts = Counter(self.color_models)
        return [SubModel(m_sub, n_sub, k) for (m_sub, n_sub), k in sorted(counts.items())]

    def factorization(self) -> str:
        return " x ".join(f"{f.label}^{f.multiplicity}" for f in self.factors)

    def totals(self) -> tuple[int, int]:
        return (sum(m for m, _ in self.color_models), sum(n for _, n in self.color_models))

    def with_coloring(self, coloring: ColoringMap) -> "Decomposition":
        return Decomposition(self.m, self.n, self.L, self.color_models, coloring)


def _color_by_rule(m: int, n: int, L: int, num_colors: int, rule: Callable[[int], int]) -> ColoringMap:
    q = max(m, n)
    per_level: dict[int, LevelColor] = {}
    seen: Counter = Counter()
    for level in range(1, q + 1):
        color = rule(level)
        seen[color] += 1
        per_level[level] = (color, seen[color])
    # same rule at every node
    assignments = {
        (kind, user, level): per_level[level]
        for kind in ("tx", "rx")
        for user in range(1, L + 1)
        for level in range(1, q + 1)
    }
    return ColoringMap(assignments, num_colors)


def decompose_scale(m: int, n: int, k: int, L: int = 2) -> Decomposition:
    """(km, kn) = (m, n)^k with color (p-1) mod k."""
    if k < 1:
        raise PreconditionError(f"scale factor must be >= 1, got {k}")
    coloring = _color_by_rule(k * m, k * n, L, k, lambda p: (p - 1) % k)
    return Decomposition(k * m, k * n, L, ((m, n),) * k, coloring)


def decompose_odd(m: int, n: int, L: int = 2) -> Decomposition:
    """(2a+1, 2b+1) = (a, b) x (a+1, b+1); odd levels form color 0, even levels color 1."""
    if m % 2 != 1 or n % 2 != 1:
        raise PreconditionError(f"decompose_odd needs two odd level counts, got ({m},{n})")
    a, b = (m - 1) // 2, (n - 1) // 2
    coloring = _color_by_rule(m, n, L, 2, lambda p: (p - 1) % 2)
    return Decomposition(m, n, L, ((a + 1, b + 1), (a, b)), coloring)


def full_decompose(m: int, n: int, L: int = 2) -> Decomposition:
    """Split (m, n) into gap-1 models by coloring level p with (p-1) mod |n-m|."""
    if m == n:
        raise PreconditionError(f"full_decompose needs m != n, got ({m},{n})")
    gap = abs(n - m)
    coloring = _color_by_rule(m, n, L, gap, lambda p: (p - 1) % gap)
    sizes = Counter(color for color, _ in (coloring.color_of("tx", 1, p) for p in range(1, max(m, n) + 1)))
    models = []
    for color in range(gap):
        q_c = sizes[color]
        models.append((q_c - 1, q_c) if m < n else (q_c, q_c - 1))
    dec = Decomposition(m, n, L, tuple(models), coloring)
    logger.debug(f"[decomposition.full_decompose] ({m},{n}) -> {dec.factorization()}")
    return dec


# ===== Structural check =====

def adt_graph(m: int, n: int, L: int) -> nx.DiGraph:
    """Level graph: an edge per bit pipe from a transmitter level to a receiver level."""
    q = max(m, n)
    graph = nx.DiGraph()
    for user in range(1, L + 1):
        for level in range(1, q + 1):
            graph.add_node(("tx", user, level))
            graph.add_node(("rx", user, level))
    for tx in range(1, L + 1):
        for rx in range(1, L + 1):
            levels = n if tx == rx else m
            shift = q - levels
            for level in range(1, levels + 1):
                graph.add_edge(("tx", tx, level), ("rx", rx, level + shift))
    return graph


def validate_coloring(params: NetworkParamsSym, dec: Decomposition) -> bool:
    """Check that every color class is exactly its declared sub-model and no edge crosses colors."""
    graph = adt_graph(params.m, params.n, params.L)
    coloring = dec.coloring

    if set(coloring.assignments) != set(graph.nodes):
        logger.debug("[decomposition.validate_coloring] coloring does not cover the level set")
        return False
    if any(not 0 <= color < len(dec.color_models) for color, _ in coloring.assignments.values()):
        return False

    for u, v in graph.edges:
        if coloring.assignments[u][0] != coloring.assignments[v][0]:
            logger.debug(f"[decomposition.validate_coloring] edge {u} -> {v} crosses colors")
            return False

    for color, (m_sub, n_sub) in enumerate(dec.color_models):
        members = [node for node, (c, _) in coloring.assignments.items() if c == color]
        relabel = {node: (node[0], node[1], coloring.assignments[node][1]) for node in members}
        if len(set(relabel.values())) != len(relabel):
            return False
        induced = nx.relabel_nodes(graph.subgraph(members), relabel, copy=True)
        expected = adt_graph(m_sub, n_sub, params.L)
        if set(induced.nodes) != set(expected.nodes) or set(induced.edges) != set(expected.edges):
            logger.debug(f"[decomposition.validate_coloring] color {color} is not ({m_sub},{n_sub})")
            return False
    return True


__all__ = [
    "SubModel",
    "ColoringMap",
    "Decomposition",
    "decompose_scale",
    "decompose_odd",
    "full_decompose",
    "adt_graph",
    "validate_coloring",
]
