"""Decision products derived from the outranking graph and the raw matrix.

The graph may contain cycles at permissive thresholds, so every graph
reading starts from its condensation: strongly connected components are
collapsed into super-nodes (members reported as mutually tied) and the
kernel / level structure is computed on the resulting acyclic graph, then
expanded back to alternatives.
"""

import math
from dataclasses import dataclass

import numpy as np

from .engine import (
    ConcordanceAnalysis,
    DiscordanceAnalysis,
    InvalidMatrixError,
    OutrankingGraph,
    concordance_matrix,
    discordance_matrix,
    outrank,
)
from .model import (
    DecisionMatrix,
    ThresholdConfig,
    apply_directions,
    normalized_weight_vector,
    validate_matrix,
)


@dataclass(frozen=True, eq=False)
class CondensedGraph:
    """Acyclic condensation of an outranking graph.

    ``components[k]`` holds the alternative indices of super-node k;
    ``component_of[i]`` maps alternative i to its component. Components are
    ordered by their smallest member index, so the condensation of an
    already acyclic graph is the identity up to that ordering.
    """

    components: tuple[frozenset[int], ...]
    component_of: tuple[int, ...]
    adjacency: np.ndarray

    @property
    def n(self) -> int:
        return len(self.components)


@dataclass(frozen=True)
class PositionEntry:
    rank: int
    alternative_id: str
    score: float


@dataclass(frozen=True)
class BenchmarkEntry:
    """Best-in-class alternatives for one criterion, plus the full score
    column for bar-chart rendering."""

    leaders: tuple[str, ...]
    scores: dict[str, float]


@dataclass(frozen=True, eq=False)
class RankingReport:
    """All decision products for one matrix + weights + thresholds run.

    Every graph-derived field comes from the same :class:`OutrankingGraph`,
    whose provenance records the thresholds and normalized weights.
    """

    kernel: frozenset[str]
    levels: tuple[frozenset[str], ...]
    incomparable_pairs: frozenset[tuple[str, str]]
    positioning: dict[str, tuple[PositionEntry, ...]]
    averages: dict[str, float]
    average_order: tuple[str, ...]
    benchmark_leaders: dict[str, BenchmarkEntry]
    graph: OutrankingGraph
    concordance: ConcordanceAnalysis
    discordance: DiscordanceAnalysis


def _strongly_connected_components(adjacency: np.ndarray) -> list[list[int]]:
    """Tarjan's algorithm, iterative (no recursion depth limit)."""
    n = adjacency.shape[0]
    successors = [list(np.flatnonzero(adjacency[v])) for v in range(n)]
    index_of = {}
    lowlink = {}
    on_stack = set()
    stack: list[int] = []
    components: list[list[int]] = []
    counter = 0

    for root in range(n):
        if root in index_of:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index_of[v] = lowlink[v] = counter
                counter += 1
                stack.append(v)
                on_stack.add(v)
            advanced = False
            for next_pi in range(pi, len(successors[v])):
                w = successors[v][next_pi]
                if w not in index_of:
                    work[-1] = (v, next_pi + 1)
                    work.append((w, 0))
                    advanced = True
                    break
                if w in on_stack:
                    lowlink[v] = min(lowlink[v], index_of[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])
            if lowlink[v] == index_of[v]:
                component = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    component.append(w)
                    if w == v:
                        break
                components.append(component)
    return components


def condense_cycles(graph: OutrankingGraph) -> CondensedGraph:
    """Collapse strongly connected components into super-nodes.

    The returned graph is acyclic; the component map lets callers expand
    results back to alternatives.
    """
    raw = _strongly_connected_components(graph.adjacency)
    raw.sort(key=min)
    component_of = [0] * graph.n
    for k, members in enumerate(raw):
        for v in members:
            component_of[v] = k
    k = len(raw)
    adjacency = np.zeros((k, k), dtype=bool)
    for i, j in graph.edges():
        ci, cj = component_of[i], component_of[j]
        if ci != cj:
            adjacency[ci, cj] = True
    return CondensedGraph(
        components=tuple(frozenset(members) for members in raw),
        component_of=tuple(component_of),
        adjacency=adjacency,
    )


def _dag_kernel(adjacency: np.ndarray) -> set[int]:
    """Unique internally and externally stable set of an acyclic digraph.

    Repeatedly takes nodes with no incoming edges from undecided nodes into
    the kernel and excludes their successors, until every node is decided.
    """
    n = adjacency.shape[0]
    undecided = set(range(n))
    kernel: set[int] = set()
    while undecided:
        frontier = {
            v
            for v in undecided
            if not any(adjacency[u, v] for u in undecided if u != v)
        }
        kernel |= frontier
        undecided -= frontier
        dominated = {
            v for v in undecided if any(adjacency[u, v] for u in frontier)
        }
        undecided -= dominated
    return kernel


def _dag_levels(adjacency: np.ndarray) -> list[set[int]]:
    """Peel the in-degree-zero set repeatedly: level 1 = undominated, etc."""
    n = adjacency.shape[0]
    remaining = set(range(n))
    levels: list[set[int]] = []
    while remaining:
        front = {
            v
            for v in remaining
            if not any(adjacency[u, v] for u in remaining if u != v)
        }
        levels.append(front)
        remaining -= front
    return levels


def _expand(graph: OutrankingGraph, condensed: CondensedGraph, nodes: set[int]) -> frozenset[str]:
    ids = [a.id for a in graph.alternatives]
    return frozenset(ids[v] for k in nodes for v in condensed.components[k])


def kernel(graph: OutrankingGraph) -> frozenset[str]:
    """Best-in-class set: mutually incomparable alternatives that together
    outrank everything else (computed on the condensation)."""
    condensed = condense_cycles(graph)
    return _expand(graph, condensed, _dag_kernel(condensed.adjacency))


def dominance_levels(graph: OutrankingGraph) -> tuple[frozenset[str], ...]:
    """Layers obtained by repeatedly removing undominated super-nodes;
    level 1 is undominated, later levels are successively worse in class."""
    condensed = condense_cycles(graph)
    return tuple(
        _expand(graph, condensed, level) for level in _dag_levels(condensed.adjacency)
    )


def incomparable_pairs(graph: OutrankingGraph) -> frozenset[tuple[str, str]]:
    """Unordered alternative pairs with no outranking edge either way."""
    ids = [a.id for a in graph.alternatives]
    pairs = set()
    for i in range(graph.n):
        for j in range(i + 1, graph.n):
            if not graph.adjacency[i, j] and not graph.adjacency[j, i]:
                pairs.add(tuple(sorted((ids[i], ids[j]))))
    return frozenset(pairs)


def positioning_table(matrix: DecisionMatrix) -> dict[str, tuple[PositionEntry, ...]]:
    """Per-criterion competition ranking (ties share the better rank, the
    next rank is skipped); tied alternatives are listed in id order."""
    table: dict[str, tuple[PositionEntry, ...]] = {}
    ids = matrix.alternative_ids
    for j, crit in enumerate(matrix.criteria):
        column = matrix.scores[:, j]
        order = sorted(range(len(ids)), key=lambda i: (-column[i], ids[i]))
        entries = []
        rank = 0
        previous_score = None
        for position, i in enumerate(order, start=1):
            score = float(column[i])
            if score != previous_score:
                rank = position
                previous_score = score
            entries.append(PositionEntry(rank=rank, alternative_id=ids[i], score=score))
        table[crit.id] = tuple(entries)
    return table


def average_scores(matrix: DecisionMatrix, weights=None) -> tuple[dict[str, float], tuple[str, ...]]:
    """Weighted mean score per alternative, plus ids sorted by mean
    descending (ties broken by id)."""
    if weights is None:
        weights = matrix.weights
    normalized = normalized_weight_vector(weights)
    averages = {}
    for i, alt_id in enumerate(matrix.alternative_ids):
        terms = [float(normalized[j]) * float(matrix.scores[i, j]) for j in range(matrix.n_criteria)]
        averages[alt_id] = math.fsum(terms)
    order = tuple(sorted(averages, key=lambda a: (-averages[a], a)))
    return averages, order


def benchmark_leaders(matrix: DecisionMatrix) -> dict[str, BenchmarkEntry]:
    """Per criterion: the max-score alternative(s) plus the full score column."""
    leaders: dict[str, BenchmarkEntry] = {}
    ids = matrix.alternative_ids
    for j, crit in enumerate(matrix.criteria):
        column = matrix.scores[:, j]
        best = float(np.max(column))
        tied = tuple(sorted(ids[i] for i in np.flatnonzero(column == best)))
        leaders[crit.id] = BenchmarkEntry(
            leaders=tied,
            scores={ids[i]: float(column[i]) for i in range(len(ids))},
        )
    return leaders


def build_report(
    matrix: DecisionMatrix,
    weights=None,
    thresholds: ThresholdConfig | None = None,
) -> RankingReport:
    """Run the full pipeline: orient, outrank, and derive every product.

    All graph-derived fields share one outranking run; positioning,
    averages and benchmark tables are computed on the oriented scores
    (minimize columns negated), so "higher is better" holds everywhere.
    """
    result = validate_matrix(matrix)
    if not result.ok:
        raise InvalidMatrixError(result.violations)
    oriented = apply_directions(matrix)
    if thresholds is None:
        thresholds = ThresholdConfig()
    if weights is None:
        weights = oriented.weights
    normalized = normalized_weight_vector(weights)

    graph = outrank(oriented, normalized, thresholds)
    condensed = condense_cycles(graph)
    kernel_set = _expand(graph, condensed, _dag_kernel(condensed.adjacency))
    levels = tuple(
        _expand(graph, condensed, level) for level in _dag_levels(condensed.adjacency)
    )
    averages, order = average_scores(oriented, normalized)
    return RankingReport(
        kernel=kernel_set,
        levels=levels,
        incomparable_pairs=incomparable_pairs(graph),
        positioning=positioning_table(oriented),
        averages=averages,
        average_order=order,
        benchmark_leaders=benchmark_leaders(oriented),
        graph=graph,
        concordance=concordance_matrix(oriented, normalized),
        discordance=discordance_matrix(oriented),
    )
