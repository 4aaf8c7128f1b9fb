"""How the outranking structure responds to threshold and weight choices.

The concordance index takes finitely many values on a given instance, so
the graph is piecewise constant in the concordance threshold: for c_star in
the half-open interval just above one achieved index value up to and
including the next, the inclusive test admits exactly the same edges.
Exact mode therefore evaluates one point per achieved value (plus the
domain ends 0 and 1) instead of a blind grid.
"""

import hashlib
import math
from dataclasses import dataclass

import numpy as np

from .analysis import condense_cycles, _dag_kernel, _dag_levels, _expand
from .engine import (
    InvalidMatrixError,
    OutrankingGraph,
    concordance_matrix,
    discordance_matrix,
    discordance_test,
    outrank,
)
from .model import (
    DecisionMatrix,
    ThresholdConfig,
    UNBOUNDED,
    apply_directions,
    normalized_weight_vector,
    validate_matrix,
)


class EmptyGridError(ValueError):
    """Raised when grid mode is requested with no grid points."""


@dataclass(frozen=True, eq=False)
class SweepPoint:
    c_star: float
    edge_count: int
    kernel: frozenset[str]
    levels: tuple[frozenset[str], ...]
    graph_fingerprint: str


@dataclass(frozen=True, eq=False)
class SweepResult:
    points: tuple[SweepPoint, ...]
    critical_thresholds: tuple[float, ...]
    d_star: float
    weights: np.ndarray


@dataclass(frozen=True, eq=False)
class PerturbationSummary:
    """Fractions of perturbed-weight samples preserving the baseline
    kernel and the full level structure."""

    delta: float
    samples: int
    seed: int
    kernel_preserved_fraction: float
    levels_preserved_fraction: float
    baseline_kernel: frozenset[str]
    baseline_levels: tuple[frozenset[str], ...]


def graph_fingerprint(graph: OutrankingGraph) -> str:
    """Canonical hash of the edge set (node-order independent)."""
    edges = sorted(graph.edge_ids())
    payload = "|".join(f"{a}>{b}" for a, b in edges)
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()[:16]


def _graph_products(graph: OutrankingGraph) -> tuple[frozenset[str], tuple[frozenset[str], ...]]:
    condensed = condense_cycles(graph)
    kernel = _expand(graph, condensed, _dag_kernel(condensed.adjacency))
    levels = tuple(_expand(graph, condensed, level) for level in _dag_levels(condensed.adjacency))
    return kernel, levels


def threshold_sweep(
    matrix: DecisionMatrix,
    weights=None,
    d_star: float = UNBOUNDED,
    grid=None,
) -> SweepResult:
    """Evaluate the outranking structure along the concordance threshold.

    Exact mode (``grid=None``) evaluates at every distinct concordance
    index value plus 0 and 1; between consecutive critical thresholds the
    graph is provably constant. Grid mode evaluates at the given points
    (each in [0, 1]). Critical thresholds, the positive achieved index
    values, are reported either way.
    """
    result = validate_matrix(matrix)
    if not result.ok:
        raise InvalidMatrixError(result.violations)
    oriented = apply_directions(matrix)
    if weights is None:
        weights = oriented.weights
    normalized = normalized_weight_vector(weights)

    concordance = concordance_matrix(oriented, normalized)
    discordance = discordance_matrix(oriented)
    vetoes = tuple(c.veto for c in oriented.criteria)
    any_veto = any(v is not None for v in vetoes)
    n = oriented.n_alternatives

    off_diagonal = [
        float(concordance.indices[i, j]) for i in range(n) for j in range(n) if i != j
    ]
    distinct = sorted(set(off_diagonal))
    critical = tuple(v for v in distinct if v > 0.0)

    if grid is None:
        points_at = sorted({0.0, 1.0} | set(distinct))
    else:
        points_at = sorted({float(g) for g in grid})
        if not points_at:
            raise EmptyGridError("grid mode requires at least one threshold value")
        bad = [g for g in points_at if math.isnan(g) or not 0.0 <= g <= 1.0]
        if bad:
            raise ValueError(f"grid values out of [0,1]: {bad}")

    def discordance_pass(i: int, j: int) -> bool:
        opposing = oriented.scores[j] - oriented.scores[i] if any_veto else None
        return discordance_test(
            float(discordance.distances[i, j]), d_star, opposing, vetoes if any_veto else None
        )

    passes_veto = np.zeros((n, n), dtype=bool)
    for i in range(n):
        for j in range(n):
            if i != j:
                passes_veto[i, j] = discordance_pass(i, j)

    points = []
    for c_star in points_at:
        adjacency = np.zeros((n, n), dtype=bool)
        for i in range(n):
            for j in range(n):
                if i != j and concordance.indices[i, j] >= c_star and passes_veto[i, j]:
                    adjacency[i, j] = True
        graph = OutrankingGraph(
            alternatives=oriented.alternatives,
            adjacency=adjacency,
            thresholds=ThresholdConfig(c_star=c_star, d_star=d_star),
            weights=normalized,
        )
        kernel, levels = _graph_products(graph)
        points.append(
            SweepPoint(
                c_star=c_star,
                edge_count=graph.edge_count,
                kernel=kernel,
                levels=levels,
                graph_fingerprint=graph_fingerprint(graph),
            )
        )
    return SweepResult(
        points=tuple(points),
        critical_thresholds=critical,
        d_star=d_star,
        weights=normalized,
    )


def weight_perturbation(
    matrix: DecisionMatrix,
    weights=None,
    thresholds: ThresholdConfig | None = None,
    delta: float = 0.05,
    samples: int = 100,
    seed: int = 0,
) -> PerturbationSummary:
    """Sample weight vectors within +/- delta per coordinate (renormalized)
    and measure how often the kernel and level structure survive.

    Sampling is uniform per coordinate, clamped at zero, then renormalized;
    this is a screening device, not a calibrated robustness measure. Output
    is deterministic for a fixed seed.
    """
    if delta < 0:
        raise ValueError(f"delta must be >= 0, got {delta}")
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    result = validate_matrix(matrix)
    if not result.ok:
        raise InvalidMatrixError(result.violations)
    oriented = apply_directions(matrix)
    if thresholds is None:
        thresholds = ThresholdConfig()
    if weights is None:
        weights = oriented.weights
    baseline_weights = normalized_weight_vector(weights)

    baseline_graph = outrank(oriented, baseline_weights, thresholds)
    baseline_kernel, baseline_levels = _graph_products(baseline_graph)

    rng = np.random.default_rng(seed)
    m = oriented.n_criteria
    kernel_hits = 0
    level_hits = 0
    for _ in range(samples):
        shift = rng.uniform(-delta, delta, size=m)
        perturbed = np.clip(baseline_weights + shift, 0.0, None)
        if float(perturbed.sum()) == 0.0:
            perturbed = np.full(m, 1.0 / m)
        graph = outrank(oriented, perturbed, thresholds)
        kernel, levels = _graph_products(graph)
        if kernel == baseline_kernel:
            kernel_hits += 1
        if levels == baseline_levels:
            level_hits += 1
    return PerturbationSummary(
        delta=delta,
        samples=samples,
        seed=seed,
        kernel_preserved_fraction=kernel_hits / samples,
        levels_preserved_fraction=level_hits / samples,
        baseline_kernel=baseline_kernel,
        baseline_levels=baseline_levels,
    )
