"""Outranking computation core.

For an ordered pair of alternatives (i, j) the claim "i outranks j" is
examined by two tests:

* concordance: the total normalized weight of criteria on which i scores at
  least as well as j (ties count for both directions) must reach the
  threshold ``c_star`` (inclusive);
* discordance: the strongest single-criterion objection, the largest
  opposing score difference ``score[j][k] - score[i][k]``, must not exceed
  the global threshold ``d_star``, nor any configured per-criterion veto.

The relation S holds exactly when both tests pass. The engine compares
scores as stored (maximize convention); callers with minimize-direction
criteria must orient the matrix with :func:`outrank.model.apply_directions`
first.
"""

import math
from dataclasses import dataclass

import numpy as np

from .model import (
    Alternative,
    DecisionMatrix,
    Direction,
    ThresholdConfig,
    Violation,
    WEIGHT_SUM_TOLERANCE,
    normalized_weight_vector,
    validate_matrix,
)


class SelfComparisonError(ValueError):
    """Raised for pairwise operations called with i == j."""


class IndexOutOfRangeError(IndexError):
    """Raised when an alternative index is outside the matrix."""


class UnnormalizedWeightsError(ValueError):
    """Raised when a weight vector handed to an index computation does not sum to 1."""


class UnorientedMatrixError(ValueError):
    """Raised when a minimize-direction matrix reaches the maximize-only engine."""


class InvalidMatrixError(ValueError):
    """Raised by pipeline entry points for matrices failing validation."""

    def __init__(self, violations: tuple[Violation, ...]):
        self.violations = violations
        super().__init__("; ".join(f"{v.path}: {v.message}" for v in violations))


@dataclass(frozen=True, eq=False)
class ConcordanceAnalysis:
    """Per-pair concordance subsystems and indices.

    ``sets[i][j]`` is the set of criterion indices on which alternative i
    scores at least as well as j; ``indices[i][j]`` the corresponding total
    normalized weight. Diagonal entries are undefined by convention (empty
    set, NaN index).
    """

    sets: tuple[tuple[frozenset[int], ...], ...]
    indices: np.ndarray


@dataclass(frozen=True, eq=False)
class DiscordanceAnalysis:
    """``distances[i][j]`` is the strongest opposing difference against the
    claim "i outranks j", clamped below at 0; diagonal is 0."""

    distances: np.ndarray


@dataclass(frozen=True, eq=False)
class OutrankingGraph:
    """Directed outranking relation over the alternatives.

    ``adjacency[i][j]`` is True iff alternative i outranks alternative j.
    The thresholds and normalized weight vector that produced the relation
    are kept as provenance.
    """

    alternatives: tuple[Alternative, ...]
    adjacency: np.ndarray
    thresholds: ThresholdConfig
    weights: np.ndarray

    def __post_init__(self):
        adjacency = np.array(self.adjacency, dtype=bool, copy=True)
        adjacency.setflags(write=False)
        object.__setattr__(self, "adjacency", adjacency)
        weights = np.array(self.weights, dtype=np.float64, copy=True)
        weights.setflags(write=False)
        object.__setattr__(self, "weights", weights)

    @property
    def n(self) -> int:
        return len(self.alternatives)

    def edges(self) -> list[tuple[int, int]]:
        """Edge list as (source, target) index pairs, row-major order."""
        return [(int(i), int(j)) for i, j in np.argwhere(self.adjacency)]

    def edge_ids(self) -> list[tuple[str, str]]:
        ids = [a.id for a in self.alternatives]
        return [(ids[i], ids[j]) for i, j in self.edges()]

    @property
    def edge_count(self) -> int:
        return int(self.adjacency.sum())


def _check_pair(matrix: DecisionMatrix, i: int, j: int) -> None:
    n = matrix.n_alternatives
    if not (0 <= i < n and 0 <= j < n):
        raise IndexOutOfRangeError(f"alternative index out of range: ({i},{j}) for n={n}")
    if i == j:
        raise SelfComparisonError(f"pairwise comparison of alternative {i} with itself")


def _check_normalized(weights: np.ndarray) -> None:
    if abs(math.fsum(float(w) for w in weights) - 1.0) > WEIGHT_SUM_TOLERANCE:
        raise UnnormalizedWeightsError(f"weights must sum to 1, got {list(map(float, weights))}")


def _require_maximize(matrix: DecisionMatrix) -> None:
    bad = [c.id for c in matrix.criteria if c.direction is not Direction.MAXIMIZE]
    if bad:
        raise UnorientedMatrixError(
            f"engine is maximize-only; apply_directions first (minimize criteria: {bad})"
        )


def concordance_set(matrix: DecisionMatrix, i: int, j: int) -> frozenset[int]:
    """Criteria on which alternative i scores at least as well as j.

    Ties are included, so a tying criterion belongs to the concordance set
    of both directions. Comparison is exact on stored values.
    """
    _check_pair(matrix, i, j)
    mask = matrix.scores[i] >= matrix.scores[j]
    return frozenset(int(k) for k in np.flatnonzero(mask))


def concordance_index(matrix: DecisionMatrix, weights, i: int, j: int) -> float:
    """Total normalized weight of the concordance set of (i, j), in [0, 1].

    A full concordance set (unanimity) yields exactly 1.0, the whole
    normalized weight by definition, even when the stored weights carry
    representation-level rounding.
    """
    weights = np.asarray(weights, dtype=np.float64)
    _check_normalized(weights)
    selected = concordance_set(matrix, i, j)
    if len(selected) == matrix.n_criteria:
        return 1.0
    total = math.fsum(float(weights[k]) for k in sorted(selected))
    return min(1.0, total)


def concordance_matrix(matrix: DecisionMatrix, weights) -> ConcordanceAnalysis:
    """All pairwise concordance sets and indices (diagonal undefined)."""
    weights = np.asarray(weights, dtype=np.float64)
    _check_normalized(weights)
    n = matrix.n_alternatives
    sets: list[tuple[frozenset[int], ...]] = []
    indices = np.full((n, n), np.nan, dtype=np.float64)
    m = matrix.n_criteria
    for i in range(n):
        row: list[frozenset[int]] = []
        for j in range(n):
            if i == j:
                row.append(frozenset())
                continue
            selected = concordance_set(matrix, i, j)
            row.append(selected)
            if len(selected) == m:
                indices[i, j] = 1.0
            else:
                indices[i, j] = min(1.0, math.fsum(float(weights[k]) for k in sorted(selected)))
        sets.append(tuple(row))
    return ConcordanceAnalysis(sets=tuple(sets), indices=indices)


def concordance_test(c: float, c_star: float) -> int:
    """1 iff the concordance index reaches the threshold (inclusive), else 0."""
    return 1 if c >= c_star else 0


def discordance_index(matrix: DecisionMatrix, i: int, j: int) -> float:
    """Strongest opposing score difference against "i outranks j".

    max over criteria of ``score[j][k] - score[i][k]``, clamped below at 0;
    0 whenever row i weakly dominates row j.
    """
    _check_pair(matrix, i, j)
    if matrix.n_criteria == 0:
        return 0.0
    return max(0.0, float(np.max(matrix.scores[j] - matrix.scores[i])))


def discordance_matrix(matrix: DecisionMatrix) -> DiscordanceAnalysis:
    """All pairwise discordance distances (diagonal 0)."""
    n = matrix.n_alternatives
    distances = np.zeros((n, n), dtype=np.float64)
    for i in range(n):
        for j in range(n):
            if i != j:
                distances[i, j] = discordance_index(matrix, i, j)
    return DiscordanceAnalysis(distances=distances)


def discordance_test(
    d: float,
    d_star: float = math.inf,
    opposing: "np.ndarray | None" = None,
    vetoes: "tuple[float | None, ...] | None" = None,
) -> bool:
    """True iff no objection blocks the outranking claim.

    The global test ``d <= d_star`` is inclusive. When per-criterion vetoes
    are configured, ``opposing`` must carry the raw per-criterion opposing
    differences; any difference strictly above its veto fails the test.
    With an unbounded ``d_star`` and no vetoes the test always passes.
    """
    if d > d_star:
        return False
    if vetoes is not None and any(v is not None for v in vetoes):
        if opposing is None:
            raise ValueError("per-criterion vetoes require the opposing differences")
        for diff, veto in zip(opposing, vetoes):
            if veto is not None and float(diff) > veto:
                return False
    return True


def outrank(
    matrix: DecisionMatrix,
    weights=None,
    thresholds: ThresholdConfig | None = None,
) -> OutrankingGraph:
    """Build the outranking relation S: edge (i, j) iff both tests pass.

    ``weights`` may be any nonnegative vector (taken from the matrix
    criteria when omitted); it is normalized here. The matrix must be valid
    and maximize-oriented.
    """
    result = validate_matrix(matrix)
    if not result.ok:
        raise InvalidMatrixError(result.violations)
    _require_maximize(matrix)
    if thresholds is None:
        thresholds = ThresholdConfig()
    if weights is None:
        weights = matrix.weights
    normalized = normalized_weight_vector(weights)

    concordance = concordance_matrix(matrix, normalized)
    discordance = discordance_matrix(matrix)
    vetoes = tuple(c.veto for c in matrix.criteria)
    any_veto = any(v is not None for v in vetoes)

    n = matrix.n_alternatives
    adjacency = np.zeros((n, n), dtype=bool)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if concordance_test(concordance.indices[i, j], thresholds.c_star) != 1:
                continue
            opposing = matrix.scores[j] - matrix.scores[i] if any_veto else None
            if discordance_test(
                discordance.distances[i, j], thresholds.d_star, opposing, vetoes if any_veto else None
            ):
                adjacency[i, j] = True
    return OutrankingGraph(
        alternatives=matrix.alternatives,
        adjacency=adjacency,
        thresholds=thresholds,
        weights=normalized,
    )
