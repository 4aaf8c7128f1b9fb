"""Domain types shared by the whole toolkit.

A decision problem is a :class:`DecisionMatrix`: alternatives (rows) scored
against weighted criteria (columns). Everything here is an immutable value;
all functions are pure, so instances can be shared freely across threads.
"""

import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Iterable, Sequence

import numpy as np

UNBOUNDED = math.inf
"""Distinguished discordance threshold meaning "never veto"."""

WEIGHT_SUM_TOLERANCE = 1e-9


class Direction(str, Enum):
    MAXIMIZE = "maximize"
    MINIMIZE = "minimize"


class AllZeroWeightsError(ValueError):
    """Raised when every criterion weight is zero and normalization is impossible."""


@dataclass(frozen=True)
class Alternative:
    """A candidate being ranked. ``label`` defaults to ``id``."""

    id: str
    label: str = ""

    def __post_init__(self):
        if not self.label:
            object.__setattr__(self, "label", self.id)


@dataclass(frozen=True)
class CriterionSpec:
    """An evaluation dimension: optimization direction, weight, optional veto.

    ``veto`` is a per-criterion cap on the opposing score difference an
    outranking claim may tolerate on this criterion; ``None`` means the
    criterion never vetoes on its own (only the global threshold applies).
    """

    id: str
    label: str = ""
    direction: Direction = Direction.MAXIMIZE
    weight: float = 1.0
    veto: float | None = None

    def __post_init__(self):
        if not self.label:
            object.__setattr__(self, "label", self.id)
        if not isinstance(self.direction, Direction):
            object.__setattr__(self, "direction", Direction(self.direction))
        object.__setattr__(self, "weight", float(self.weight))
        if self.veto is not None:
            object.__setattr__(self, "veto", float(self.veto))


@dataclass(frozen=True, eq=False)
class DecisionMatrix:
    """Alternatives x criteria performance scores.

    ``scores[i][j]`` is the performance of alternative ``i`` on criterion
    ``j``. Scores are stored as a read-only float64 array. Construction only
    enforces what is structurally required to hold the data (a rectangular
    2-D numeric array); semantic invariants are reported by
    :func:`validate_matrix` rather than raised, so that bad input can be
    diagnosed in full.
    """

    alternatives: tuple[Alternative, ...]
    criteria: tuple[CriterionSpec, ...]
    scores: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "alternatives", tuple(self.alternatives))
        object.__setattr__(self, "criteria", tuple(self.criteria))
        scores = np.array(self.scores, dtype=np.float64, copy=True)
        if scores.ndim != 2:
            raise ValueError(f"scores must be a 2-D array, got ndim={scores.ndim}")
        scores.setflags(write=False)
        object.__setattr__(self, "scores", scores)

    @property
    def n_alternatives(self) -> int:
        return len(self.alternatives)

    @property
    def n_criteria(self) -> int:
        return len(self.criteria)

    @property
    def alternative_ids(self) -> tuple[str, ...]:
        return tuple(a.id for a in self.alternatives)

    @property
    def criterion_ids(self) -> tuple[str, ...]:
        return tuple(c.id for c in self.criteria)

    @property
    def weights(self) -> np.ndarray:
        return np.array([c.weight for c in self.criteria], dtype=np.float64)


@dataclass(frozen=True)
class ThresholdConfig:
    """Concordance threshold ``c_star`` in [0, 1] and global discordance
    threshold ``d_star`` (>= 0, or :data:`UNBOUNDED`)."""

    c_star: float = 0.75
    d_star: float = UNBOUNDED

    def __post_init__(self):
        object.__setattr__(self, "c_star", float(self.c_star))
        object.__setattr__(self, "d_star", float(self.d_star))
        problems = validate_thresholds(self.c_star, self.d_star)
        if problems:
            raise ValueError("; ".join(v.message for v in problems))


@dataclass(frozen=True)
class Violation:
    """One invariant violation, located by a path into the offending value."""

    path: str
    message: str


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    violations: tuple[Violation, ...]

    def __bool__(self) -> bool:
        return self.ok


def validate_matrix(matrix: DecisionMatrix) -> ValidationResult:
    """Check every :class:`DecisionMatrix` invariant.

    Violations are data, not failures: all of them are collected and
    returned with row/column coordinates.
    """
    violations: list[Violation] = []
    n, m = matrix.n_alternatives, matrix.n_criteria

    if n < 2:
        violations.append(Violation("alternatives", f"need >= 2 alternatives, got {n}"))
    if m < 1:
        violations.append(Violation("criteria", f"need >= 1 criterion, got {m}"))

    seen_alt: dict[str, int] = {}
    for i, alt in enumerate(matrix.alternatives):
        if not alt.id:
            violations.append(Violation(f"alternatives[{i}].id", "alternative id is empty"))
        elif alt.id in seen_alt:
            violations.append(
                Violation(
                    f"alternatives[{i}].id",
                    f"duplicate alternative id {alt.id!r} (also at index {seen_alt[alt.id]})",
                )
            )
        else:
            seen_alt[alt.id] = i

    seen_crit: dict[str, int] = {}
    for j, crit in enumerate(matrix.criteria):
        if not crit.id:
            violations.append(Violation(f"criteria[{j}].id", "criterion id is empty"))
        elif crit.id in seen_crit:
            violations.append(
                Violation(
                    f"criteria[{j}].id",
                    f"duplicate criterion id {crit.id!r} (also at index {seen_crit[crit.id]})",
                )
            )
        else:
            seen_crit[crit.id] = j
        if not math.isfinite(crit.weight) or crit.weight < 0:
            violations.append(
                Violation(f"criteria[{j}].weight", f"weight must be finite and >= 0, got {crit.weight}")
            )
        if crit.veto is not None and (not math.isfinite(crit.veto) or crit.veto < 0):
            violations.append(
                Violation(f"criteria[{j}].veto", f"veto must be finite and >= 0, got {crit.veto}")
            )

    finite_weights = [c.weight for c in matrix.criteria if math.isfinite(c.weight) and c.weight >= 0]
    if matrix.criteria and finite_weights and not any(w > 0 for w in finite_weights):
        violations.append(Violation("criteria", "at least one criterion must have weight > 0"))

    if matrix.scores.shape != (n, m):
        violations.append(
            Violation(
                "scores",
                f"scores shape {matrix.scores.shape} does not match "
                f"{n} alternatives x {m} criteria",
            )
        )
    else:
        bad = np.argwhere(~np.isfinite(matrix.scores))
        for i, j in bad:
            violations.append(
                Violation(f"scores[{i}][{j}]", f"score at ({i},{j}) is not finite")
            )

    return ValidationResult(ok=not violations, violations=tuple(violations))


def validate_thresholds(c_star: float, d_star: float) -> list[Violation]:
    """Threshold invariants as violation data (used for request validation)."""
    violations: list[Violation] = []
    if math.isnan(c_star) or not 0.0 <= c_star <= 1.0:
        violations.append(Violation("c_star", f"c_star out of [0,1]: {c_star}"))
    if math.isnan(d_star) or d_star < 0.0:
        violations.append(Violation("d_star", f"d_star must be >= 0 or unbounded: {d_star}"))
    return violations


def normalized_weight_vector(weights: Sequence[float] | np.ndarray) -> np.ndarray:
    """Scale a nonnegative weight vector so it sums to 1 (exact summation).

    A vector already summing to 1 (within 1e-12) passes through unchanged,
    which makes normalization exactly idempotent. Raises
    :class:`AllZeroWeightsError` when every weight is zero.
    """
    values = [float(w) for w in weights]
    if any(not math.isfinite(w) or w < 0 for w in values):
        raise ValueError(f"weights must be finite and >= 0, got {values}")
    total = math.fsum(values)
    if total == 0.0:
        raise AllZeroWeightsError("cannot normalize: every weight is zero")
    if abs(total - 1.0) <= 1e-12:
        return np.array(values, dtype=np.float64)
    return np.array([w / total for w in values], dtype=np.float64)


def normalize_weights(criteria: Iterable[CriterionSpec]) -> tuple[CriterionSpec, ...]:
    """Return the criteria with weights rescaled to sum to 1, order preserved."""
    specs = tuple(criteria)
    scaled = normalized_weight_vector([c.weight for c in specs])
    return tuple(replace(c, weight=float(w)) for c, w in zip(specs, scaled))


def apply_directions(matrix: DecisionMatrix) -> DecisionMatrix:
    """Return an equivalent maximize-only matrix.

    Minimize-direction columns are negated and their direction flag set to
    maximize; maximize columns pass through unchanged. Applying the flip
    twice restores the original scores.
    """
    if all(c.direction is Direction.MAXIMIZE for c in matrix.criteria):
        return matrix
    scores = np.array(matrix.scores, copy=True)
    criteria = []
    for j, crit in enumerate(matrix.criteria):
        if crit.direction is Direction.MINIMIZE:
            scores[:, j] = -scores[:, j]
            criteria.append(replace(crit, direction=Direction.MAXIMIZE))
        else:
            criteria.append(crit)
    return DecisionMatrix(matrix.alternatives, tuple(criteria), scores)
