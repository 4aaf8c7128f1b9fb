"""Scikit-learn estimator interface over the outranking pipeline."""

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_array, check_is_fitted

from .analysis import build_report
from .model import (
    Alternative,
    CriterionSpec,
    DecisionMatrix,
    Direction,
    ThresholdConfig,
    UNBOUNDED,
)


class ElectreRanker(BaseEstimator):
    """Rank the rows of a performance matrix by outranking dominance.

    Follows the fit/predict convention of clustering-style estimators: the
    structure learned by ``fit`` describes the fitted rows themselves, and
    ``fit_predict`` returns a dominance-level label per row (0 = best in
    class, larger = dominated by more layers).

    Parameters
    ----------
    c_star : float, default=0.75
        Concordance threshold: minimum total criterion weight that must
        agree with "row i outranks row j" (inclusive).
    d_star : float or None, default=None
        Global discordance threshold; None means unbounded (no veto).
    weights : array-like of shape (n_criteria,) or None
        Criterion weights, normalized internally. None means equal.
    directions : sequence of {"maximize", "minimize"} or None
        Optimization direction per column. None means all maximize.
    vetoes : sequence of float or None entries, or None
        Per-criterion veto thresholds on opposing score differences.

    Attributes
    ----------
    labels_ : ndarray of shape (n_alternatives,)
        Dominance-level index per row (0-based).
    kernel_ : ndarray of int
        Row indices of the kernel (best-in-class set).
    levels_ : list of ndarray of int
        Row indices per dominance level, best first.
    adjacency_ : ndarray of shape (n, n), bool
        Outranking relation: ``adjacency_[i, j]`` iff row i outranks row j.
    concordance_ : ndarray of shape (n, n)
        Concordance indices (NaN diagonal).
    discordance_ : ndarray of shape (n, n)
        Discordance distances (0 diagonal).
    report_ : RankingReport
        Full domain report (ids are row indices as strings).
    """

    def __init__(self, c_star=0.75, d_star=None, weights=None, directions=None, vetoes=None):
        self.c_star = c_star
        self.d_star = d_star
        self.weights = weights
        self.directions = directions
        self.vetoes = vetoes

    def _build_matrix(self, X: np.ndarray) -> DecisionMatrix:
        n, m = X.shape
        weights = np.ones(m) if self.weights is None else np.asarray(self.weights, dtype=float)
        if weights.shape != (m,):
            raise ValueError(f"weights has shape {weights.shape}, expected ({m},)")
        directions = ["maximize"] * m if self.directions is None else list(self.directions)
        if len(directions) != m:
            raise ValueError(f"directions has length {len(directions)}, expected {m}")
        vetoes = [None] * m if self.vetoes is None else list(self.vetoes)
        if len(vetoes) != m:
            raise ValueError(f"vetoes has length {len(vetoes)}, expected {m}")
        criteria = tuple(
            CriterionSpec(
                id=f"c{j}",
                direction=Direction(directions[j]),
                weight=float(weights[j]),
                veto=vetoes[j],
            )
            for j in range(m)
        )
        alternatives = tuple(Alternative(id=str(i)) for i in range(n))
        return DecisionMatrix(alternatives, criteria, X)

    def fit(self, X, y=None):
        """Compute the outranking relation and ranking structure of X."""
        X = check_array(X, dtype=np.float64, ensure_min_samples=2)
        matrix = self._build_matrix(X)
        thresholds = ThresholdConfig(
            c_star=self.c_star,
            d_star=UNBOUNDED if self.d_star is None else self.d_star,
        )
        report = build_report(matrix, thresholds=thresholds)

        n = X.shape[0]
        level_of = {}
        for level_index, level in enumerate(report.levels):
            for alt_id in level:
                level_of[int(alt_id)] = level_index

        self.n_features_in_ = X.shape[1]
        self.report_ = report
        self.adjacency_ = np.array(report.graph.adjacency)
        self.concordance_ = np.array(report.concordance.indices)
        self.discordance_ = np.array(report.discordance.distances)
        self.kernel_ = np.array(sorted(int(a) for a in report.kernel), dtype=int)
        self.levels_ = [
            np.array(sorted(int(a) for a in level), dtype=int) for level in report.levels
        ]
        self.labels_ = np.array([level_of[i] for i in range(n)], dtype=int)
        return self

    def fit_predict(self, X, y=None):
        """Fit and return the dominance-level label per row."""
        return self.fit(X).labels_

    def predict(self, X=None):
        """Dominance-level labels of the fitted rows.

        Outranking ranks a closed set of alternatives, so there is no
        out-of-sample prediction; ``X`` is accepted for API compatibility
        and ignored.
        """
        check_is_fitted(self, "labels_")
        return self.labels_
