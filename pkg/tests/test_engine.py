import math

import numpy as np
import pytest

import oracles
from outrank import (
    Alternative,
    CriterionSpec,
    DecisionMatrix,
    IndexOutOfRangeError,
    InvalidMatrixError,
    SelfComparisonError,
    ThresholdConfig,
    UnnormalizedWeightsError,
    UnorientedMatrixError,
    concordance_index,
    concordance_matrix,
    concordance_set,
    concordance_test,
    discordance_index,
    discordance_matrix,
    discordance_test,
    outrank,
)
from conftest import PAPER_SCORES, random_instance

EQUAL = [0.25, 0.25, 0.25, 0.25]

# Table 3 as criterion-index sets, keyed by (row, column) alternative index.
TABLE_3 = {
    (0, 1): {0, 1, 2, 3},
    (0, 2): {0, 1, 2, 3},
    (0, 3): {0, 2},
    (1, 0): set(),
    (1, 2): {1},
    (1, 3): {0},
    (2, 0): set(),
    (2, 1): {0, 2, 3},
    (2, 3): {0},
    (3, 0): {1, 3},
    (3, 1): {1, 2, 3},
    (3, 2): {1, 2, 3},
}

TABLE_4 = [
    [None, 1.0, 1.0, 0.50],
    [0.0, None, 0.25, 0.25],
    [0.0, 0.75, None, 0.25],
    [0.50, 0.75, 0.75, None],
]

TABLE_5_EDGES = {(0, 1), (0, 2), (2, 1), (3, 1), (3, 2)}


class TestConcordanceSet:
    @pytest.mark.parametrize("pair,expected", sorted(TABLE_3.items()))
    def test_table_3_cells(self, paper_matrix, pair, expected):
        assert concordance_set(paper_matrix, *pair) == frozenset(expected)

    def test_three_criteria_favor_carrefour_over_mydin(self, paper_matrix):
        assert concordance_set(paper_matrix, 2, 1) == frozenset({0, 2, 3})

    def test_identical_rows_give_full_set_both_ways(self):
        matrix = DecisionMatrix(
            alternatives=(Alternative(id="a"), Alternative(id="b")),
            criteria=tuple(CriterionSpec(id=f"c{j}") for j in range(3)),
            scores=np.array([[1.0, 2.0, 3.0], [1.0, 2.0, 3.0]]),
        )
        full = frozenset({0, 1, 2})
        assert concordance_set(matrix, 0, 1) == full
        assert concordance_set(matrix, 1, 0) == full

    def test_self_comparison_rejected(self, paper_matrix):
        with pytest.raises(SelfComparisonError):
            concordance_set(paper_matrix, 1, 1)

    def test_index_out_of_range(self, paper_matrix):
        with pytest.raises(IndexOutOfRangeError):
            concordance_set(paper_matrix, 0, 7)


class TestConcordanceIndex:
    def test_majority_for_carrefour_over_mydin(self, paper_matrix):
        assert concordance_index(paper_matrix, EQUAL, 2, 1) == 0.75

    def test_half_for_tesco_over_giant(self, paper_matrix):
        assert concordance_index(paper_matrix, EQUAL, 0, 3) == 0.50

    def test_quarter_for_mydin_over_giant(self, paper_matrix):
        assert concordance_index(paper_matrix, EQUAL, 1, 3) == 0.25

    def test_full_concordance_on_dominance(self, paper_matrix):
        assert concordance_index(paper_matrix, EQUAL, 0, 1) == 1.0

    def test_unnormalized_weights_rejected(self, paper_matrix):
        with pytest.raises(UnnormalizedWeightsError):
            concordance_index(paper_matrix, [1.0, 1.0, 1.0, 1.0], 0, 1)


class TestConcordanceMatrix:
    def test_reproduces_table_4(self, paper_matrix):
        analysis = concordance_matrix(paper_matrix, EQUAL)
        for i in range(4):
            for j in range(4):
                if i == j:
                    assert math.isnan(analysis.indices[i, j])
                else:
                    assert abs(analysis.indices[i, j] - TABLE_4[i][j]) <= 1e-12

    def test_diagonal_sets_empty_by_convention(self, paper_matrix):
        analysis = concordance_matrix(paper_matrix, EQUAL)
        assert all(analysis.sets[i][i] == frozenset() for i in range(4))

    def test_identical_alternatives_all_ones(self):
        matrix = DecisionMatrix(
            alternatives=(Alternative(id="a"), Alternative(id="b")),
            criteria=(CriterionSpec(id="c0"), CriterionSpec(id="c1")),
            scores=np.array([[2.0, 3.0], [2.0, 3.0]]),
        )
        analysis = concordance_matrix(matrix, [0.5, 0.5])
        assert analysis.indices[0, 1] == 1.0
        assert analysis.indices[1, 0] == 1.0

    def test_matches_per_pair_oracle_on_random_instances(self):
        rng = np.random.default_rng(7)
        for _ in range(25):
            matrix, raw = random_instance(rng, n_max=5, m_max=3)
            weights = oracles.normalize(raw)
            analysis = concordance_matrix(matrix, weights)
            scores = matrix.scores.tolist()
            for i in range(matrix.n_alternatives):
                for j in range(matrix.n_alternatives):
                    if i == j:
                        continue
                    assert analysis.sets[i][j] == frozenset(
                        oracles.concordance_set(scores, i, j)
                    )
                    assert analysis.indices[i, j] == oracles.concordance_index(
                        scores, weights, i, j
                    )


class TestConcordanceTest:
    def test_inclusive_at_threshold(self):
        assert concordance_test(0.75, 0.75) == 1

    def test_below_threshold(self):
        assert concordance_test(0.50, 0.75) == 0

    def test_unanimity(self):
        assert concordance_test(1.0, 0.75) == 1


class TestDiscordance:
    def test_carrefour_over_mydin_claim(self, paper_matrix):
        # single opposing criterion: price 3.73 vs 3.60
        expected = oracles.discordance(PAPER_SCORES, 2, 1)
        value = discordance_index(paper_matrix, 2, 1)
        assert value == expected
        assert abs(value - 0.13) < 1e-9

    def test_dominated_claim_clamps_to_zero(self, paper_matrix):
        assert discordance_index(paper_matrix, 0, 1) == 0.0

    def test_identical_rows_zero(self):
        matrix = DecisionMatrix(
            alternatives=(Alternative(id="a"), Alternative(id="b")),
            criteria=(CriterionSpec(id="c0"),),
            scores=np.array([[4.0], [4.0]]),
        )
        assert discordance_index(matrix, 0, 1) == 0.0

    def test_matrix_diagonal_zero(self, paper_matrix):
        distances = discordance_matrix(paper_matrix).distances
        assert np.all(np.diagonal(distances) == 0.0)
        assert np.all(distances >= 0.0)

    def test_self_comparison_rejected(self, paper_matrix):
        with pytest.raises(SelfComparisonError):
            discordance_index(paper_matrix, 2, 2)


class TestDiscordanceTest:
    def test_unbounded_always_passes(self, paper_matrix):
        d = discordance_index(paper_matrix, 2, 1)
        assert discordance_test(d, math.inf) is True

    def test_strong_objection_fails(self, paper_matrix):
        d = discordance_index(paper_matrix, 1, 0)  # worst case for "Mydin outranks Tesco"
        assert abs(d - 0.95) < 1e-9
        assert discordance_test(d, 0.5) is False

    def test_zero_boundary_inclusive(self):
        assert discordance_test(0.0, 0.0) is True

    def test_per_criterion_veto_blocks(self):
        opposing = np.array([0.2, -1.0, 0.6])
        vetoes = (None, None, 0.5)
        assert discordance_test(0.6, math.inf, opposing, vetoes) is False

    def test_per_criterion_veto_inclusive(self):
        opposing = np.array([0.5])
        assert discordance_test(0.5, math.inf, opposing, (0.5,)) is True

    def test_veto_requires_differences(self):
        with pytest.raises(ValueError):
            discordance_test(0.1, math.inf, None, (0.5,))


class TestOutrank:
    def test_paper_edges_at_default_thresholds(self, paper_matrix):
        graph = outrank(paper_matrix, EQUAL, ThresholdConfig(c_star=0.75))
        assert set(graph.edges()) == TABLE_5_EDGES
        assert not np.any(np.diagonal(graph.adjacency))

    def test_unanimity_threshold(self, paper_matrix):
        graph = outrank(paper_matrix, EQUAL, ThresholdConfig(c_star=1.0))
        assert set(graph.edges()) == {(0, 1), (0, 2)}

    def test_zero_threshold_gives_complete_digraph(self, paper_matrix):
        graph = outrank(paper_matrix, EQUAL, ThresholdConfig(c_star=0.0))
        n = paper_matrix.n_alternatives
        assert graph.edge_count == n * (n - 1)

    def test_provenance_recorded(self, paper_matrix):
        thresholds = ThresholdConfig(c_star=0.6, d_star=2.0)
        graph = outrank(paper_matrix, None, thresholds)
        assert graph.thresholds == thresholds
        assert graph.weights.tolist() == EQUAL

    def test_weights_taken_from_matrix_and_normalized(self, paper_matrix):
        graph = outrank(paper_matrix, None, ThresholdConfig(c_star=0.75))
        assert set(graph.edges()) == TABLE_5_EDGES

    def test_raw_weights_normalized_at_entry(self, paper_matrix):
        graph = outrank(paper_matrix, [2.0, 2.0, 2.0, 2.0], ThresholdConfig(c_star=0.75))
        assert set(graph.edges()) == TABLE_5_EDGES

    def test_global_discordance_threshold_prunes(self, paper_matrix):
        # d=0.13 blocks the Carrefour->Mydin edge at d*=0.1
        graph = outrank(paper_matrix, EQUAL, ThresholdConfig(c_star=0.75, d_star=0.1))
        assert (2, 1) not in set(graph.edges())
        assert (0, 1) in set(graph.edges())

    def test_per_criterion_veto_prunes(self):
        alternatives = (Alternative(id="a"), Alternative(id="b"))
        criteria = (
            CriterionSpec(id="c0", weight=3.0),
            CriterionSpec(id="c1", weight=1.0, veto=0.5),
        )
        scores = np.array([[5.0, 1.0], [1.0, 2.0]])
        matrix = DecisionMatrix(alternatives, criteria, scores)
        graph = outrank(matrix, None, ThresholdConfig(c_star=0.7))
        # a beats b with weight 0.75, but b is 1.0 better on the veto criterion
        assert set(graph.edges()) == set()

    def test_invalid_matrix_rejected(self):
        matrix = DecisionMatrix(
            alternatives=(Alternative(id="only"),),
            criteria=(CriterionSpec(id="c0"),),
            scores=np.array([[1.0]]),
        )
        with pytest.raises(InvalidMatrixError) as excinfo:
            outrank(matrix)
        assert any("alternatives" in v.path for v in excinfo.value.violations)

    def test_minimize_matrix_rejected(self):
        matrix = DecisionMatrix(
            alternatives=(Alternative(id="a"), Alternative(id="b")),
            criteria=(CriterionSpec(id="c0", direction="minimize"),),
            scores=np.array([[1.0], [2.0]]),
        )
        with pytest.raises(UnorientedMatrixError):
            outrank(matrix)
