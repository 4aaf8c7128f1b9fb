from pathlib import Path

import numpy as np
import pytest

from outrank import Alternative, CriterionSpec, DecisionMatrix

REPO_ROOT = Path(__file__).resolve().parent.parent

PAPER_SCORES = [
    [4.42, 3.94, 3.97, 3.90],
    [3.91, 3.73, 3.42, 2.95],
    [4.10, 3.60, 3.71, 3.70],
    [3.90, 4.02, 3.76, 3.92],
]
PAPER_ALTERNATIVES = [
    ("R_1", "Tesco"),
    ("R_2", "Mydin"),
    ("R_3", "Carrefour"),
    ("R_4", "Giant"),
]
PAPER_CRITERIA = [
    ("ATT_1", "Product"),
    ("ATT_2", "Price"),
    ("ATT_3", "Promotion"),
    ("ATT_4", "Place/Distribution"),
]


def paper_decision_matrix() -> DecisionMatrix:
    return DecisionMatrix(
        alternatives=tuple(Alternative(id=i, label=l) for i, l in PAPER_ALTERNATIVES),
        criteria=tuple(CriterionSpec(id=i, label=l, weight=0.25) for i, l in PAPER_CRITERIA),
        scores=np.array(PAPER_SCORES),
    )


@pytest.fixture
def paper_matrix() -> DecisionMatrix:
    return paper_decision_matrix()


@pytest.fixture
def table1_path() -> Path:
    return REPO_ROOT / "data" / "table1.csv"


def random_instance(rng: np.random.Generator, n_max: int = 6, m_max: int = 5):
    """Random matrix on a 0.01 score grid with positive grid weights.

    The coarse grid keeps exact float comparisons meaningful (ties occur,
    and affine rescaling cannot collapse distinct scores).
    """
    n = int(rng.integers(2, n_max + 1))
    m = int(rng.integers(1, m_max + 1))
    scores = rng.integers(0, 1001, size=(n, m)).astype(np.float64) / 100.0
    weights = rng.integers(1, 100, size=m).astype(np.float64) / 10.0
    alternatives = tuple(Alternative(id=f"a{i}") for i in range(n))
    criteria = tuple(
        CriterionSpec(id=f"c{j}", weight=float(weights[j])) for j in range(m)
    )
    return DecisionMatrix(alternatives, criteria, scores), [float(w) for w in weights]
