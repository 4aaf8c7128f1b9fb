"""Likert questionnaire ingestion and aggregation into a decision matrix.

The instrument is a forced-choice six-point scale (1..6, no neutral
option) with six items per attribute and four attributes per respondent,
24 items in all. CSV layout:

    store,respondent,p1_1,...,p1_6,p2_1,...,p2_6,p3_1,...,p3_6,p4_1,...,p4_6

Extra columns after the 24 items are permitted and ignored (other
questionnaire sections). Aggregation takes the mean of each respondent's
six items per attribute, then the mean of those respondent means per
store; with complete data this equals the grand item mean, but the
respondent-first order is the defined semantics.
"""

import csv
import io
import math
from dataclasses import dataclass, field

import numpy as np

from .model import Alternative, CriterionSpec, DecisionMatrix, Violation

N_ATTRIBUTES = 4
ITEMS_PER_ATTRIBUTE = 6
N_ITEMS = N_ATTRIBUTES * ITEMS_PER_ATTRIBUTE
SCALE_MIN, SCALE_MAX = 1, 6

ATTRIBUTE_IDS = ("ATT_1", "ATT_2", "ATT_3", "ATT_4")
ATTRIBUTE_LABELS = ("Product", "Price", "Promotion", "Place/Distribution")

EXPECTED_COLUMNS = ["store", "respondent"] + [
    f"p{a}_{q}"
    for a in range(1, N_ATTRIBUTES + 1)
    for q in range(1, ITEMS_PER_ATTRIBUTE + 1)
]


class MalformedHeaderError(ValueError):
    """Raised when the survey CSV header does not start with the expected columns."""


class SurveyValidationError(ValueError):
    """Raised in strict mode at the first row violation."""

    def __init__(self, violation: Violation):
        self.violation = violation
        super().__init__(f"{violation.path}: {violation.message}")


class EmptyStoreError(ValueError):
    """Raised when a declared store has no records to aggregate."""


@dataclass(frozen=True)
class SurveyRecord:
    """One respondent's 24 item answers, grouped six per attribute."""

    store_id: str
    respondent_id: str
    items: tuple[int, ...]

    def attribute_mean(self, attribute: int) -> float:
        start = attribute * ITEMS_PER_ATTRIBUTE
        return math.fsum(self.items[start : start + ITEMS_PER_ATTRIBUTE]) / ITEMS_PER_ATTRIBUTE


@dataclass(frozen=True)
class SurveyDataset:
    records: tuple[SurveyRecord, ...]
    stores: tuple[str, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "records", tuple(self.records))
        if not self.stores:
            seen: list[str] = []
            for record in self.records:
                if record.store_id not in seen:
                    seen.append(record.store_id)
            object.__setattr__(self, "stores", tuple(seen))
        else:
            object.__setattr__(self, "stores", tuple(self.stores))

    @property
    def counts(self) -> dict[str, int]:
        counts = {store: 0 for store in self.stores}
        for record in self.records:
            counts[record.store_id] = counts.get(record.store_id, 0) + 1
        return counts


def parse_survey_csv(
    data: "bytes | str", strict: bool = False
) -> tuple[SurveyDataset, tuple[Violation, ...]]:
    """Parse survey responses, reporting malformed rows with line numbers.

    In strict mode the first violation aborts the parse; otherwise valid
    rows are retained and every violation is returned alongside the
    dataset. A header not starting with the expected 26 columns raises
    :class:`MalformedHeaderError` in either mode.
    """
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    reader = csv.reader(io.StringIO(data))
    try:
        header = next(reader)
    except StopIteration:
        raise MalformedHeaderError("empty input: missing header row") from None
    header = [cell.strip() for cell in header]
    if header[: len(EXPECTED_COLUMNS)] != EXPECTED_COLUMNS:
        raise MalformedHeaderError(
            f"header must start with {','.join(EXPECTED_COLUMNS)}"
        )

    records: list[SurveyRecord] = []
    violations: list[Violation] = []

    def report(lineno: int, message: str) -> None:
        violation = Violation(path=f"line {lineno}", message=message)
        if strict:
            raise SurveyValidationError(violation)
        violations.append(violation)

    for lineno, row in enumerate(reader, start=2):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) < 2 + N_ITEMS:
            report(lineno, f"expected {N_ITEMS} items, got {max(0, len(row) - 2)}")
            continue
        store = row[0].strip()
        respondent = row[1].strip()
        if not store:
            report(lineno, "store id is empty")
            continue
        items: list[int] = []
        ok = True
        for k, cell in enumerate(row[2 : 2 + N_ITEMS]):
            try:
                value = int(cell.strip())
            except ValueError:
                report(lineno, f"item {EXPECTED_COLUMNS[2 + k]} is not an integer: {cell.strip()!r}")
                ok = False
                break
            if not SCALE_MIN <= value <= SCALE_MAX:
                report(
                    lineno,
                    f"item {EXPECTED_COLUMNS[2 + k]} out of range [{SCALE_MIN},{SCALE_MAX}]: {value}",
                )
                ok = False
                break
            items.append(value)
        if ok:
            records.append(SurveyRecord(store, respondent, tuple(items)))

    return SurveyDataset(records=tuple(records)), tuple(violations)


def aggregate_means(dataset: SurveyDataset) -> DecisionMatrix:
    """Aggregate a dataset into a store x attribute matrix of means.

    ``score[store][attribute]`` is the mean over the store's respondents of
    each respondent's six-item attribute mean. Summation is compensated
    (exact), so the result is invariant under record order. Criteria are
    the four fixed attributes, maximize direction, equal weights.
    """
    by_store: dict[str, list[SurveyRecord]] = {store: [] for store in dataset.stores}
    for record in dataset.records:
        by_store.setdefault(record.store_id, []).append(record)

    for store in dataset.stores:
        if not by_store[store]:
            raise EmptyStoreError(f"store {store!r} has no survey records")

    stores = list(dataset.stores)
    for store in by_store:
        if store not in stores:
            stores.append(store)

    scores = np.zeros((len(stores), N_ATTRIBUTES), dtype=np.float64)
    for i, store in enumerate(stores):
        records = by_store[store]
        for a in range(N_ATTRIBUTES):
            means = [record.attribute_mean(a) for record in records]
            scores[i, a] = math.fsum(means) / len(means)

    alternatives = tuple(Alternative(id=store) for store in stores)
    criteria = tuple(
        CriterionSpec(id=att, label=label, weight=1.0 / N_ATTRIBUTES)
        for att, label in zip(ATTRIBUTE_IDS, ATTRIBUTE_LABELS)
    )
    return DecisionMatrix(alternatives=alternatives, criteria=criteria, scores=scores)
