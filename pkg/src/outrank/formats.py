"""File formats: matrix CSV, criteria JSON, and report/sweep serialization.

All emitters are byte-deterministic for fixed inputs: collections are
sorted or follow matrix order, floats use shortest round-trip repr, and no
timestamps appear anywhere.

Matrix CSV:
    alternative,<criterion_id_1>,...,<criterion_id_m>
    <alt_id>,<score>,...
    #weights,<w1>,...,<wm>        (optional final row)

Criteria config JSON: array of objects
    {"id", "label"?, "direction": "maximize"|"minimize", "weight", "veto"?}
"""

import csv
import io
import json
import math

import numpy as np

from .analysis import RankingReport
from .model import (
    Alternative,
    CriterionSpec,
    DecisionMatrix,
    Direction,
    UNBOUNDED,
)
from .sensitivity import SweepResult


class MatrixFormatError(ValueError):
    """Raised for structurally unparseable matrix CSV input."""


class CriteriaConfigError(ValueError):
    """Raised for malformed criteria config JSON."""


def read_matrix_csv(data: "bytes | str") -> DecisionMatrix:
    """Parse the decision-matrix CSV format; an optional ``#weights`` final
    row supplies criterion weights (default: equal)."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    rows = [row for row in csv.reader(io.StringIO(data)) if row and any(cell.strip() for cell in row)]
    if not rows:
        raise MatrixFormatError("empty input: missing header row")
    header = [cell.strip() for cell in rows[0]]
    if not header or header[0] != "alternative":
        raise MatrixFormatError("header must start with 'alternative'")
    criterion_ids = header[1:]
    if not criterion_ids:
        raise MatrixFormatError("header names no criteria")
    m = len(criterion_ids)

    weights = [1.0] * m
    body = rows[1:]
    if body and body[-1][0].strip() == "#weights":
        weight_row = [cell.strip() for cell in body[-1]]
        if len(weight_row) != m + 1:
            raise MatrixFormatError(
                f"#weights row has {len(weight_row) - 1} values, expected {m}"
            )
        try:
            weights = [float(w) for w in weight_row[1:]]
        except ValueError as exc:
            raise MatrixFormatError(f"#weights row has a non-numeric value: {exc}") from None
        body = body[:-1]

    alternatives = []
    scores = []
    for lineno, row in enumerate(body, start=2):
        cells = [cell.strip() for cell in row]
        if cells[0] == "#weights":
            raise MatrixFormatError(f"line {lineno}: #weights must be the final row")
        if len(cells) != m + 1:
            raise MatrixFormatError(
                f"line {lineno}: expected {m + 1} cells, got {len(cells)}"
            )
        alternatives.append(Alternative(id=cells[0]))
        try:
            scores.append([float(cell) for cell in cells[1:]])
        except ValueError:
            raise MatrixFormatError(f"line {lineno}: non-numeric score cell") from None

    criteria = tuple(
        CriterionSpec(id=cid, weight=w) for cid, w in zip(criterion_ids, weights)
    )
    if not alternatives:
        raise MatrixFormatError("no alternative rows found")
    return DecisionMatrix(
        alternatives=tuple(alternatives),
        criteria=criteria,
        scores=np.array(scores, dtype=np.float64),
    )


def write_matrix_csv(matrix: DecisionMatrix) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["alternative", *matrix.criterion_ids])
    for i, alt in enumerate(matrix.alternatives):
        writer.writerow([alt.id, *[repr(float(s)) for s in matrix.scores[i]]])
    writer.writerow(["#weights", *[repr(float(c.weight)) for c in matrix.criteria]])
    return out.getvalue()


def parse_criteria_config(data: "bytes | str") -> list[CriterionSpec]:
    """Parse the criteria config JSON array into criterion specs."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        raw = json.loads(data)
    except json.JSONDecodeError as exc:
        raise CriteriaConfigError(f"invalid JSON: {exc}") from None
    if not isinstance(raw, list):
        raise CriteriaConfigError("criteria config must be a JSON array")
    specs = []
    for k, entry in enumerate(raw):
        if not isinstance(entry, dict) or "id" not in entry:
            raise CriteriaConfigError(f"criteria[{k}] must be an object with an 'id'")
        unknown = set(entry) - {"id", "label", "direction", "weight", "veto"}
        if unknown:
            raise CriteriaConfigError(f"criteria[{k}] has unknown keys: {sorted(unknown)}")
        try:
            specs.append(
                CriterionSpec(
                    id=str(entry["id"]),
                    label=str(entry.get("label", "")),
                    direction=Direction(entry.get("direction", "maximize")),
                    weight=float(entry.get("weight", 1.0)),
                    veto=None if entry.get("veto") is None else float(entry["veto"]),
                )
            )
        except (TypeError, ValueError) as exc:
            raise CriteriaConfigError(f"criteria[{k}]: {exc}") from None
    return specs


def apply_criteria_config(matrix: DecisionMatrix, specs: list[CriterionSpec]) -> DecisionMatrix:
    """Override matrix criteria (matched by id) with configured specs."""
    by_id = {spec.id: spec for spec in specs}
    unknown = sorted(set(by_id) - set(matrix.criterion_ids))
    if unknown:
        raise CriteriaConfigError(f"criteria config names unknown criteria: {unknown}")
    criteria = tuple(by_id.get(c.id, c) for c in matrix.criteria)
    return DecisionMatrix(matrix.alternatives, criteria, matrix.scores)


def d_star_to_json(d_star: float):
    return "inf" if math.isinf(d_star) else d_star


def d_star_from_json(value) -> float:
    if isinstance(value, str):
        if value.strip().lower() in {"inf", "infinity", "unbounded"}:
            return UNBOUNDED
        raise ValueError(f"d_star string must be 'inf', got {value!r}")
    return float(value)


def report_to_dict(report: RankingReport) -> dict:
    """Flatten a report into its JSON document (spec'd keys plus the graph
    and the concordance/discordance matrices for table rendering)."""
    graph = report.graph
    ids = [a.id for a in graph.alternatives]
    n = graph.n
    # concordance sets are serialized as criterion ids, not indices
    criterion_ids = list(report.positioning.keys())

    sets_json = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(None)
            else:
                row.append([criterion_ids[k] for k in sorted(report.concordance.sets[i][j])])
        sets_json.append(row)

    indices_json = [
        [None if i == j else float(report.concordance.indices[i, j]) for j in range(n)]
        for i in range(n)
    ]
    distances_json = [
        [float(report.discordance.distances[i, j]) for j in range(n)] for i in range(n)
    ]

    return {
        "kernel": sorted(report.kernel),
        "levels": [sorted(level) for level in report.levels],
        "incomparable_pairs": sorted([list(pair) for pair in report.incomparable_pairs]),
        "positioning": {
            cid: [
                {"rank": e.rank, "alternative": e.alternative_id, "score": e.score}
                for e in entries
            ]
            for cid, entries in report.positioning.items()
        },
        "averages": {alt: report.averages[alt] for alt in ids},
        "average_order": list(report.average_order),
        "benchmark_leaders": {
            cid: {"leaders": list(entry.leaders), "scores": {alt: entry.scores[alt] for alt in ids}}
            for cid, entry in report.benchmark_leaders.items()
        },
        "provenance": {
            "c_star": graph.thresholds.c_star,
            "d_star": d_star_to_json(graph.thresholds.d_star),
            "weights": [float(w) for w in graph.weights],
        },
        "graph": {
            "nodes": ids,
            "edges": [[a, b] for a, b in graph.edge_ids()],
        },
        "concordance": {"sets": sets_json, "indices": indices_json},
        "discordance": {"distances": distances_json},
    }


def report_to_json(report: RankingReport) -> str:
    return json.dumps(report_to_dict(report), indent=2) + "\n"


def sweep_to_dict(sweep: SweepResult) -> dict:
    return {
        "points": [
            {
                "c_star": p.c_star,
                "edge_count": p.edge_count,
                "kernel": sorted(p.kernel),
                "levels": [sorted(level) for level in p.levels],
                "graph_fingerprint": p.graph_fingerprint,
            }
            for p in sweep.points
        ],
        "critical_thresholds": list(sweep.critical_thresholds),
        "provenance": {
            "d_star": d_star_to_json(sweep.d_star),
            "weights": [float(w) for w in sweep.weights],
        },
    }


def sweep_to_json(sweep: SweepResult) -> str:
    return json.dumps(sweep_to_dict(sweep), indent=2) + "\n"


def _matrix_table(title: str, ids, cell) -> list[str]:
    width = max(6, max(len(i) for i in ids) + 1)
    lines = [title]
    lines.append(" " * width + "".join(f"{i:>{width}}" for i in ids))
    for i, row_id in enumerate(ids):
        cells = "".join(f"{cell(i, j):>{width}}" for j in range(len(ids)))
        lines.append(f"{row_id:<{width}}" + cells)
    return lines


def report_to_text(report: RankingReport) -> str:
    """Human-readable report mirroring the classic concordance-analysis
    table shapes, for eyeball verification."""
    graph = report.graph
    ids = [a.id for a in graph.alternatives]
    n = graph.n
    thresholds = graph.thresholds
    d_star_text = "unbounded" if math.isinf(thresholds.d_star) else repr(thresholds.d_star)

    lines: list[str] = []
    lines.append("Outranking analysis")
    lines.append(f"  alternatives: {', '.join(ids)}")
    lines.append(
        "  weights: "
        + ", ".join(f"{cid}={w:.4f}" for cid, w in zip(report.positioning, graph.weights))
    )
    lines.append(f"  thresholds: c* = {thresholds.c_star!r}, d* = {d_star_text}")
    lines.append("")

    lines += _matrix_table(
        "Concordance matrix",
        ids,
        lambda i, j: "-" if i == j else f"{report.concordance.indices[i, j]:.2f}",
    )
    lines.append("")
    lines += _matrix_table(
        f"Concordance test (c* = {thresholds.c_star!r})",
        ids,
        lambda i, j: "-"
        if i == j
        else str(int(report.concordance.indices[i, j] >= thresholds.c_star)),
    )
    lines.append("")
    lines += _matrix_table(
        "Discordance matrix",
        ids,
        lambda i, j: "-" if i == j else f"{report.discordance.distances[i, j]:.2f}",
    )
    lines.append("")

    lines.append("Outranking edges")
    edges = graph.edge_ids()
    if edges:
        for a, b in edges:
            lines.append(f"  {a} -> {b}")
    else:
        lines.append("  (none)")
    lines.append("")
    lines.append("Kernel (best in class): " + ", ".join(sorted(report.kernel)))
    lines.append("Dominance levels")
    for k, level in enumerate(report.levels, start=1):
        lines.append(f"  {k}: " + ", ".join(sorted(level)))
    if report.incomparable_pairs:
        pairs = ", ".join(f"({a}, {b})" for a, b in sorted(report.incomparable_pairs))
    else:
        pairs = "(none)"
    lines.append(f"Incomparable pairs: {pairs}")
    lines.append("")

    lines.append("Positioning by criterion")
    for cid, entries in report.positioning.items():
        ranked = "  ".join(f"{e.rank}. {e.alternative_id}" for e in entries)
        lines.append(f"  {cid}: {ranked}")
    lines.append("")
    lines.append("Weighted averages")
    for alt in ids:
        lines.append(f"  {alt}: {report.averages[alt]:.4f}")
    lines.append("  order: " + " > ".join(report.average_order))
    lines.append("")
    lines.append("Benchmark leaders")
    for cid, entry in report.benchmark_leaders.items():
        lines.append(f"  {cid}: " + ", ".join(entry.leaders))
    return "\n".join(lines) + "\n"


def report_to_dot(report: RankingReport) -> str:
    """DOT digraph of the relation; kernel membership is a node attribute
    and edge labels carry the concordance index (2 decimals)."""
    graph = report.graph
    ids = [a.id for a in graph.alternatives]
    lines = ["digraph outranking {"]
    for i, alt in enumerate(graph.alternatives):
        member = "true" if alt.id in report.kernel else "false"
        lines.append(f'  "{alt.id}" [label="{alt.label}", kernel={member}];')
    for i, j in graph.edges():
        c = report.concordance.indices[i, j]
        lines.append(f'  "{ids[i]}" -> "{ids[j]}" [label="{c:.2f}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def sweep_to_text(sweep: SweepResult) -> str:
    lines = ["Concordance threshold sweep"]
    lines.append(
        "  critical thresholds: "
        + (", ".join(repr(v) for v in sweep.critical_thresholds) or "(none)")
    )
    d_star_text = "unbounded" if math.isinf(sweep.d_star) else repr(sweep.d_star)
    lines.append(f"  d* = {d_star_text}")
    lines.append("")
    lines.append(f"{'c*':>8}  {'edges':>5}  kernel")
    for p in sweep.points:
        lines.append(f"{p.c_star!r:>8}  {p.edge_count:>5}  " + ", ".join(sorted(p.kernel)))
    return "\n".join(lines) + "\n"
