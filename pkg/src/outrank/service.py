"""Stateless JSON-over-HTTP analysis service.

Endpoints (v1):
    POST /api/v1/analyze  — full ranking report for an inline matrix
    POST /api/v1/sweep    — exact concordance-threshold sweep
    GET  /api/v1/health   — liveness + version

Requests carry the matrix inline; nothing is stored server-side, so every
request is independent and responses are pure functions of their bodies.
Unknown fields are rejected to surface client drift early. Validation
problems return 400 with ``{"violations": [{"path", "message"}]}``.
"""

from typing import Literal

import numpy as np
from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, ConfigDict, Field

from . import __version__
from .analysis import build_report
from .formats import d_star_from_json, report_to_dict, sweep_to_dict
from .model import (
    Alternative,
    CriterionSpec,
    DecisionMatrix,
    ThresholdConfig,
    Violation,
    validate_matrix,
    validate_thresholds,
)
from .sensitivity import threshold_sweep

DEFAULT_MAX_BODY_BYTES = 1_048_576


class AlternativePayload(BaseModel):
    model_config = ConfigDict(extra="forbid")
    id: str
    label: str | None = None


class CriterionPayload(BaseModel):
    model_config = ConfigDict(extra="forbid")
    id: str
    label: str | None = None
    direction: Literal["maximize", "minimize"] = "maximize"
    weight: float = 1.0
    veto: float | None = None


class MatrixPayload(BaseModel):
    model_config = ConfigDict(extra="forbid")
    alternatives: list[AlternativePayload]
    criteria: list[CriterionPayload]
    scores: list[list[float]]


class AnalyzeOptions(BaseModel):
    model_config = ConfigDict(extra="forbid")
    include_sweep: bool = False


class AnalyzeRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    matrix: MatrixPayload
    c_star: float = 0.75
    d_star: float | str = "inf"
    options: AnalyzeOptions = Field(default_factory=AnalyzeOptions)


class SweepRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    matrix: MatrixPayload
    d_star: float | str = "inf"


def _violations_response(violations) -> JSONResponse:
    return JSONResponse(
        status_code=400,
        content={"violations": [{"path": v.path, "message": v.message} for v in violations]},
    )


class _ShapeMismatch(Exception):
    def __init__(self, violation: Violation):
        self.violation = violation


def _to_domain(payload: MatrixPayload) -> DecisionMatrix:
    alternatives = tuple(Alternative(id=a.id, label=a.label or "") for a in payload.alternatives)
    criteria = tuple(
        CriterionSpec(
            id=c.id,
            label=c.label or "",
            direction=c.direction,
            weight=c.weight,
            veto=c.veto,
        )
        for c in payload.criteria
    )
    n, m = len(alternatives), len(criteria)
    rows = payload.scores
    if len(rows) != n or any(len(row) != m for row in rows):
        widths = {len(row) for row in rows}
        raise _ShapeMismatch(
            Violation(
                "scores",
                f"scores shape ({len(rows)}, {sorted(widths) if widths else 0}) "
                f"does not match {n} alternatives x {m} criteria",
            )
        )
    return DecisionMatrix(alternatives, criteria, np.array(rows, dtype=np.float64).reshape(n, m))


def _parse_d_star(value) -> tuple[float | None, list[Violation]]:
    try:
        return d_star_from_json(value), []
    except (TypeError, ValueError):
        return None, [Violation("d_star", f"d_star must be a number or 'inf', got {value!r}")]


def create_app(
    max_body_bytes: int = DEFAULT_MAX_BODY_BYTES,
    static_dir: "str | None" = None,
) -> FastAPI:
    app = FastAPI(title="outrank", version=__version__, docs_url=None, redoc_url=None)

    @app.exception_handler(RequestValidationError)
    async def _schema_errors(request: Request, exc: RequestValidationError):
        violations = []
        for error in exc.errors():
            loc = [str(part) for part in error.get("loc", ()) if part != "body"]
            violations.append({"path": ".".join(loc) or "body", "message": error.get("msg", "invalid")})
        return JSONResponse(status_code=400, content={"violations": violations})

    @app.middleware("http")
    async def _limit_body(request: Request, call_next):
        length = request.headers.get("content-length")
        if length is not None and length.isdigit() and int(length) > max_body_bytes:
            return JSONResponse(
                status_code=413,
                content={
                    "violations": [
                        {"path": "body", "message": f"body exceeds {max_body_bytes} bytes"}
                    ]
                },
            )
        return await call_next(request)

    @app.get("/api/v1/health")
    async def health():
        return {"status": "ok", "version": __version__}

    @app.post("/api/v1/analyze")
    async def analyze(request: AnalyzeRequest):
        d_star, violations = _parse_d_star(request.d_star)
        if d_star is not None:
            violations.extend(validate_thresholds(request.c_star, d_star))
        try:
            matrix = _to_domain(request.matrix)
        except _ShapeMismatch as exc:
            return _violations_response(violations + [exc.violation])
        result = validate_matrix(matrix)
        violations.extend(result.violations)
        if violations:
            return _violations_response(violations)

        thresholds = ThresholdConfig(c_star=request.c_star, d_star=d_star)
        report = build_report(matrix, thresholds=thresholds)
        body = report_to_dict(report)
        if request.options.include_sweep:
            body["sweep"] = sweep_to_dict(threshold_sweep(matrix, d_star=d_star))
        return JSONResponse(content=body)

    @app.post("/api/v1/sweep")
    async def sweep(request: SweepRequest):
        d_star, violations = _parse_d_star(request.d_star)
        if d_star is not None:
            violations.extend(validate_thresholds(0.0, d_star))
        try:
            matrix = _to_domain(request.matrix)
        except _ShapeMismatch as exc:
            return _violations_response(violations + [exc.violation])
        result = validate_matrix(matrix)
        violations.extend(result.violations)
        if violations:
            return _violations_response(violations)
        return JSONResponse(content=sweep_to_dict(threshold_sweep(matrix, d_star=d_star)))

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
