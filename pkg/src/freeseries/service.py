"""HTTP front end wrapping the exact-arithmetic core.

A long-running process amortizes the memoized family tables across
requests; the CLI covers one-shot use.  Run with

    uvicorn freeseries.service:app

or the freeseries-serve console script.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from . import ops
from .freealg import to_json_terms
from .report import Report
from .schemas import (
    CountRowModel,
    CountsRequest,
    CountsResponse,
    FamilyRequest,
    FamilyResponse,
    HealthResponse,
    ReportModel,
    TermModel,
    VerifyRequest,
    VerifyResponse,
    WitnessModel,
)

app = FastAPI(
    title="freeseries",
    description="Exact non-commutative power series calculator",
    version="0.1.0",
)


def _report_model(report: Report) -> ReportModel:
    witness = None
    if report.witness is not None:
        witness = WitnessModel(
            degree=report.witness.degree,
            word=report.witness.word,
            expected=report.witness.expected,
            actual=report.witness.actual,
        )
    return ReportModel(
        name=report.name, passed=report.passed, witness=witness, elapsed=report.elapsed
    )


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok")


@app.post("/family", response_model=FamilyResponse)
def family(request: FamilyRequest) -> FamilyResponse:
    try:
        poly = ops.family_polynomial(request.family, request.n, request.x, request.zero_diag)
    except ops.UsageError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return FamilyResponse(
        family=request.family,
        n=request.n,
        x=request.x,
        zero_diag=request.zero_diag,
        degree=poly.degree,
        monomial_count=poly.monomial_count(),
        canonical=poly.canonical_string(),
        terms=[TermModel(**term) for term in to_json_terms(poly)],
    )


@app.post("/verify", response_model=VerifyResponse)
def verify(request: VerifyRequest) -> VerifyResponse:
    reports = ops.run_suite(request.suite, request.degree)
    return VerifyResponse(
        suite=request.suite,
        degree=request.degree,
        passed=all(report.passed for report in reports),
        reports=[_report_model(report) for report in reports],
    )


@app.post("/counts", response_model=CountsResponse)
def counts(request: CountsRequest) -> CountsResponse:
    try:
        rows = ops.counts_table(request.family, request.n_max, request.zero_diag)
    except ops.UsageError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return CountsResponse(
        family=request.family,
        n_max=request.n_max,
        zero_diag=request.zero_diag,
        all_match=all(row.match for row in rows),
        rows=[
            CountRowModel(n=row.n, count=row.count, expected=row.expected, match=row.match)
            for row in rows
        ],
    )


def main() -> None:
    """Console entry point for freeseries-serve."""
    import argparse

    import uvicorn

    parser = argparse.ArgumentParser(prog="freeseries-serve")
    parser.add_argument("--host", default="127.0.0.1")
    parser.add_argument("--port", type=int, default=8000)
    args = parser.parse_args()
    uvicorn.run("freeseries.service:app", host=args.host, port=args.port)


if __name__ == "__main__":
    main()
