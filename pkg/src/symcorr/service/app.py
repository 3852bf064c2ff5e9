"""FastAPI service wrapping the core package.

Endpoints mirror the CLI subcommands and return the same record shapes, so a
CLI pointed at a server prints byte-identical output.  Domain validation
errors surface as 400s with the offending condition in the detail.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import records
from ..errors import (
    BasisCountMismatch,
    MarkedPartitionError,
    NotInImage,
    NotInXn,
    SymbolError,
)
from .models import (
    CountRequest,
    CountResponse,
    HealthResponse,
    SelftestRequest,
    SelftestResponse,
    SpinMapRequest,
    SpinRecord,
    SpinTableRequest,
    SpinTableResponse,
    SpringerMapRequest,
    SpringerTableRequest,
    SpringerTableResponse,
    MappingRecord,
    SymbolsEnumerateRequest,
    SymbolsEnumerateResponse,
)

_BAD_REQUEST = (SymbolError, MarkedPartitionError, NotInXn, ValueError)


def create_app() -> FastAPI:
    app = FastAPI(
        title="symcorr",
        description="Symbol combinatorics, unipotent correspondences and census checks.",
    )

    @app.get("/health", response_model=HealthResponse)
    def health() -> dict:
        return {"status": "ok"}

    @app.post("/symbols/enumerate", response_model=SymbolsEnumerateResponse)
    def symbols_enumerate(req: SymbolsEnumerateRequest) -> dict:
        try:
            params = records.make_params(req.rho, req.s, req.defects)
            if req.classes:
                return {"classes": records.class_records(params, req.n)}
            return {"symbols": records.symbol_records(params, req.n)}
        except _BAD_REQUEST as exc:
            raise HTTPException(status_code=400, detail=str(exc))

    @app.post("/springer/map", response_model=MappingRecord)
    def springer_map(req: SpringerMapRequest) -> dict:
        try:
            return records.springer_record(req.case, req.n, req.class_text, req.char)
        except NotInImage as exc:
            raise HTTPException(status_code=404, detail=str(exc))
        except BasisCountMismatch as exc:
            raise HTTPException(status_code=500, detail=str(exc))
        except _BAD_REQUEST as exc:
            raise HTTPException(status_code=400, detail=str(exc))

    @app.post("/springer/table", response_model=SpringerTableResponse)
    def springer_table(req: SpringerTableRequest) -> dict:
        try:
            return {"mappings": records.springer_table_records(req.case, req.n)}
        except _BAD_REQUEST as exc:
            raise HTTPException(status_code=400, detail=str(exc))

    @app.post("/spin/map", response_model=SpinRecord)
    def spin_map(req: SpinMapRequest) -> dict:
        try:
            return records.spin_record(req.n, req.partition)
        except (NotInXn, *_BAD_REQUEST) as exc:
            raise HTTPException(status_code=400, detail=str(exc))

    @app.post("/spin/table", response_model=SpinTableResponse)
    def spin_table(req: SpinTableRequest) -> dict:
        return {"mappings": records.spin_table_records(req.n)}

    @app.post("/count", response_model=CountResponse)
    def count(req: CountRequest) -> dict:
        try:
            return {"reports": records.count_records(req.family, req.m)}
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))

    @app.post("/selftest", response_model=SelftestResponse)
    def selftest(req: SelftestRequest) -> dict:
        return records.selftest_records(req.max_n)

    return app


app = create_app()
