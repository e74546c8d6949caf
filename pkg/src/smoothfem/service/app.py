"""HTTP front end for table generation and verification runs."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from ..assignment import AssignmentError
from ..verify import IdentificationError
from . import models, ops

app = FastAPI(
    title="smoothfem",
    description=(
        "Nodal DOF tables and numeric verification for C^m smooth "
        "polynomial elements on simplicial cells"
    ),
)


@app.get("/health")
def health() -> dict[str, str]:
    return {"status": "ok"}


@app.post("/generate", response_model=models.GenerateResponse)
def generate(req: models.GenerateRequest) -> models.GenerateResponse:
    try:
        return ops.generate(req)
    except (ValueError, AssignmentError) as exc:
        raise HTTPException(status_code=422, detail=str(exc))


@app.post("/verify", response_model=models.VerifyResponse)
def verify(req: models.VerifyRequest) -> models.VerifyResponse:
    try:
        return ops.verify(req)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))


@app.post("/unisolvency", response_model=models.UnisolvencyResponse)
def unisolvency(req: models.UnisolvencyRequest) -> models.UnisolvencyResponse:
    try:
        return ops.unisolvency(req)
    except (ValueError, AssignmentError) as exc:
        raise HTTPException(status_code=422, detail=str(exc))


@app.post("/continuity", response_model=models.ContinuityResponse)
def continuity(req: models.ContinuityRequest) -> models.ContinuityResponse:
    try:
        return ops.continuity(req)
    except (ValueError, AssignmentError) as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    except IdentificationError as exc:
        raise HTTPException(status_code=500, detail=str(exc))


@app.post("/sweep", response_model=models.SweepResponse)
def sweep(req: models.SweepRequest) -> models.SweepResponse:
    return ops.sweep(req)
