"""Request handlers shared by the FastAPI endpoints and the CLI client."""

from __future__ import annotations

from ..assignment import ElementParams, assign_dofs
from ..counts import verify_dimension_identity
from ..reporting import fixed_width_report, table_to_csv, table_to_dict
from ..verify import check_unisolvency, continuity_jump_test, oracle_sweep
from . import models


def generate(req: models.GenerateRequest) -> models.GenerateResponse:
    table = assign_dofs(ElementParams(n=req.n, m=req.m, k1=req.k1))
    if req.format == "json":
        return models.GenerateResponse(table=table_to_dict(table))
    if req.format == "csv":
        return models.GenerateResponse(text=table_to_csv(table))
    return models.GenerateResponse(
        text=fixed_width_report(table, debug_face_checks=req.debug_face_checks)
    )


def verify(req: models.VerifyRequest) -> models.VerifyResponse:
    report = verify_dimension_identity(req.n, req.m, req.k1)
    return models.VerifyResponse(
        passed=report.ok,
        grand_total=report.grand_total,
        dim_pk=report.dim_pk,
        per_level=[
            models.PerLevelCount(level=lev, per_entity=per, total=tot)
            for (lev, per), (_, tot) in zip(
                report.per_level_per_entity, report.per_level_total
            )
        ],
        mismatches=report.mismatches,
    )


def unisolvency(req: models.UnisolvencyRequest) -> models.UnisolvencyResponse:
    result = check_unisolvency(
        ElementParams(n=req.n, m=req.m, k1=req.k1), tol=req.tol
    )
    return models.UnisolvencyResponse(
        passed=result.passed,
        residual=result.residual,
        condition_estimate=result.condition_estimate,
        size=result.element.basis.size if result.element else 0,
    )


def continuity(req: models.ContinuityRequest) -> models.ContinuityResponse:
    params = ElementParams(n=req.n, m=req.m, k1=req.k1)
    report = continuity_jump_test(
        params, seed=req.seed, n_samples=req.samples
    )
    per_order = [
        models.OrderJump(
            order=order,
            jump=report.jumps[order],
            scale=report.scales[order],
            relative=report.relative(order),
        )
        for order in range(len(report.jumps))
    ]
    passed = all(report.relative(order) < req.tol for order in range(params.m + 1))
    return models.ContinuityResponse(
        passed=passed, shared_dofs=report.shared_count, per_order=per_order
    )


def sweep(req: models.SweepRequest) -> models.SweepResponse:
    report = oracle_sweep(
        n_max=req.n_max,
        m_max=req.m_max,
        k1_max=req.k1_max,
        m_max_4d=req.m_max_4d,
    )
    return models.SweepResponse(
        passed=report.passed,
        cases=[
            models.SweepCase(n=n, m=m, k1=k1, passed=ok, detail=detail)
            for n, m, k1, ok, detail in report.cases
        ],
    )
