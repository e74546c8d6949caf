"""Command-line front end; a thin client over the service operations.

Exit codes: 0 all checks passed, 1 a verification check failed, 2 usage
error (click's default for bad options; parameter validation failures
are mapped onto it as well).
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click
from pydantic import ValidationError

from .assignment import AssignmentError
from .service import models, ops

_element_options = [
    click.option("-n", "--dim", "n", type=int, required=True, help="spatial dimension"),
    click.option("-m", "--smoothness", "m", type=int, required=True, help="smoothness order"),
    click.option("-k1", "--excess", "k1", type=int, default=0, show_default=True, help="excess degree"),
]


def element_options(cmd):
    for opt in reversed(_element_options):
        cmd = opt(cmd)
    return cmd


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        click.echo(text, nl=False)


def _usage_error(exc: Exception) -> None:
    click.echo(f"error: {exc}", err=True)
    sys.exit(2)


@click.group()
def main() -> None:
    """DOF tables and verification for smooth simplicial elements."""


@main.command()
@element_options
@click.option("--format", "fmt", type=click.Choice(["paper", "json", "csv"]), default="paper", show_default=True)
@click.option("--debug-face-checks", is_flag=True, help="emit the study-only check: lines")
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="write to file instead of stdout")
def generate(n: int, m: int, k1: int, fmt: str, debug_face_checks: bool, out: str | None) -> None:
    """Generate the DOF table for one element."""
    try:
        req = models.GenerateRequest(n=n, m=m, k1=k1, format=fmt, debug_face_checks=debug_face_checks)
        resp = ops.generate(req)
    except (ValidationError, ValueError, AssignmentError) as exc:
        _usage_error(exc)
    if resp.table is not None:
        _emit(json.dumps(resp.table, indent=2) + "\n", out)
    else:
        _emit(resp.text, out)


@main.command()
@element_options
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="write JSON report to file")
def verify(n: int, m: int, k1: int, out: str | None) -> None:
    """Check closed-form counts against the assignment and dim P_k."""
    try:
        resp = ops.verify(models.VerifyRequest(n=n, m=m, k1=k1))
    except (ValidationError, ValueError) as exc:
        _usage_error(exc)
    for row in resp.per_level:
        click.echo(f"level {row.level}: {row.per_entity} per entity, {row.total} total")
    status = "pass" if resp.passed else "FAIL"
    click.echo(f"{status}: {resp.grand_total} = {resp.dim_pk}" if resp.passed else f"{status}: {resp.grand_total} vs {resp.dim_pk}")
    for msg in resp.mismatches:
        click.echo(f"mismatch: {msg}", err=True)
    if out:
        Path(out).write_text(resp.model_dump_json(indent=2), encoding="utf-8")
    sys.exit(0 if resp.passed else 1)


@main.command()
@element_options
@click.option("--tol", type=float, default=1e-8, show_default=True, help="residual tolerance")
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="write JSON report to file")
def unisolvency(n: int, m: int, k1: int, tol: float, out: str | None) -> None:
    """Assemble the element and report the dual-basis residual."""
    try:
        resp = ops.unisolvency(models.UnisolvencyRequest(n=n, m=m, k1=k1, tol=tol))
    except (ValidationError, ValueError, AssignmentError) as exc:
        _usage_error(exc)
    click.echo(
        f"{'pass' if resp.passed else 'FAIL'}: {resp.size} dofs, "
        f"residual {resp.residual:.3e}, condition estimate {resp.condition_estimate:.3e}"
    )
    if out:
        Path(out).write_text(resp.model_dump_json(indent=2), encoding="utf-8")
    sys.exit(0 if resp.passed else 1)


@main.command()
@element_options
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--tol", type=float, default=1e-7, show_default=True, help="relative jump tolerance for orders 0..m")
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="write JSON report to file")
def continuity(n: int, m: int, k1: int, seed: int, tol: float, out: str | None) -> None:
    """Two-cell smoothness jump test across a shared facet."""
    try:
        resp = ops.continuity(models.ContinuityRequest(n=n, m=m, k1=k1, seed=seed, tol=tol))
    except (ValidationError, ValueError, AssignmentError) as exc:
        _usage_error(exc)
    click.echo(f"shared dofs: {resp.shared_dofs}")
    for row in resp.per_order:
        click.echo(
            f"order {row.order}: jump {row.jump:.3e} scale {row.scale:.3e} relative {row.relative:.3e}"
        )
    click.echo("pass" if resp.passed else "FAIL")
    if out:
        Path(out).write_text(resp.model_dump_json(indent=2), encoding="utf-8")
    sys.exit(0 if resp.passed else 1)


@main.command()
@click.option("--n-max", type=int, default=4, show_default=True)
@click.option("--m-max", type=int, default=4, show_default=True)
@click.option("-k1", "--k1-max", type=int, default=2, show_default=True)
@click.option("--m-max-4d", type=int, default=2, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="write JSON report to file")
def sweep(n_max: int, m_max: int, k1_max: int, m_max_4d: int, out: str | None) -> None:
    """Run the oracle sweep over a parameter grid."""
    try:
        resp = ops.sweep(models.SweepRequest(n_max=n_max, m_max=m_max, k1_max=k1_max, m_max_4d=m_max_4d))
    except ValidationError as exc:
        _usage_error(exc)
    for case in resp.cases:
        status = "pass" if case.passed else "FAIL"
        click.echo(f"(n={case.n}, m={case.m}, k1={case.k1}) {status}: {case.detail}")
    if not resp.passed:
        first = resp.cases and next(c for c in resp.cases if not c.passed)
        click.echo(f"first failure: (n={first.n}, m={first.m}, k1={first.k1})", err=True)
    if out:
        Path(out).write_text(resp.model_dump_json(indent=2), encoding="utf-8")
    sys.exit(0 if resp.passed else 1)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host: str, port: int) -> None:
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("smoothfem.service.app:app", host=host, port=port)


if __name__ == "__main__":
    main()
