"""Rendering of DOF tables: fixed-width report, JSON, and CSV.

The fixed-width report is a compatibility contract: its data lines must
match the reference tabulation byte for byte (blank-padded integer
fields of widths 2/3/7/8), so the format strings here are frozen.
"""

from __future__ import annotations

import csv
import io
from typing import Any

from .assignment import DofGroup, DofTable, ElementParams, group_summary
from .combinatorics import SubSimplex, enumerate_subsimplices


def fixed_width_report(table: DofTable, debug_face_checks: bool = False) -> str:
    """Per-level, per-order counts in the fixed-width reference layout."""
    params = table.params
    n = params.n
    summary = group_summary(table)
    lines: list[str] = []
    if debug_face_checks and n >= 1:
        lines.extend(_face_check_lines(table))
    grand_total = 0
    for level in range(n + 1):
        nsubs = len(enumerate_subsimplices(n, level))
        cum = 0
        for d in range(params.max_order(level) + 1):
            count = summary.per_order[(level, d)]
            cum += count
            lines.append(
                f"simplex{level:2d}  derivative{d:2d} dof {count:7d}  sum={cum:8d}"
            )
        lines.append(
            f"level  {level:2d}  #simplex{nsubs:4d} dofs{cum:7d} total{cum * nsubs:8d}"
        )
        grand_total += cum * nsubs
    lines.append(
        f"(n m k_1)={params.n:2d}{params.m:2d}{params.k1:2d}"
        f",dim P_{{{params.k:3d}}}={summary.dim_pk:8d}"
        f"C^m-P_k^n={grand_total:8d}"
    )
    return "\n".join(lines) + "\n"


def _face_check_lines(table: DofTable) -> list[str]:
    """First member claimed by the first facet-level sub-simplex, per order."""
    n = table.params.n
    level = max(n - 1, 0)
    first = enumerate_subsimplices(n, level)[0]
    lines = []
    for d in range(table.params.max_order(level) + 1):
        grp = table.group(first, d)
        if not grp.members:
            continue
        member = grp.members[0]
        lines.append(
            "check: "
            + "".join(f"{a:4d}" for a in member)
            + "    "
            + f"{level:4d}{d:4d}"
            + "".join(f"{v:4d}" for v in first.vertices)
        )
    return lines


def table_to_dict(table: DofTable) -> dict[str, Any]:
    """JSON-ready representation with a stable key order."""
    summary = group_summary(table)
    return {
        "params": {
            "n": table.params.n,
            "m": table.params.m,
            "k1": table.params.k1,
            "k": table.params.k,
        },
        "groups": [
            {
                "level": g.level,
                "vertices": list(g.subsimplex.vertices),
                "order": g.order,
                "members": [list(m) for m in g.members],
            }
            for g in table.groups
        ],
        "totals": {
            "per_level": [
                {"level": lev, "per_entity": per, "total": tot}
                for (lev, per), (_, tot) in zip(
                    summary.per_level_per_entity, summary.per_level_total
                )
            ],
            "grand_total": summary.grand_total,
            "dim_pk": summary.dim_pk,
        },
    }


def table_from_dict(data: dict[str, Any]) -> DofTable:
    """Inverse of :func:`table_to_dict`."""
    p = data["params"]
    params = ElementParams(n=p["n"], m=p["m"], k1=p["k1"])
    groups = [
        DofGroup(
            subsimplex=SubSimplex(tuple(g["vertices"])),
            order=g["order"],
            members=tuple(tuple(m) for m in g["members"]),
        )
        for g in data["groups"]
    ]
    return DofTable(params=params, groups=groups)


def table_to_csv(table: DofTable) -> str:
    """One row per multi-index: exponents, home sub-simplex, order, ordinal."""
    n = table.params.n
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(
        [f"alpha_{i}" for i in range(n + 1)]
        + ["level", "vertices", "order", "ordinal"]
    )
    for g in table.groups:
        vtx = "-".join(map(str, g.subsimplex.vertices))
        for ordinal, member in enumerate(g.members):
            writer.writerow(list(member) + [g.level, vtx, g.order, ordinal])
    return buf.getvalue()
