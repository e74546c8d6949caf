"""Closed-form per-entity DOF counts for n = 2, 3, 4 and dimension identities.

All arithmetic is exact (Python ints); every division in a formula is
asserted to be exact so a transcribed coefficient slip fails loudly
instead of rounding.

The 4D tetrahedron-level count is implemented as the explicit finite sum
(interior lattice minus corner and edge-wedge drops) rather than the
expanded quartic polynomial: the expanded form in circulation drops the
excess-degree dependence of the wedge term (it is off by
``k1 * m * (m^2 - 1)`` per tetrahedron) and fails the dimension identity
for ``m >= 2, k1 >= 1``.  The sum form agrees with the enumerator
everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .assignment import ElementParams, assign_dofs, group_summary
from .combinatorics import dim_pk


def _exact_div(num: int, den: int) -> int:
    if num % den:
        raise ArithmeticError(f"inexact division {num}/{den} in count formula")
    return num // den


@dataclass
class CountReport:
    """Per-level counts with the dimension cross-check.

    ``per_level_per_entity`` holds (level, count per sub-simplex);
    ``per_level_total`` multiplies by the number of sub-simplices.
    ``mismatches`` collects human-readable inconsistencies; an empty list
    means every check passed.
    """

    params: ElementParams
    per_level_per_entity: list[tuple[int, int]]
    per_level_total: list[tuple[int, int]]
    grand_total: int
    dim_pk: int
    per_order: dict[tuple[int, int], int] = field(default_factory=dict)
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches and self.grand_total == self.dim_pk


def closed_form_count(n: int, m: int, k1: int, level: int) -> int:
    """Closed-form DOF count on one level-``level`` sub-simplex.

    Supported for n in {2, 3, 4}; m >= 1; k1 >= 0.
    """
    if n not in (2, 3, 4):
        raise ValueError(f"closed forms exist for n in 2..4 only, got {n}")
    if m < 1 or k1 < 0:
        raise ValueError(f"need m >= 1 and k1 >= 0, got m={m}, k1={k1}")
    if not 0 <= level <= n:
        raise ValueError(f"level must be in 0..{n}, got {level}")

    if n == 2:
        k = 4 * m + 1 + k1
        if level == 0:
            # full derivative jet of order 2m at a vertex
            return _exact_div((2 * m + 1) * (2 * m + 2), 2)
        if level == 1:
            # order-i normal derivatives at k1 + i interior edge points
            return sum(k1 + i for i in range(m + 1))
        return dim_pk(k - 3 * m - 3, 2)

    if n == 3:
        if level == 0:
            return _exact_div((4 * m + 1) * (4 * m + 2) * (4 * m + 3), 6)
        if level == 1:
            t = 2 * m + 1
            return _exact_div(k1 * (t * t + t), 2) + _exact_div(t**3 - t, 3)
        if level == 2:
            return _exact_div(
                (m + 1) * (3 * k1 * k1 + 3 * k1 * (6 * m - 1) + 25 * m * m - 4 * m), 6
            )
        # interior lattice minus a corner drop at each of the 4 vertices
        base = _exact_div((4 * m + k1 - 2) * (4 * m + k1 - 1) * (4 * m + k1), 6)
        return base - 4 * dim_pk(m - 3, 3)

    k = 16 * m + 1 + k1
    if level == 0:
        return dim_pk(8 * m, 4)
    if level == 1:
        m1 = 4 * m + 1
        return _exact_div(k1 * m1 * (m1 + 1) * (m1 + 2), 6) + _exact_div(
            (m1 - 1) * m1 * (m1 + 1) * (m1 + 2), 8
        )
    if level == 2:
        return _exact_div(
            (m + 1)
            * (2 * m + 1)
            * (3 * k1 * k1 + 40 * k1 * m + 118 * m * m - 3 * k1 - 7 * m),
            6,
        )
    if level == 3:
        # normal-derivative layers minus vertex-corner drops ...
        total = sum(
            dim_pk(k - 8 * m - 4 + 3 * i, 3) - 4 * dim_pk(2 * m + 2 * i - 3, 3)
            for i in range(m + 1)
        )
        # ... minus the wedge-shaped overlaps along the 6 edges
        total -= 6 * sum(
            (i - j + 1) * (4 * m + 2 - j + k1)
            for i in range(2, m + 1)
            for j in range(2, i + 1)
        )
        return total
    # interior: lattice minus corner drops minus 4D edge wedges
    total = dim_pk(k - 5 * m - 5, 4) - 5 * dim_pk(4 * m - 4, 4)
    total -= 10 * sum(
        dim_pk(m - i, 2) * (4 * m + k1 - i + 3) for i in range(3, m + 1)
    )
    return total


def entity_count(n: int, level: int) -> int:
    """Number of level-``level`` sub-simplices of the n-simplex."""
    return comb(n + 1, level + 1)


def verify_dimension_identity(
    n: int, m: int, k1: int, *, against_assignment: bool = True
) -> CountReport:
    """Check sum(entities * closed form) == dim P_k, and optionally that
    every per-level closed form matches the greedy assignment.

    Mismatches are recorded in the report, never raised.
    """
    params = ElementParams(n=n, m=m, k1=k1)
    per_entity = [(lev, closed_form_count(n, m, k1, lev)) for lev in range(n + 1)]
    per_total = [(lev, entity_count(n, lev) * c) for lev, c in per_entity]
    grand = sum(t for _, t in per_total)
    dim = dim_pk(params.k, n)
    report = CountReport(
        params=params,
        per_level_per_entity=per_entity,
        per_level_total=per_total,
        grand_total=grand,
        dim_pk=dim,
    )
    if grand != dim:
        report.mismatches.append(
            f"closed-form total {grand} != dim P_{params.k}^({n}) = {dim}"
        )
    if against_assignment:
        summary = group_summary(assign_dofs(params))
        report.per_order = summary.per_order
        report.mismatches.extend(summary.mismatches)
        for (lev, closed), (_, assigned) in zip(
            per_entity, summary.per_level_per_entity
        ):
            if closed != assigned:
                report.mismatches.append(
                    f"level {lev}: closed form {closed} != assigned {assigned}"
                )
    return report
