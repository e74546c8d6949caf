"""Greedy partition of degree-k multi-indices into nodal DOF groups.

Every degree-k barycentric multi-index is claimed by exactly one
``(sub-simplex, derivative order)`` group.  The scan runs levels from
vertices upward; within a level it visits sub-simplices in lexicographic
order and, for each sub-simplex, derivative orders ascending.  A
not-yet-claimed multi-index ``alpha`` joins group ``(F, d)`` when the sum
of its entries over the vertices of ``F`` equals ``k - d``.  The
admissibility bound ``k >= 2^n m + 1`` guarantees (via the dimension
identities) that nothing is left over; any leftover is a hard error.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .combinatorics import (
    MAX_DIM,
    MultiIndex,
    SubSimplex,
    dim_pk,
    enumerate_multiindices,
    enumerate_subsimplices,
)


class AssignmentError(RuntimeError):
    """Raised when the greedy scan fails to exhaust the index set."""


@dataclass(frozen=True)
class ElementParams:
    """Parameters of a C^m smooth degree-k element on an n-simplex.

    ``k1`` is the excess above the minimal admissible degree:
    ``k = m * 2**n + 1 + k1``.
    """

    n: int
    m: int
    k1: int

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_DIM:
            raise ValueError(f"n must be in 1..{MAX_DIM}, got {self.n}")
        if self.m < 1:
            raise ValueError(f"smoothness order must be >= 1, got {self.m}")
        if self.k1 < 0:
            raise ValueError(f"excess degree must be >= 0, got {self.k1}")

    @property
    def k(self) -> int:
        return self.m * 2**self.n + 1 + self.k1

    def max_order(self, level: int) -> int:
        """Largest derivative order carried by a level-``level`` group."""
        if level == self.n:
            return 0
        return self.m * 2 ** (self.n - level - 1)


@dataclass(frozen=True)
class DofGroup:
    """One (sub-simplex, derivative order) block of the partition.

    ``members`` are the claimed multi-indices in enumeration order; the
    position of a member in this tuple is its stable ordinal within the
    group.  Every member satisfies ``sum(alpha[v] for v in vertices) ==
    k - order``.
    """

    subsimplex: SubSimplex
    order: int
    members: tuple[MultiIndex, ...]

    @property
    def level(self) -> int:
        return self.subsimplex.level


@dataclass
class DofTable:
    """Full partition of the degree-k index set for one element."""

    params: ElementParams
    groups: list[DofGroup] = field(default_factory=list)

    def groups_at(self, level: int) -> list[DofGroup]:
        return [g for g in self.groups if g.level == level]

    def group(self, subsimplex: SubSimplex, order: int) -> DofGroup:
        for g in self.groups:
            if g.subsimplex == subsimplex and g.order == order:
                return g
        raise KeyError((subsimplex, order))

    @property
    def total_dofs(self) -> int:
        return sum(len(g.members) for g in self.groups)


def assign_dofs(params: ElementParams) -> DofTable:
    """Run the greedy scan and return the resulting partition.

    Raises :class:`AssignmentError` if any multi-index remains unclaimed
    after the interior level; this signals inadmissible parameters or a
    logic fault and must not be silenced, since a lossy table would
    poison every matrix built from it.
    """
    n, k = params.n, params.k
    mis = enumerate_multiindices(n, k)
    arr = np.array(mis, dtype=np.int64)
    unclaimed = np.ones(len(mis), dtype=bool)

    table = DofTable(params=params)
    for level in range(n + 1):
        for sub in enumerate_subsimplices(n, level):
            cols = arr[:, list(sub.vertices)].sum(axis=1)
            for d in range(params.max_order(level) + 1):
                take = unclaimed & (cols == k - d)
                members = tuple(mis[i] for i in np.flatnonzero(take))
                unclaimed &= ~take
                table.groups.append(DofGroup(sub, d, members))

    if unclaimed.any():
        leftover = [mis[i] for i in np.flatnonzero(unclaimed)[:5]]
        raise AssignmentError(
            f"{int(unclaimed.sum())} indices unassigned for "
            f"(n={n}, m={params.m}, k1={params.k1}); first: {leftover}"
        )
    assert table.total_dofs == dim_pk(k, n)
    return table


def group_summary(table: DofTable):
    """Per-level, per-order counts of the partition as a CountReport.

    Counts are taken from the lexicographically first sub-simplex of each
    level; a mismatch against any other sub-simplex of the same level is
    recorded, not raised, since same-level homogeneity is an empirical
    expectation rather than a proved property.
    """
    from .counts import CountReport

    params = table.params
    n = params.n
    per_level_per_entity: list[tuple[int, int]] = []
    per_level_total: list[tuple[int, int]] = []
    per_order: dict[tuple[int, int], int] = {}
    mismatches: list[str] = []
    grand_total = 0
    for level in range(n + 1):
        subs = enumerate_subsimplices(n, level)
        level_count = 0
        for d in range(params.max_order(level) + 1):
            counts = [len(table.group(s, d).members) for s in subs]
            if len(set(counts)) != 1:
                mismatches.append(
                    f"level {level} order {d}: unequal per-simplex counts {counts}"
                )
            per_order[(level, d)] = counts[0]
            level_count += counts[0]
        per_level_per_entity.append((level, level_count))
        per_level_total.append((level, level_count * len(subs)))
        grand_total += level_count * len(subs)

    return CountReport(
        params=params,
        per_level_per_entity=per_level_per_entity,
        per_level_total=per_level_total,
        grand_total=grand_total,
        dim_pk=dim_pk(params.k, n),
        per_order=per_order,
        mismatches=mismatches,
    )
