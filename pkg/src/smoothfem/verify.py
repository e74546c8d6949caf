"""End-to-end numeric verification: unisolvency, continuity, oracle sweeps."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg
from scipy.stats import qmc

from .assignment import AssignmentError, ElementParams, assign_dofs
from .combinatorics import SubSimplex
from .counts import verify_dimension_identity
from .functionals import realize_functionals
from .geometry import Simplex, normal_frame
from .polynomials import (
    BernsteinBasis,
    ElementDefinition,
    build_element,
    build_vandermonde,
    derivative_row,
)

#: Barycentric margin keeping facet sample points away from the boundary.
_FACET_MARGIN = 0.05


class IdentificationError(RuntimeError):
    """A shared-facet functional of one cell has no counterpart in the other."""


def reference_simplex(n: int) -> Simplex:
    """Unit right n-simplex (vertices at the origin and coordinate axes)."""
    eye = np.eye(n)
    return Simplex(vertices=((0.0,) * n, *map(tuple, eye)))


@dataclass
class UnisolvencyResult:
    residual: float
    condition_estimate: float
    passed: bool
    element: ElementDefinition | None = None


def check_unisolvency(
    params: ElementParams,
    simplex: Simplex | None = None,
    tol: float = 1e-8,
) -> UnisolvencyResult:
    """Assemble the element and test the dual-basis residual against tol."""
    if simplex is None:
        simplex = reference_simplex(params.n)
    element = build_element(params, simplex)
    res = element.dual
    return UnisolvencyResult(
        residual=float(res.residual),
        condition_estimate=float(res.condition_estimate),
        passed=bool(res.residual < tol),
        element=element,
    )


def interpolation_probe(
    element: ElementDefinition, seed: int = 0, n_points: int = 10
) -> float:
    """Max relative pointwise error when re-interpolating a random polynomial.

    Draws random Bernstein coefficients, pushes them through the
    functional values and the dual basis, and compares the two
    polynomials at random interior points.
    """
    rng = np.random.default_rng(seed)
    coeffs = rng.standard_normal(element.basis.size)
    dof_values = element.vandermonde @ coeffs
    recovered = np.asarray(element.dual.coeffs @ dof_values, dtype=float)

    n = element.simplex.dim
    worst = 0.0
    for _ in range(n_points):
        lam = rng.dirichlet(np.ones(n + 1))
        vals = element.basis.all_values(lam)
        exact = float(vals @ coeffs)
        approx = float(vals @ recovered)
        scale = max(np.abs(vals @ np.abs(coeffs)), 1e-30)
        worst = max(worst, abs(exact - approx) / scale)
    return worst


@dataclass(frozen=True)
class CellPair:
    """Two simplices sharing a facet, glued through global vertex ids."""

    cell_a: Simplex
    cell_b: Simplex

    def __post_init__(self) -> None:
        shared = set(self.cell_a.global_ids) & set(self.cell_b.global_ids)
        n = self.cell_a.dim
        if self.cell_b.dim != n or len(shared) != n:
            raise ValueError("cells must share exactly one facet")
        for gid in shared:
            pa = self.cell_a.coords[self.cell_a.global_ids.index(gid)]
            pb = self.cell_b.coords[self.cell_b.global_ids.index(gid)]
            if not np.allclose(pa, pb, atol=1e-12):
                raise ValueError(f"shared vertex {gid} has differing coordinates")

    @property
    def shared_gids(self) -> tuple[int, ...]:
        return tuple(
            sorted(set(self.cell_a.global_ids) & set(self.cell_b.global_ids))
        )

    def facet_in(self, cell: Simplex) -> SubSimplex:
        local = sorted(
            cell.global_ids.index(g) for g in self.shared_gids
        )
        return SubSimplex(tuple(local))

    def facet_coords(self) -> np.ndarray:
        """Facet vertex coordinates in ascending global-id order."""
        cell = self.cell_a
        return cell.coords[[cell.global_ids.index(g) for g in self.shared_gids]]


def standard_cell_pair(n: int) -> CellPair:
    """A deliberately non-symmetric pair of cells sharing one facet."""
    base = reference_simplex(n)
    facet = base.coords[:n]  # origin + first n-1 axis points
    apex_a = np.full(n, 0.15)
    apex_a[-1] = 0.9
    apex_b = np.full(n, 0.25)
    apex_b[-1] = -0.8
    cell_a = Simplex(
        vertices=tuple(map(tuple, np.vstack([facet, apex_a]))),
        global_ids=tuple(range(n)) + (n,),
    )
    cell_b = Simplex(
        vertices=tuple(map(tuple, np.vstack([facet, apex_b]))),
        global_ids=tuple(range(n)) + (n + 1,),
    )
    return CellPair(cell_a, cell_b)


@dataclass
class JumpReport:
    """Max inter-cell jumps of facet-normal derivatives, per order."""

    params: ElementParams
    seed: int
    jumps: list[float] = field(default_factory=list)  # abs jump per order 0..
    scales: list[float] = field(default_factory=list)
    shared_count: int = 0

    def relative(self, order: int) -> float:
        scale = self.scales[order]
        if scale == 0.0:
            return 0.0 if self.jumps[order] == 0.0 else np.inf
        return self.jumps[order] / scale


def facet_sample_points(coords: np.ndarray, count: int) -> np.ndarray:
    """Low-discrepancy points strictly inside the facet.

    Halton points in the cube are mapped onto the simplex through
    normalized exponential spacings, then pulled inward by a fixed
    barycentric margin.
    """
    nverts = coords.shape[0]
    sampler = qmc.Halton(d=nverts, scramble=False)
    sampler.fast_forward(1)  # first point is all zeros
    out = []
    while len(out) < count:
        u = sampler.random(1)[0]
        w = -np.log1p(-u)
        if w.sum() <= 0:
            continue
        bary = _FACET_MARGIN + (1.0 - nverts * _FACET_MARGIN) * w / w.sum()
        out.append(bary @ coords)
    return np.array(out)


def _solve_coefficients(V: np.ndarray, dof_values: np.ndarray) -> np.ndarray:
    lu_piv = scipy.linalg.lu_factor(V)
    c = scipy.linalg.lu_solve(lu_piv, dof_values)
    c += scipy.linalg.lu_solve(lu_piv, dof_values - V @ c)
    return c


def continuity_jump_test(
    params: ElementParams,
    pair: CellPair | None = None,
    seed: int = 0,
    n_samples: int = 20,
    max_order: int | None = None,
) -> JumpReport:
    """Two-cell smoothness check across the shared facet.

    Shared DOF coefficients are copied from cell A to cell B through the
    geometric identification; all other coefficients are independent
    random draws.  The report holds the max absolute jump of each
    facet-normal derivative order (0 .. max_order, default m+1) over the
    sample points, together with the per-order magnitude scale.
    """
    if pair is None:
        pair = standard_cell_pair(params.n)
    if max_order is None:
        max_order = params.m + 1

    table = assign_dofs(params)
    cells = (pair.cell_a, pair.cell_b)
    facets = [pair.facet_in(c) for c in cells]
    funcs = [realize_functionals(table, c) for c in cells]
    bases = [BernsteinBasis(simplex=c, degree=params.k) for c in cells]
    mats = [build_vandermonde(f, b) for f, b in zip(funcs, bases)]

    shared_maps = []
    for facet, flist in zip(facets, funcs):
        fverts = set(facet.vertices)
        shared_maps.append(
            {
                f.match_key(): i
                for i, f in enumerate(flist)
                if set(f.home.vertices) <= fverts
            }
        )
    if shared_maps[0].keys() != shared_maps[1].keys():
        only_a = set(shared_maps[0]) - set(shared_maps[1])
        only_b = set(shared_maps[1]) - set(shared_maps[0])
        raise IdentificationError(
            f"shared-facet DOF sets differ: {len(only_a)} unmatched in A, "
            f"{len(only_b)} in B; first: {list(only_a or only_b)[:2]}"
        )

    rng = np.random.default_rng(seed)
    values_a = rng.standard_normal(len(funcs[0]))
    values_b = rng.standard_normal(len(funcs[1]))
    for key, ia in shared_maps[0].items():
        values_b[shared_maps[1][key]] = values_a[ia]

    coeffs = [
        _solve_coefficients(V, vals)
        for V, vals in zip(mats, (values_a, values_b))
    ]

    facet_coords = pair.facet_coords()
    normal = normal_frame(facet_coords).normals[0]
    points = facet_sample_points(facet_coords, n_samples)

    report = JumpReport(params=params, seed=seed, shared_count=len(shared_maps[0]))
    for order in range(max_order + 1):
        dirs = [normal] * order
        jump = 0.0
        scale = 0.0
        for x in points:
            vals = [
                float(derivative_row(b, x, dirs) @ c)
                for b, c in zip(bases, coeffs)
            ]
            jump = max(jump, abs(vals[0] - vals[1]))
            scale = max(scale, abs(vals[0]), abs(vals[1]))
        report.jumps.append(jump)
        report.scales.append(scale)
    return report


@dataclass
class SweepReport:
    cases: list[tuple[int, int, int, bool, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(ok for _, _, _, ok, _ in self.cases)

    @property
    def failures(self) -> list[tuple[int, int, int, bool, str]]:
        return [c for c in self.cases if not c[3]]


def oracle_sweep(
    n_max: int = 4,
    m_max: int = 4,
    k1_max: int = 2,
    m_max_4d: int = 2,
) -> SweepReport:
    """Cross-check assignment partitions against closed forms and dim P_k."""
    report = SweepReport()
    for n in range(2, n_max + 1):
        top_m = m_max_4d if n == 4 else m_max
        for m in range(1, top_m + 1):
            for k1 in range(k1_max + 1):
                try:
                    cr = verify_dimension_identity(n, m, k1)
                except AssignmentError as exc:
                    report.cases.append((n, m, k1, False, str(exc)))
                    continue
                detail = (
                    f"total {cr.grand_total} = dim {cr.dim_pk}"
                    if cr.ok
                    else "; ".join(cr.mismatches)
                )
                report.cases.append((n, m, k1, cr.ok, detail))
    return report
