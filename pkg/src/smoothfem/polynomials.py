"""Bernstein basis on a simplex: evaluation, exact derivatives, Vandermonde.

Derivatives use the degree-lowering recursion

    D_u B^k_a = k * sum_i (grad(lambda_i) . u) * B^{k-1}_{a - e_i}

iterated once per derivative direction; no finite differences anywhere.
Functional rows are assembled by running the recursion backwards: start
from the vector of all degree-(k-r) Bernstein values at the evaluation
point and lift it degree by degree through sparse index maps.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod

import numpy as np
import scipy.linalg

from .assignment import ElementParams
from .combinatorics import MultiIndex, dim_pk, enumerate_multiindices
from .functionals import NodalFunctional
from .geometry import Simplex, barycentric_coords

#: Matrix sizes up to which the dual solve is refined and its residual
#: evaluated in extended precision.
_EXTENDED_PRECISION_LIMIT = 2000


@lru_cache(maxsize=None)
def _lattice(n: int, k: int) -> np.ndarray:
    arr = np.array(enumerate_multiindices(n, k), dtype=np.int64)
    arr.setflags(write=False)
    return arr


@lru_cache(maxsize=None)
def _positions(n: int, k: int) -> dict[MultiIndex, int]:
    return {tuple(a): i for i, a in enumerate(enumerate_multiindices(n, k))}


@lru_cache(maxsize=None)
def _multinomials(n: int, k: int) -> np.ndarray:
    lat = _lattice(n, k)
    coeffs = np.array(
        [factorial(k) / prod(factorial(int(a)) for a in row) for row in lat]
    )
    coeffs.setflags(write=False)
    return coeffs


@lru_cache(maxsize=None)
def _lowering_maps(n: int, k: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """Per barycentric axis i: (rows of degree-k lattice with a_i > 0,
    positions of a - e_i in the degree-(k-1) lattice)."""
    lat = _lattice(n, k)
    low = _positions(n, k - 1)
    maps = []
    for i in range(n + 1):
        rows = np.flatnonzero(lat[:, i] > 0)
        targets = np.array(
            [low[tuple(r)] for r in lat[rows] - np.eye(n + 1, dtype=np.int64)[i]],
            dtype=np.int64,
        )
        maps.append((rows, targets))
    return maps


@dataclass
class BernsteinBasis:
    """Degree-k Bernstein basis attached to a physical simplex."""

    simplex: Simplex
    degree: int

    @property
    def n(self) -> int:
        return self.simplex.dim

    @property
    def size(self) -> int:
        return dim_pk(self.degree, self.n)

    @property
    def dimension_index(self) -> list[MultiIndex]:
        return enumerate_multiindices(self.n, self.degree)

    def all_values(self, lam: np.ndarray, degree: int | None = None) -> np.ndarray:
        """Values of every degree-``degree`` basis function at barycentric lam."""
        deg = self.degree if degree is None else degree
        lat = _lattice(self.n, deg)
        powers = np.vander(np.asarray(lam, dtype=float), deg + 1, increasing=True)
        vals = _multinomials(self.n, deg).copy()
        for i in range(self.n + 1):
            vals *= powers[i, lat[:, i]]
        return vals


def bernstein_eval(basis: BernsteinBasis, alpha: MultiIndex, point) -> float:
    """B_alpha(point) = multinomial(k; alpha) * prod lambda_i ** alpha_i."""
    if sum(alpha) != basis.degree:
        raise ValueError(f"|alpha| = {sum(alpha)} != degree {basis.degree}")
    lam = barycentric_coords(basis.simplex, point)
    coeff = factorial(basis.degree) / prod(factorial(int(a)) for a in alpha)
    return float(coeff * prod(float(l) ** a for l, a in zip(lam, alpha)))


def derivative_row(
    basis: BernsteinBasis, point, directions
) -> np.ndarray:
    """Vector of (D_{u_1} ... D_{u_r} B_alpha)(point) over the whole basis.

    ``directions`` is a sequence of direction vectors, one per derivative
    (repeat a vector for higher powers).  Orders above the polynomial
    degree yield the zero row.
    """
    k, n = basis.degree, basis.n
    r = len(directions)
    if r > k:
        return np.zeros(basis.size)
    lam = barycentric_coords(basis.simplex, point)
    w = basis.all_values(lam, degree=k - r)
    grads = basis.simplex.barycentric_gradients
    for step, u in enumerate(directions):
        j = k - r + step + 1
        g = grads @ np.asarray(u, dtype=float)
        lifted = np.zeros(dim_pk(j, n))
        for i, (rows, targets) in enumerate(_lowering_maps(n, j)):
            if g[i] != 0.0:
                lifted[rows] += (j * g[i]) * w[targets]
        w = lifted
    return w


def bernstein_derivative(
    basis: BernsteinBasis, alpha: MultiIndex, point, directions
) -> float:
    """Iterated directional derivative of a single basis function."""
    row = derivative_row(basis, point, directions)
    return float(row[_positions(basis.n, basis.degree)[tuple(alpha)]])


def apply_functional_to_basis(
    basis: BernsteinBasis, functional: NodalFunctional
) -> np.ndarray:
    """Row of the generalized Vandermonde matrix for one functional."""
    return derivative_row(basis, functional.point, functional.directions())


def build_vandermonde(
    functionals: list[NodalFunctional], basis: BernsteinBasis
) -> np.ndarray:
    """V[i, j] = functional_i(B_j), derivatives evaluated exactly."""
    if len(functionals) != basis.size:
        raise ValueError(
            f"{len(functionals)} functionals vs basis size {basis.size}"
        )
    V = np.empty((basis.size, basis.size))
    for i, f in enumerate(functionals):
        V[i] = apply_functional_to_basis(basis, f)
    return V


@dataclass
class DualBasisResult:
    """Outcome of the dual-basis solve V C = I."""

    coeffs: np.ndarray | None
    residual: float
    condition_estimate: float

    @property
    def singular(self) -> bool:
        return self.coeffs is None


def dual_basis(V: np.ndarray) -> DualBasisResult:
    """Solve V C = I by dense LU with partial pivoting.

    For moderate sizes the solution is polished by iterative refinement
    with extended-precision residuals, and the reported residual
    max|V C - I| is evaluated in extended precision as well.  A matrix
    singular to working precision yields a failure result, not an
    exception.
    """
    size = V.shape[0]
    if V.shape != (size, size):
        raise ValueError(f"square matrix required, got {V.shape}")
    anorm = np.abs(V).sum(axis=0).max()
    try:
        lu, piv = scipy.linalg.lu_factor(V)
    except scipy.linalg.LinAlgError:
        return DualBasisResult(None, np.inf, np.inf)
    diag = np.abs(np.diag(lu))
    if diag.min() <= np.finfo(float).eps * diag.max():
        return DualBasisResult(None, np.inf, np.inf)

    rcond = scipy.linalg.lapack.dgecon(lu, anorm, norm="1")[0]
    cond = float(1.0 / rcond) if rcond > 0 else np.inf

    eye = np.eye(size)
    C = scipy.linalg.lu_solve((lu, piv), eye)
    if size <= _EXTENDED_PRECISION_LIMIT:
        Vl = V.astype(np.longdouble)
        Cl = C.astype(np.longdouble)
        residual = np.inf
        for _ in range(4):
            R = eye - Vl @ Cl
            best = float(np.abs(R).max())
            if best >= residual:
                break
            residual = best
            Cl += scipy.linalg.lu_solve((lu, piv), R.astype(float))
        return DualBasisResult(Cl, residual, cond)
    C += scipy.linalg.lu_solve((lu, piv), eye - V @ C)
    residual = float(np.abs(V @ C - eye).max())
    return DualBasisResult(C, residual, cond)


@dataclass
class ElementDefinition:
    """A fully realized element: geometry, functionals, dual coefficients."""

    params: ElementParams
    simplex: Simplex
    functionals: list[NodalFunctional]
    basis: BernsteinBasis
    vandermonde: np.ndarray
    dual: DualBasisResult

    @property
    def dual_coeffs(self) -> np.ndarray | None:
        return self.dual.coeffs


def build_element(params: ElementParams, simplex: Simplex) -> ElementDefinition:
    """Assemble the Vandermonde system and dual basis for one cell."""
    from .assignment import assign_dofs
    from .functionals import realize_functionals

    table = assign_dofs(params)
    funcs = realize_functionals(table, simplex)
    basis = BernsteinBasis(simplex=simplex, degree=params.k)
    V = build_vandermonde(funcs, basis)
    return ElementDefinition(
        params=params,
        simplex=simplex,
        functionals=funcs,
        basis=basis,
        vandermonde=V,
        dual=dual_basis(V),
    )
