"""Physical simplices, barycentric maps, and intrinsic sub-simplex frames."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

#: Residual-norm threshold below which a candidate axis is considered
#: linearly dependent during Gram-Schmidt completion.
_DEPENDENCE_TOL = 1e-10

#: Relative volume threshold for flagging a degenerate simplex.
_DEGENERACY_TOL = 1e-12


class DegenerateGeometryError(ValueError):
    """Raised for affinely dependent vertex sets."""


@dataclass(frozen=True)
class Simplex:
    """An n-simplex in R^n given by its n+1 vertex coordinates.

    ``global_ids`` are the mesh-level vertex keys; they default to local
    numbering and only matter when two cells must agree on shared
    sub-simplex orientation.
    """

    vertices: tuple[tuple[float, ...], ...]
    global_ids: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        v = np.asarray(self.vertices, dtype=float)
        npts, dim = v.shape
        if npts != dim + 1:
            raise ValueError(f"need n+1 vertices in R^n, got shape {v.shape}")
        if not self.global_ids:
            object.__setattr__(self, "global_ids", tuple(range(npts)))
        if len(self.global_ids) != npts:
            raise ValueError("one global id per vertex required")
        edges = v[1:] - v[0]
        if abs(np.linalg.det(edges)) <= _DEGENERACY_TOL * max(
            np.linalg.norm(edges, axis=1).max() ** dim, 1.0
        ):
            raise DegenerateGeometryError(f"degenerate simplex {self.vertices}")

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    @property
    def coords(self) -> np.ndarray:
        return np.asarray(self.vertices, dtype=float)

    @property
    def barycentric_gradients(self) -> np.ndarray:
        """Constant gradients of the barycentric coordinates, shape (n+1, n)."""
        return _affine_map(self.coords)[0]


def _affine_map(coords: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Gradients and offsets so that lambda(x) = G @ x + c."""
    n = coords.shape[1]
    mat = np.vstack([np.ones(n + 1), coords.T])  # (n+1, n+1)
    inv = np.linalg.inv(mat)
    return inv[:, 1:], inv[:, 0]


def barycentric_coords(simplex: Simplex, point) -> np.ndarray:
    """Barycentric coordinates of ``point`` with respect to ``simplex``."""
    grads, offset = _affine_map(simplex.coords)
    return grads @ np.asarray(point, dtype=float) + offset


@dataclass(frozen=True)
class NormalFrame:
    """Orthonormal tangent/normal basis intrinsic to a sub-simplex.

    The frame is a function of the sub-simplex's own vertex coordinates
    (taken in ascending global-vertex order) only, never of a host cell,
    so the two cells sharing a facet construct the identical frame.
    """

    tangent_basis: tuple[tuple[float, ...], ...]
    normal_basis: tuple[tuple[float, ...], ...]

    @property
    def dim(self) -> int:
        for basis in (self.tangent_basis, self.normal_basis):
            if basis:
                return len(basis[0])
        return 0

    @property
    def tangents(self) -> np.ndarray:
        if not self.tangent_basis:
            return np.zeros((0, self.dim))
        return np.asarray(self.tangent_basis, dtype=float)

    @property
    def normals(self) -> np.ndarray:
        if not self.normal_basis:
            return np.zeros((0, self.dim))
        return np.asarray(self.normal_basis, dtype=float)


def normal_frame(sub_vertex_coords) -> NormalFrame:
    """Build the intrinsic frame of a sub-simplex from its vertex coordinates.

    Tangents come from Gram-Schmidt on the edge vectors ``v_i - v_0`` in
    the given (ascending global-vertex) order; normals complete the basis
    by Gram-Schmidt against the canonical coordinate axes in index order,
    skipping near-dependent candidates.
    """
    pts = np.asarray(sub_vertex_coords, dtype=float)
    npts, dim = pts.shape
    if npts > dim + 1:
        raise ValueError(f"too many vertices ({npts}) for R^{dim}")

    basis: list[np.ndarray] = []
    scale = max(np.linalg.norm(pts[1:] - pts[0], axis=1).max(), 1.0) if npts > 1 else 1.0
    for edge in pts[1:] - pts[0]:
        vec = _orthogonalize(edge, basis)
        if np.linalg.norm(vec) <= _DEPENDENCE_TOL * scale:
            raise DegenerateGeometryError("affinely dependent sub-simplex vertices")
        basis.append(vec / np.linalg.norm(vec))
    n_tangent = len(basis)

    for axis in np.eye(dim):
        if len(basis) == dim:
            break
        vec = _orthogonalize(axis, basis)
        if np.linalg.norm(vec) > _DEPENDENCE_TOL:
            basis.append(vec / np.linalg.norm(vec))
    assert len(basis) == dim

    return NormalFrame(
        tangent_basis=tuple(tuple(v) for v in basis[:n_tangent]),
        normal_basis=tuple(tuple(v) for v in basis[n_tangent:]),
    )


def _orthogonalize(vec: np.ndarray, basis: list[np.ndarray]) -> np.ndarray:
    out = vec.astype(float).copy()
    # two passes for numerical orthogonality
    for _ in range(2):
        for b in basis:
            out -= (out @ b) * b
    return out
