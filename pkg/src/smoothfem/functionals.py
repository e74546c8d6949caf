"""Realization of assigned multi-indices as concrete nodal functionals.

Each entry of a :class:`~smoothfem.assignment.DofTable` becomes a point
plus a derivative specification:

* vertex groups carry the full set of Cartesian partials of the group's
  order, paired member-to-partial in lexicographic order;
* intermediate-level groups carry pure normal-monomial derivatives in the
  sub-simplex's intrinsic frame, at the point given by the normalized
  on-face part of the member;
* interior groups carry plain point values.

The off-face part of a member determines the normal exponents through
the canonical bijection: both sides are the lattice of compositions of
the order into ``n - level`` slots, enumerated identically, so the map
is the identity on tuples.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .assignment import DofTable
from .combinatorics import SubSimplex
from .geometry import NormalFrame, Simplex, normal_frame

#: Decimal digits kept when rounding coordinates for cross-cell matching.
MATCH_DIGITS = 9


class RealizationError(RuntimeError):
    """Raised when the realization produces colliding functionals."""


@dataclass(frozen=True)
class NodalFunctional:
    """A nodal linear functional: evaluation point + derivative spec."""

    point: tuple[float, ...]
    kind: str  # "value" | "vertex-partial" | "normal-derivative"
    home: SubSimplex
    cart_multiindex: tuple[int, ...] | None = None
    normal_powers: tuple[int, ...] | None = None
    frame: NormalFrame | None = None

    @property
    def order(self) -> int:
        if self.kind == "vertex-partial":
            return sum(self.cart_multiindex)
        if self.kind == "normal-derivative":
            return sum(self.normal_powers)
        return 0

    def directions(self) -> list[np.ndarray]:
        """Unit direction vectors of the iterated derivative, with repetition."""
        dim = len(self.point)
        dirs: list[np.ndarray] = []
        if self.kind == "vertex-partial":
            axes = np.eye(dim)
            for i, p in enumerate(self.cart_multiindex):
                dirs.extend([axes[i]] * p)
        elif self.kind == "normal-derivative":
            normals = self.frame.normals
            for i, p in enumerate(self.normal_powers):
                dirs.extend([normals[i]] * p)
        return dirs

    def match_key(self) -> tuple:
        """Geometric identity of the functional, shared across cells."""
        pt = tuple(round(c, MATCH_DIGITS) + 0.0 for c in self.point)
        return (self.kind, pt, self.cart_multiindex, self.normal_powers)


def compositions(total: int, slots: int) -> list[tuple[int, ...]]:
    """All tuples of ``slots`` non-negative ints summing to ``total``, lex order."""
    if slots == 0:
        return [()] if total == 0 else []
    out: list[tuple[int, ...]] = []

    def scan(prefix: tuple[int, ...], rem: int) -> None:
        if len(prefix) == slots - 1:
            out.append(prefix + (rem,))
            return
        for v in range(rem + 1):
            scan(prefix + (v,), rem - v)

    scan((), total)
    return out


def off_face_bijection(
    off_components: tuple[int, ...], d: int, q: int
) -> tuple[int, ...]:
    """Map an off-face distribution to a normal-monomial exponent tuple.

    The r-th distribution in lexicographic order corresponds to the r-th
    degree-``d`` exponent tuple over ``q`` normal directions; both
    enumerations coincide, so the map is the identity.
    """
    if len(off_components) != q:
        raise ValueError(f"expected {q} off-face entries, got {off_components}")
    if sum(off_components) != d:
        raise ValueError(f"off-face entries {off_components} do not sum to {d}")
    return tuple(off_components)


def realize_functionals(
    table: DofTable, simplex: Simplex
) -> list[NodalFunctional]:
    """One functional per multi-index, in DofTable order."""
    params = table.params
    n = params.n
    if simplex.dim != n:
        raise ValueError(f"simplex dimension {simplex.dim} != element n {n}")
    k = params.k
    coords = simplex.coords

    out: list[NodalFunctional] = []
    for grp in table.groups:
        if not grp.members:
            continue
        sub = grp.subsimplex
        level, d = sub.level, grp.order
        if level == 0:
            vertex = tuple(coords[sub.vertices[0]])
            betas = compositions(d, n)
            ranks = {m: r for r, m in enumerate(sorted(grp.members))}
            if len(betas) != len(grp.members):
                raise RealizationError(
                    f"vertex group {sub.vertices} order {d}: "
                    f"{len(grp.members)} members vs {len(betas)} partials"
                )
            for member in grp.members:
                out.append(
                    NodalFunctional(
                        point=vertex,
                        kind="vertex-partial" if d else "value",
                        home=sub,
                        cart_multiindex=betas[ranks[member]] if d else None,
                    )
                )
        elif level == n:
            for member in grp.members:
                point = (coords.T @ np.array(member)) / k
                out.append(
                    NodalFunctional(point=tuple(point), kind="value", home=sub)
                )
        else:
            # frame from the sub-simplex's own coordinates, ascending global ids
            local = sorted(sub.vertices, key=lambda v: simplex.global_ids[v])
            frame = normal_frame(coords[local])
            off = [i for i in range(n + 1) if i not in sub.vertices]
            for member in grp.members:
                on_part = np.array([member[i] for i in sub.vertices], dtype=float)
                point = (coords[list(sub.vertices)].T @ on_part) / (k - d)
                powers = off_face_bijection(
                    tuple(member[i] for i in off), d, n - level
                )
                out.append(
                    NodalFunctional(
                        point=tuple(point),
                        kind="normal-derivative" if d else "value",
                        home=sub,
                        normal_powers=powers if d else None,
                        frame=frame if d else None,
                    )
                )

    keys = [f.match_key() for f in out]
    if len(set(keys)) != len(keys):
        seen: dict[tuple, int] = {}
        for i, key in enumerate(keys):
            if key in seen:
                raise RealizationError(
                    f"functionals {seen[key]} and {i} coincide: {key}"
                )
            seen[key] = i
    return out
