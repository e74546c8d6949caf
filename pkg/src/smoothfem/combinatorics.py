"""Barycentric multi-index and sub-simplex enumeration on an n-simplex.

A barycentric multi-index is a tuple ``alpha = (a_0, ..., a_n)`` of
non-negative integers with ``sum(alpha) == k``; it addresses a lattice
point ``alpha / k`` (or a Bernstein basis function) on the simplex.
Multi-indices are represented as plain tuples of ints throughout.

Enumeration order is pinned: ``a_1`` varies slowest (ascending ``0..k``),
then ``a_2``, ..., ``a_n``, and ``a_0 = k - sum(a_1..a_n)`` is derived.
This total order is what makes the greedy DOF assignment and the printed
reports reproducible, so it must not change.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

#: Hard cap on the spatial dimension of the enumeration routines.
MAX_DIM = 6

#: A barycentric multi-index: tuple of n+1 non-negative ints summing to k.
MultiIndex = tuple


def dim_pk(k: int, n: int) -> int:
    """Dimension of the space of degree-``k`` polynomials in ``n`` variables.

    Returns ``C(k+n, n)`` for ``k >= 0`` and ``0`` for negative ``k``.  The
    ``dim P_j = 0`` convention for ``j < 0`` keeps the per-entity count
    formulas uniform for small smoothness orders.
    """
    if n < 0:
        raise ValueError(f"spatial dimension must be >= 0, got {n}")
    if k < 0:
        return 0
    return comb(k + n, n)


@dataclass(frozen=True, order=True)
class SubSimplex:
    """A sub-simplex of the n-simplex, identified by its vertex subset.

    ``vertices`` is a strictly increasing tuple of vertex numbers drawn
    from ``{0, ..., n}``.  Level 0 is a vertex, level 1 an edge, and so
    on up to level n, the cell itself.
    """

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        v = self.vertices
        if not v or any(b <= a for a, b in zip(v, v[1:])):
            raise ValueError(f"vertices must be strictly increasing, got {v}")
        if v[0] < 0:
            raise ValueError(f"vertex numbers must be >= 0, got {v}")

    @property
    def level(self) -> int:
        """Dimension of the sub-simplex."""
        return len(self.vertices) - 1


def enumerate_multiindices(n: int, k: int) -> list[MultiIndex]:
    """All degree-``k`` barycentric multi-indices on the n-simplex.

    The list has ``dim_pk(k, n)`` entries, in the pinned loop order
    described in the module docstring.
    """
    if not 1 <= n <= MAX_DIM:
        raise ValueError(f"n must be in 1..{MAX_DIM}, got {n}")
    if k < 0:
        raise ValueError(f"degree must be >= 0, got {k}")

    out: list[MultiIndex] = []

    def scan(prefix: tuple[int, ...], rem: int) -> None:
        if len(prefix) == n:
            out.append((rem, *prefix))
            return
        for v in range(rem + 1):
            scan(prefix + (v,), rem - v)

    scan((), k)
    return out


def enumerate_subsimplices(n: int, level: int) -> list[SubSimplex]:
    """All level-``level`` sub-simplices of the n-simplex, lexicographic.

    Returns the ``C(n+1, level+1)`` vertex subsets in the order produced
    by nested ascending loops ``i1 < i2 < ...``.
    """
    if not 1 <= n <= MAX_DIM:
        raise ValueError(f"n must be in 1..{MAX_DIM}, got {n}")
    if not 0 <= level <= n:
        raise ValueError(f"level must be in 0..{n}, got {level}")
    return [SubSimplex(v) for v in combinations(range(n + 1), level + 1)]
