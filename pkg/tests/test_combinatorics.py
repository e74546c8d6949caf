from itertools import product
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from smoothfem import dim_pk, enumerate_multiindices, enumerate_subsimplices
from smoothfem.combinatorics import SubSimplex


def loop_order_oracle(n, k):
    """Independent enumeration: brute-force product sorted by (a_1, ..., a_n)."""
    out = [
        (k - sum(tail),) + tail
        for tail in product(range(k + 1), repeat=n)
        if sum(tail) <= k
    ]
    return sorted(out, key=lambda a: a[1:])


class TestDimPk:
    @pytest.mark.parametrize(
        "k, n, expected",
        [
            (27, 3, 4060),
            (-1, 2, 0),
            (33, 3, comb(36, 3)),  # 7140
            (0, 0, 1),
            (5, 2, 21),
        ],
    )
    def test_values(self, k, n, expected):
        assert dim_pk(k, n) == expected

    def test_negative_dimension_rejected(self):
        with pytest.raises(ValueError):
            dim_pk(3, -1)


class TestEnumerateMultiindices:
    def test_small_exhaustive(self):
        assert enumerate_multiindices(1, 2) == [(2, 0), (1, 1), (0, 2)]

    def test_appendix_dimension(self):
        assert len(enumerate_multiindices(3, 27)) == 4060

    def test_loop_order(self):
        got = enumerate_multiindices(2, 5)
        assert len(got) == 21
        assert got[0] == (5, 0, 0)
        assert got == loop_order_oracle(2, 5)

    @pytest.mark.parametrize("n", [1, 2, 3])
    @pytest.mark.parametrize("k", [0, 1, 4, 7])
    def test_matches_oracle(self, n, k):
        assert enumerate_multiindices(n, k) == loop_order_oracle(n, k)

    @given(
        n=st.integers(min_value=1, max_value=4),
        k=st.integers(min_value=0, max_value=12),
    )
    @settings(max_examples=40, deadline=None)
    def test_invariants(self, n, k):
        out = enumerate_multiindices(n, k)
        assert len(out) == dim_pk(k, n)
        assert len(set(out)) == len(out)
        for alpha in out:
            assert len(alpha) == n + 1
            assert min(alpha) >= 0
            assert sum(alpha) == k

    @pytest.mark.parametrize("n, k", [(0, 3), (7, 2), (2, -1)])
    def test_rejects_out_of_range(self, n, k):
        with pytest.raises(ValueError):
            enumerate_multiindices(n, k)


class TestEnumerateSubsimplices:
    def test_tetrahedron_edges(self):
        edges = enumerate_subsimplices(3, 1)
        assert len(edges) == 6
        assert edges[0].vertices == (0, 1)

    def test_4d_triangles(self):
        assert len(enumerate_subsimplices(4, 2)) == 10

    def test_cell_itself(self):
        assert enumerate_subsimplices(2, 2) == [SubSimplex((0, 1, 2))]

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_counts_and_ordering(self, n):
        for level in range(n + 1):
            subs = enumerate_subsimplices(n, level)
            assert len(subs) == comb(n + 1, level + 1)
            assert len(set(subs)) == len(subs)
            assert subs == sorted(subs, key=lambda s: s.vertices)
            assert all(s.level == level for s in subs)

    def test_rejects_bad_level(self):
        with pytest.raises(ValueError):
            enumerate_subsimplices(3, 4)


class TestSubSimplex:
    def test_rejects_unsorted_vertices(self):
        with pytest.raises(ValueError):
            SubSimplex((1, 0))

    def test_level(self):
        assert SubSimplex((0, 2, 3)).level == 2
