import numpy as np
import pytest

from smoothfem import (
    CellPair,
    ElementParams,
    build_element,
    check_unisolvency,
    continuity_jump_test,
    oracle_sweep,
    reference_simplex,
    standard_cell_pair,
)
from smoothfem.geometry import Simplex, barycentric_coords
from smoothfem.verify import (
    _FACET_MARGIN,
    JumpReport,
    facet_sample_points,
    interpolation_probe,
)


class TestReferenceSimplex:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_unit_right_simplex(self, n):
        cell = reference_simplex(n)
        assert cell.dim == n
        np.testing.assert_array_equal(cell.coords[0], np.zeros(n))
        np.testing.assert_array_equal(cell.coords[1:], np.eye(n))


class TestCheckUnisolvency:
    def test_argyris_passes(self):
        result = check_unisolvency(ElementParams(n=2, m=1, k1=0))
        assert result.passed
        assert result.residual < 1e-10
        assert result.element is not None

    def test_respects_tolerance(self):
        result = check_unisolvency(ElementParams(n=2, m=1, k1=0), tol=0.0)
        assert not result.passed

    def test_skewed_cell(self):
        cell = Simplex(vertices=((0.1, -0.2), (1.3, 0.4), (0.2, 1.7)))
        result = check_unisolvency(ElementParams(n=2, m=1, k1=0), simplex=cell)
        assert result.passed


class TestInterpolationProbe:
    def test_reproduces_random_polynomial(self):
        element = build_element(
            ElementParams(n=2, m=1, k1=0), reference_simplex(2)
        )
        assert interpolation_probe(element, seed=3) < 1e-12


class TestCellPair:
    def test_standard_pair_shares_facet(self):
        pair = standard_cell_pair(3)
        assert pair.shared_gids == (0, 1, 2)
        assert pair.facet_in(pair.cell_a).vertices == (0, 1, 2)
        assert pair.facet_in(pair.cell_b).vertices == (0, 1, 2)
        assert pair.facet_coords().shape == (3, 3)

    def test_cells_lie_on_opposite_sides(self):
        pair = standard_cell_pair(2)
        assert pair.cell_a.coords[-1][-1] > 0 > pair.cell_b.coords[-1][-1]

    def test_rejects_disjoint_cells(self):
        a = Simplex(vertices=((0.0, 0.0), (1.0, 0.0), (0.0, 1.0)),
                    global_ids=(0, 1, 2))
        b = Simplex(vertices=((5.0, 5.0), (6.0, 5.0), (5.0, 6.0)),
                    global_ids=(3, 4, 5))
        with pytest.raises(ValueError):
            CellPair(a, b)

    def test_rejects_inconsistent_shared_coordinates(self):
        a = Simplex(vertices=((0.0, 0.0), (1.0, 0.0), (0.0, 1.0)),
                    global_ids=(0, 1, 2))
        b = Simplex(vertices=((0.0, 0.0), (1.0, 0.5), (0.0, -1.0)),
                    global_ids=(0, 1, 3))
        with pytest.raises(ValueError):
            CellPair(a, b)


class TestFacetSamplePoints:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_points_strictly_inside_facet(self, n):
        pair = standard_cell_pair(n)
        coords = pair.facet_coords()
        pts = facet_sample_points(coords, 15)
        assert pts.shape == (15, n)
        # recover barycentric weights on the facet via least squares
        A = np.vstack([np.ones(n), coords.T])
        for x in pts:
            w, *_ = np.linalg.lstsq(A, np.concatenate([[1.0], x]), rcond=None)
            assert (w > _FACET_MARGIN / 2).all()
            np.testing.assert_allclose(w @ coords, x, atol=1e-9)

    def test_deterministic(self):
        coords = standard_cell_pair(2).facet_coords()
        np.testing.assert_array_equal(
            facet_sample_points(coords, 6), facet_sample_points(coords, 6)
        )


class TestJumpReport:
    def test_relative_handles_zero_scale(self):
        rep = JumpReport(params=ElementParams(n=2, m=1, k1=0), seed=0,
                         jumps=[0.0, 1.0], scales=[0.0, 0.0])
        assert rep.relative(0) == 0.0
        assert np.isinf(rep.relative(1))


class TestContinuityJumpTest:
    def test_argyris_c1_across_facet(self):
        report = continuity_jump_test(ElementParams(n=2, m=1, k1=0), seed=0)
        assert report.shared_count == 13  # 2 vertex jets of 6 + 1 edge normal
        assert report.relative(0) < 1e-10
        assert report.relative(1) < 1e-10
        assert report.relative(2) > 1e-3

    def test_seed_changes_fields_not_continuity(self):
        a = continuity_jump_test(ElementParams(n=2, m=1, k1=0), seed=0)
        b = continuity_jump_test(ElementParams(n=2, m=1, k1=0), seed=5)
        assert a.jumps != b.jumps
        assert b.relative(1) < 1e-10


class TestOracleSweep:
    def test_small_grid_passes(self):
        report = oracle_sweep(n_max=3, m_max=2, k1_max=1)
        assert report.passed
        assert len(report.cases) == 8
        assert report.failures == []

    def test_case_fields(self):
        report = oracle_sweep(n_max=2, m_max=1, k1_max=0)
        (n, m, k1, ok, detail) = report.cases[0]
        assert (n, m, k1, ok) == (2, 1, 0, True)
        assert "21" in detail
