"""Nodal DOF sets of C^m smooth polynomial elements on simplicial cells."""

from .assignment import DofGroup, DofTable, ElementParams, assign_dofs, group_summary
from .combinatorics import (
    MultiIndex,
    SubSimplex,
    dim_pk,
    enumerate_multiindices,
    enumerate_subsimplices,
)
from .counts import CountReport, closed_form_count, verify_dimension_identity
from .functionals import NodalFunctional, off_face_bijection, realize_functionals
from .geometry import NormalFrame, Simplex, barycentric_coords, normal_frame
from .polynomials import (
    BernsteinBasis,
    ElementDefinition,
    bernstein_derivative,
    bernstein_eval,
    build_element,
    build_vandermonde,
    dual_basis,
)
from .verify import (
    CellPair,
    JumpReport,
    check_unisolvency,
    continuity_jump_test,
    interpolation_probe,
    oracle_sweep,
    reference_simplex,
    standard_cell_pair,
)

__all__ = [
    "BernsteinBasis",
    "CellPair",
    "CountReport",
    "DofGroup",
    "DofTable",
    "ElementDefinition",
    "ElementParams",
    "JumpReport",
    "MultiIndex",
    "NodalFunctional",
    "NormalFrame",
    "Simplex",
    "SubSimplex",
    "assign_dofs",
    "barycentric_coords",
    "bernstein_derivative",
    "bernstein_eval",
    "build_element",
    "build_vandermonde",
    "check_unisolvency",
    "closed_form_count",
    "continuity_jump_test",
    "dim_pk",
    "dual_basis",
    "enumerate_multiindices",
    "enumerate_subsimplices",
    "group_summary",
    "interpolation_probe",
    "normal_frame",
    "off_face_bijection",
    "oracle_sweep",
    "realize_functionals",
    "reference_simplex",
    "standard_cell_pair",
    "verify_dimension_identity",
]

__version__ = "0.1.0"
