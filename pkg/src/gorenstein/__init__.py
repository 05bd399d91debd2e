"""Exact invariants of Gorenstein lattice polytopes."""

from gorenstein.core.faces import FaceLattice, face_lattice
from gorenstein.core.iso import lattice_isomorphic
from gorenstein.core.polytope import (
    Hyperplane,
    Polytope,
    face_sublattice,
    facets,
    lattice_points,
    normalize_polytope,
)
from gorenstein.duality import DualPair, dual_face, dual_gorenstein, gorenstein_cone
from gorenstein.ehrhart import classify, hstar_profile
from gorenstein.joins import (
    cayley_face_duality,
    equality_faces,
    is_irreducible,
    join_kind,
    multiplicativity_check,
)
from gorenstein.nef import (
    NefPartition,
    SpecialSimplex,
    cayley_polytope,
    minkowski_sum,
    nef_from_simplex,
    nef_irreducible,
    nef_validate,
    special_simplices,
    split_over_Z,
)
from gorenstein.polys import BiPoly, UniPoly
from gorenstein.posets import EulerianPoset, gh_poly
from gorenstein.stringy import (
    conjecture_report,
    constant_coeff_faces,
    hstar_decomposition_check,
    s_tilde,
    stringy_e,
)

__version__ = "0.1.0"

__all__ = [
    "BiPoly", "DualPair", "EulerianPoset", "FaceLattice", "Hyperplane", "NefPartition",
    "Polytope", "SpecialSimplex", "UniPoly", "cayley_face_duality", "cayley_polytope",
    "classify", "conjecture_report", "constant_coeff_faces", "dual_face", "dual_gorenstein",
    "equality_faces", "face_lattice", "face_sublattice", "facets", "gh_poly",
    "gorenstein_cone", "hstar_decomposition_check", "hstar_profile", "is_irreducible",
    "join_kind", "lattice_isomorphic", "lattice_points", "minkowski_sum", "multiplicativity_check",
    "nef_from_simplex", "nef_irreducible", "nef_validate", "normalize_polytope", "s_tilde",
    "special_simplices", "split_over_Z", "stringy_e",
]
