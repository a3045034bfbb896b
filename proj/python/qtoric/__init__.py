"""Quasitoric manifolds over simple polytopes.

Thin wrapper over the compiled ``_qtoric`` extension. Integer matrices are
lists of lists of ints; rings and polytopes are handle objects.
"""

from ._qtoric import (
    Polytope,
    QtoricError,
    Ring,
    betti_table,
    bundle_char_matrix,
    check_nonsingular,
    chern_isomorphic,
    fiber_automorphisms,
    identify_product,
    normalize_twists,
    polygon_betti,
    present_cohomology,
    projectivization_ring,
    search_iso,
    simplex_betti,
    total_chern,
    verify_iso,
)

__all__ = [
    "Polytope",
    "QtoricError",
    "Ring",
    "betti_table",
    "bundle_char_matrix",
    "check_nonsingular",
    "chern_isomorphic",
    "fiber_automorphisms",
    "identify_product",
    "normalize_twists",
    "polygon_betti",
    "present_cohomology",
    "projectivization_ring",
    "search_iso",
    "simplex_betti",
    "total_chern",
    "verify_iso",
]
__version__ = "0.1.0"
