"""Exact-arithmetic toolkit for tropical prevarieties.

Builds the polyhedral cell complex of a min-plus polynomial system two
independent ways (tie-pattern arrangement faces and dual Newton
subdivision), computes exact Betti numbers, verifies volume/degree/sparse
face bounds, and realizes rational polyhedral complexes as prevarieties.
"""

from .arrangement import Arrangement, ArrFace, Hyperplane, build_arrangement, enumerate_faces
from .bounds import BoundReport, degree_bound, dense_volume_bound, sparse_bound, verify_bounds
from .corpus import complex_corpus, random_complex, random_system, system_corpus
from .exactgeom import (
    DimensionMismatch,
    EmptyPolyhedronError,
    HPolyhedron,
    RadVal,
    UnboundedPolytopeError,
    VPolytope,
    minkowski_sum,
    volume_r,
)
from .prevariety import (
    DualFace,
    PrevarietyCell,
    PrevarietyComplex,
    TiePattern,
    cell_closure,
    cells_via_arrangement,
    connected_components,
    dual_cell,
    dual_subdivision,
    face_count,
    tie_pattern,
    tropical_faces,
)
from .realize import (
    ComplexDescription,
    complex_prevariety,
    gen_grid_example,
    halfspace_prevariety,
    polyhedron_prevariety,
    union_prevarieties,
)
from .topology import (
    BettiVector,
    CellComplex,
    SimplicialComplex,
    betti,
    betti_of_complex,
    betti_of_prevariety,
    bounded_subcomplex,
    reduce_lineality,
    triangulate,
)
from .tropical import (
    LaurentError,
    LinForm,
    TropPoly,
    TropSystem,
    degree,
    drop_dominated,
    eval_poly,
    extended_newton_polytope,
    is_system_zero,
    is_zero,
    newton_polytope,
    trop_mul,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
