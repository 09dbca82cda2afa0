"""Distance invariants, extremal constructions and exhaustive tables for
plane triangulations and quadrangulations.

The main entry points are re-exported here::

    >>> from planeprox import icosahedron, invariants
    >>> invariants(icosahedron()).min_status
    18
"""

from .bounds import (
    BoundResult,
    LayerConstraintProfile,
    PROFILES,
    brute_force_F,
    check_bound,
    maximize_F,
    theorem_bound,
)
from .constructions import (
    ConstructionSpec,
    UnsupportedOrder,
    build,
    construct,
    formula_proximity,
    verify_construction,
)
from .enumeration import (
    ExtremalRow,
    canonical_code,
    enumerate_class,
    extremal_table,
    from_code,
)
from .lemmas import LemmaViolation, check_active_face_lemma, check_layer_lemma
from .metrics import InvariantReport, LayerSequence, active_vertices, bfs_layers, invariants
from .planar_code import PlanarCodeError, read_planar_code, write_planar_code
from .planegraph import (
    ALL_CLASSES,
    QUAD,
    QUAD3,
    TRI,
    TRI4,
    TRI5,
    DomainError,
    GraphClass,
    Kind,
    PlaneGraph,
    StructuralError,
    classify,
    cube,
    cycle4,
    faces,
    icosahedron,
    is_quadrangulation,
    is_triangulation,
    k4,
    octahedron,
    vertex_connectivity,
)

__version__ = "0.1.0"
