"""flagtop: flag simplicial complexes at desk scale.

Constructions of the named join families, class validators with failure
witnesses, exact edge-count bounds with tightness reports, and isomorph-free
exhaustive enumeration on 8..11 vertices.
"""

from .core import (
    ComplexError,
    Graph,
    SimplicialComplex,
    Subcomplex,
    clique_complex,
    disjoint_union,
    join,
    sphere0,
    suspension,
)
from .constructions import (
    GJSpec,
    balanced_join,
    cross_polytope_boundary,
    cycle,
    gj,
    gj_enumerate_specs,
    remark_complex,
    suspended_join,
)
from .validators import ClassificationReport, Verdict, classify, minimal_nonfaces
from .bounds import BoundReport, PreconditionError, eulerian3_fvector, f1_J, f1_Jstar
from .enumeration import (
    CanonicalGraph,
    EnumerationResult,
    are_isomorphic,
    canonical_form,
    enumerate_class,
    maximizers,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport", "CanonicalGraph", "ClassificationReport", "ComplexError",
    "EnumerationResult", "GJSpec", "Graph", "PreconditionError",
    "SimplicialComplex", "Subcomplex", "Verdict", "are_isomorphic",
    "balanced_join", "canonical_form", "classify", "clique_complex",
    "cross_polytope_boundary", "cycle", "disjoint_union", "enumerate_class",
    "eulerian3_fvector", "f1_J", "f1_Jstar", "gj", "gj_enumerate_specs",
    "join", "maximizers", "minimal_nonfaces", "remark_complex", "sphere0",
    "suspended_join", "suspension",
]
