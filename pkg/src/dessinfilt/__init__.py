"""Dessins d'enfants, optional-edge expansions and product filtrations, computed exactly."""
from .dessin import (
    BoundError,
    Dessin,
    DessinError,
    Passport,
    canonical_form,
    components,
    delete_edges,
    genus,
    isomorphic,
    monodromy_order,
    passport,
    validate,
)
from .enumeration import BasisWindow, enumerate_exact, enumerate_window, oracle_enumerate
from .filtration import (
    ComparisonReport,
    belyi_level_span_inner,
    compare_levels,
    dessin_level_span,
    expansion,
    product,
    product_vector,
    quotient_dimension,
)
from .linalg import SparseVector, Subspace, subspace_leq, vector_combine

__version__ = "0.1.0"
