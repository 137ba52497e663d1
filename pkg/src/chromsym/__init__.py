"""Exact computation with extended chromatic symmetric functions of weighted graphs."""

from chromsym.bases import (
    GraphFamily,
    family_matrix,
    independence_check,
    is_neat,
    load_family,
    reciprocity_check,
    weighted_path_to_p,
)
from chromsym.chromatic import (
    chromatic_polynomial,
    x_deletion_contraction,
    x_edge_subsets,
    x_mobius,
    xfn,
)
from chromsym.compositions import (
    compose,
    equivalence_class,
    equivalent,
    irreducible_factorization,
)
from chromsym.errors import (
    ChromsymError,
    DomainError,
    InvariantViolation,
    OracleInapplicable,
    PreconditionError,
    ResourceError,
)
from chromsym.graphs import WeightedGraph, compose_graph, is_isomorphic
from chromsym.symfunc import SymFunc, U_map, omega, p, ribbon_to_p

__version__ = "0.1.0"

__all__ = [
    "ChromsymError", "DomainError", "GraphFamily", "InvariantViolation", "OracleInapplicable",
    "PreconditionError", "ResourceError", "SymFunc", "U_map", "WeightedGraph",
    "chromatic_polynomial", "compose", "compose_graph", "equivalence_class", "equivalent",
    "family_matrix", "independence_check", "irreducible_factorization", "is_isomorphic",
    "is_neat", "load_family", "omega", "p", "reciprocity_check", "ribbon_to_p",
    "weighted_path_to_p", "x_deletion_contraction", "x_edge_subsets", "x_mobius", "xfn",
]
