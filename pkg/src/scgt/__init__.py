"""Cooperative games on simplicial complexes."""

from scgt.complex import SimplicialComplex, from_facets, path_complex, uniform_matroid
from scgt.games import (
    WorthFunction,
    basis_decompose,
    carrier,
    carrier_strict,
    indicator,
    is_dummy,
    is_monotone,
    make_worth,
    restrict,
)
from scgt.kernels import BACKEND
from scgt.values import (
    FacetDistribution,
    FacetLocalValue,
    GroupValue,
    QuasiValue,
    check_dummy_axiom,
    check_probabilistic_efficiency,
    check_substitution_carrier,
    coefficients_from_linear_value,
    eval_quasi,
    facet_decompose,
    group_value_from_distribution,
    reducible_group_value,
    shapley_simplex,
)

__version__ = "0.1.0"
