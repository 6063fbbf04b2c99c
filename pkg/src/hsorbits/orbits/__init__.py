"""Orbit parameters, raising operators and closure orders."""

from .enumeration import (
    AdmissiblePair,
    enumerate_fiber,
    enumerate_fiber_inductive,
    enumerate_hermitian,
    enumerate_nilradical,
    nilradical_dim,
    orbit_weight_lattice,
    pair_invariants,
)
from .operators import E_alpha, OperatorTable, m_alpha, operator_table
from .orders import fiber_leq, pan_leq, rr_leq, rr_matrix, standard_matrix, transitive_closure
from .poset import (
    OrbitPoset,
    check_partial_order,
    fiber_poset,
    hasse,
    hermitian_poset,
    nilradical_poset,
    projection_labels,
)


def standard_order(ctx):
    """Hermitian poset generated by the m_alpha relations."""
    return hermitian_poset(ctx, method="standard")


__all__ = [
    "AdmissiblePair",
    "E_alpha",
    "OperatorTable",
    "OrbitPoset",
    "check_partial_order",
    "enumerate_fiber",
    "enumerate_fiber_inductive",
    "enumerate_hermitian",
    "enumerate_nilradical",
    "fiber_leq",
    "fiber_poset",
    "hasse",
    "hermitian_poset",
    "m_alpha",
    "nilradical_dim",
    "nilradical_poset",
    "operator_table",
    "orbit_weight_lattice",
    "pair_invariants",
    "pan_leq",
    "projection_labels",
    "rr_leq",
    "rr_matrix",
    "standard_matrix",
    "standard_order",
    "transitive_closure",
]
