"""Noncrossing partitions, parking functions, hypertree complexes and
certified contractibility."""

from fractions import Fraction

from ._ncpark import (
    ContractViolation,
    MalformedInput,
    ResourceLimit,
    SimplicialComplex,
    certify,
    count,
    dissection_to_hypertree,
    hypertree_to_dissection,
    nc_link,
    ncht_complex,
    noncrossing_partitions,
    parking_functions,
    pf_link,
    reduced_homology,
    replay,
    run_cli,
    stanley_inverse,
    stanley_map,
    triangular_patch,
    unused_edge_subcomplex,
)
from ._ncpark import retract_point as _retract_point


def retract_point(sigma, tau, weights):
    """Push a barycentric point of sigma off the open star of tau.

    weights maps vertices to nonnegative rationals summing to 1.
    """
    raw = {v: f"{Fraction(w).numerator}/{Fraction(w).denominator}" for v, w in weights.items()}
    return {v: Fraction(w) for v, w in _retract_point(list(sigma), list(tau), raw).items()}


__all__ = [
    "ContractViolation",
    "MalformedInput",
    "ResourceLimit",
    "SimplicialComplex",
    "certify",
    "count",
    "dissection_to_hypertree",
    "hypertree_to_dissection",
    "nc_link",
    "ncht_complex",
    "noncrossing_partitions",
    "parking_functions",
    "pf_link",
    "reduced_homology",
    "replay",
    "retract_point",
    "run_cli",
    "stanley_inverse",
    "stanley_map",
    "triangular_patch",
    "unused_edge_subcomplex",
]
