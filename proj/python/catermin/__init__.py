"""Caterpillar matching polynomials, Hosoya index and graph energy.

Thin wrapper over the C++ core. All integer results are exact Python
ints; exact evaluations return fractions.Fraction.
"""

from catermin._core import (
    brute_min,
    build_S,
    canonical_spine,
    caterpillar_diameter,
    count_caterpillars,
    energy,
    enumerate_caterpillars,
    eval_matching_poly,
    hosoya,
    majorization_chain,
    matching_poly,
    matching_poly_tree,
    verify_corollary_diameter,
    verify_corollary_maxdeg,
    verify_majorization_theorem,
    verify_min_theorem,
    CaterminError,
)

__all__ = [
    "brute_min",
    "build_S",
    "canonical_spine",
    "caterpillar_diameter",
    "count_caterpillars",
    "energy",
    "enumerate_caterpillars",
    "eval_matching_poly",
    "hosoya",
    "majorization_chain",
    "matching_poly",
    "matching_poly_tree",
    "verify_corollary_diameter",
    "verify_corollary_maxdeg",
    "verify_majorization_theorem",
    "verify_min_theorem",
    "CaterminError",
]

__version__ = "0.1.0"
