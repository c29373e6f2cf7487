"""Exact A-partition polynomials f_{A,n}(x) and checks of their supermultiplicativity."""

from .multiset import (
    IntegerMultiset,
    explicit,
    kregular,
    mcolor,
    multiplicity,
    naturals,
    parse_multiset_spec,
    plane,
    sigma_A,
    truncate,
)
from .partition_poly import (
    PolySequence,
    build_sequence,
    closed_form_singleton,
    delta,
    derivative_sequence,
    evaluate_colored,
    stirling_coefficients,
)
from .polyring import RatPolynomial

__version__ = "0.1.0"
