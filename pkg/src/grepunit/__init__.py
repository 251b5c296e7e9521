"""Exact invariants of generalized repunit numerical semigroups.

The semigroup S_a(b, n) is generated by a_i = r_b(n) + a*r_b(i-1) where
r_b(l) is the base-b repunit of length l.  Every invariant (Frobenius
number, genus, Apéry set, pseudo-Frobenius numbers, type, factorization
structure) has a closed formula here, plus an independent brute-force
engine to verify it against.
"""

from .apery import AperyElement, AperyTable
from .arith import GrepunitParams, generators, repunit, validate
from .closed_form import (
    InvariantReport,
    apery_maximals,
    apery_set,
    apery_set_recursive,
    apery_sum,
    apery_sum_coefficients,
    coefficient_tuples,
    frobenius,
    genus,
    invariant_report,
    is_homogeneous,
    lattice_matrix,
    maximal_minors,
    pseudo_frobenius,
)
from .errors import (
    CapacityError,
    GrepunitError,
    InvalidBaseError,
    InvalidLengthError,
    InvalidParametersError,
    InvalidShiftError,
    NotCoprimeError,
    NotNumericalSemigroupError,
    UnsupportedDimensionError,
)
from .verify import CHECK_NAMES, Caps, SweepSpec, VerifyOutcome, run_check, run_checks, sweep

__version__ = "0.1.0"

__all__ = [
    "AperyElement",
    "AperyTable",
    "CHECK_NAMES",
    "CapacityError",
    "Caps",
    "GrepunitError",
    "GrepunitParams",
    "InvalidBaseError",
    "InvalidLengthError",
    "InvalidParametersError",
    "InvalidShiftError",
    "InvariantReport",
    "NotCoprimeError",
    "NotNumericalSemigroupError",
    "SweepSpec",
    "UnsupportedDimensionError",
    "VerifyOutcome",
    "apery_maximals",
    "apery_set",
    "apery_set_recursive",
    "apery_sum",
    "apery_sum_coefficients",
    "coefficient_tuples",
    "frobenius",
    "generators",
    "genus",
    "invariant_report",
    "is_homogeneous",
    "lattice_matrix",
    "maximal_minors",
    "pseudo_frobenius",
    "repunit",
    "run_check",
    "run_checks",
    "sweep",
    "validate",
]
