"""Exact completions of level-m Verlinde algebras at the augmentation ideal.

Weights are tuples of integers in the fundamental-weight basis; exact rationals are
returned as :class:`fractions.Fraction`.
"""

from fractions import Fraction

from ._core import (
    InvariantViolation,
    RootSystem,
    build_root_system,
    candidate_primes,
    classify,
    completion_profile,
    count,
    count_regular_weights,
    decompose_level,
    denominator_profile,
    enumerate_regular_weights,
    run_cli,
    theta_level,
    validate,
    verify,
)
from . import _core

__version__ = "0.1.0"


def inner_product(rs, a, b):
    """<a, b> as an exact Fraction."""
    num, den = _core._inner_product(rs, list(a), list(b))
    return Fraction(num, den)


def phi_phase(rs, a, level, w):
    """<w, a> / level reduced into [0, 1)."""
    num, den = _core._phi_phase(rs, list(a), level, list(w))
    return Fraction(num, den)


def gram(rs):
    return [[Fraction(n, d) for n, d in row] for row in rs.gram]


__all__ = [
    "InvariantViolation",
    "RootSystem",
    "build_root_system",
    "candidate_primes",
    "classify",
    "completion_profile",
    "count",
    "count_regular_weights",
    "decompose_level",
    "denominator_profile",
    "enumerate_regular_weights",
    "gram",
    "inner_product",
    "phi_phase",
    "run_cli",
    "theta_level",
    "validate",
    "verify",
]
