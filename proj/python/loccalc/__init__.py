"""Exact fixed-point (localization) computations on flag manifolds and Grassmannians.

Constant results come back as ``fractions.Fraction``; equivariant results that
are not constant come back as the rendered polynomial string.
"""

from fractions import Fraction

from ._loccalc import (
    InvariantViolation,
    LoccalcError,
    ParseError,
    PreconditionError,
    chern_number_oracle as _chern_number_oracle,
    euler_characteristic,
    expand,
    flag_integral as _flag_integral,
    grassmann as _grassmann,
    gysin_flag,
    parse,
    run_cli,
)

__all__ = [
    "InvariantViolation",
    "LoccalcError",
    "ParseError",
    "PreconditionError",
    "chern_number_oracle",
    "euler_characteristic",
    "expand",
    "flag_integral",
    "grassmann",
    "gysin_flag",
    "parse",
    "run_cli",
]


def _value(pair):
    is_constant, text = pair
    return Fraction(text) if is_constant else text


def grassmann(n, k, exponents, threads=1, evaluation=False):
    """Fixed-point sum for prod c_r(S)^{m_r} over G(k, C^n)."""
    return _value(_grassmann(n, k, list(exponents), threads, evaluation))


def flag_integral(type, rank, poly, threads=1, negated_roots=False):
    """Integral of poly(y_1..y_n) over G/T for a classical root system."""
    return _value(_flag_integral(type, rank, poly, threads, negated_roots))


def chern_number_oracle(exponents, n, k):
    """Schubert-calculus value of prod c_r(S)^{m_r} on G(k, C^n)."""
    return Fraction(_chern_number_oracle(list(exponents), n, k))
