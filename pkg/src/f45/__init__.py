"""Gröbner bases of homogeneous ideals over prime fields with the F4/5 algorithm."""

from .algebra import Poly, Ring
from .engine import InputError, RunConfig, RunResult, certify_verify, f45
from .field import PrimeModulus
from .frontend import ParseError, format_polynomial, parse_polynomial, parse_system, stats_to_json
from .oracle import buchberger, interreduce, is_groebner, normal_form

__all__ = [
    "InputError",
    "ParseError",
    "Poly",
    "PrimeModulus",
    "Ring",
    "RunConfig",
    "RunResult",
    "buchberger",
    "certify_verify",
    "f45",
    "format_polynomial",
    "interreduce",
    "is_groebner",
    "normal_form",
    "parse_polynomial",
    "parse_system",
    "stats_to_json",
]
