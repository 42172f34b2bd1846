"""Shared test helpers: the worked-example ring, parsing shortcuts, strategies."""

from __future__ import annotations

from pathlib import Path

from hypothesis import strategies as st

from f45.algebra import Poly, Ring
from f45.engine import RunConfig, f45
from f45.frontend import parse_polynomial, parse_system
from f45.signatures import Signature
from f45.systems import EXAMPLE_TEXT

DATA = Path(__file__).parent / "data"

R4 = Ring.make(32003, ["x", "y", "z", "t"])


def P(text: str, ring: Ring = R4) -> Poly:
    return parse_polynomial(text, ring)


def M(text: str, ring: Ring = R4):
    """Monomial from text such as ``x^2*y`` (or ``1``)."""
    return P(text, ring).lm


def S(mono: str, index: int, ring: Ring = R4) -> Signature:
    return Signature(index, M(mono, ring))


def example_inputs() -> list[Poly]:
    return parse_system(EXAMPLE_TEXT).polys


def example_state(before_degree: int, **kw):
    """Engine state just before the pair slice of ``before_degree`` is processed."""
    return f45(example_inputs(), R4, RunConfig(max_degree=before_degree - 1, **kw))


def monomials(nvars: int = 4, max_exp: int = 4):
    return st.tuples(*[st.integers(0, max_exp)] * nvars)


def polys(ring: Ring = R4, max_terms: int = 6, max_exp: int = 3):
    return st.dictionaries(
        monomials(ring.nvars, max_exp), st.integers(0, ring.p - 1), max_size=max_terms
    ).map(lambda d: Poly.from_dict(ring, d))


def homogeneous_polys(ring: Ring = R4, degree: int = 3, max_terms: int = 5):
    from f45.systems import monomials_of_degree

    monos = monomials_of_degree(ring.nvars, degree)
    return st.dictionaries(st.sampled_from(monos), st.integers(1, ring.p - 1), min_size=1, max_size=max_terms).map(
        lambda d: Poly.from_dict(ring, d)
    )
