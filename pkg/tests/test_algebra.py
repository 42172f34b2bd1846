import pytest
from hypothesis import given
from hypothesis import strategies as st

from f45.algebra import Poly, Ring, mono_div, mono_divides, mono_lcm, mono_mul
from helpers import R4, M, P, homogeneous_polys, monomials, polys


def test_ring_validation():
    with pytest.raises(ValueError):
        Ring.make(32003, ["x", "x"])
    with pytest.raises(ValueError):
        Ring.make(32003, [])
    with pytest.raises(ValueError):
        Ring.make(32003, ["x"], order="lex")


@pytest.mark.parametrize(
    "a,b,expected",
    [("x^2*y", "x*z^2", 1), ("x^2*y*z^3", "x^2*y*z^2", 1), ("y*z", "x*y", -1), ("x*y*z", "x*y*z", 0)],
)
def test_degrevlex_compare(a, b, expected):
    assert R4.compare(M(a), M(b)) == expected


def test_compare_rejects_mismatched_length():
    with pytest.raises(ValueError):
        R4.compare((1, 0), (0, 1))


def test_divides_and_quotient():
    assert mono_divides(M("x*z^2"), M("x*y*z^3"))
    assert mono_div(M("x*y*z^3"), M("x*z^2")) == M("y*z")
    assert not mono_divides(M("x^2*y"), M("x*z^2"))
    t = M("x*y^2*t")
    assert mono_div(t, t) == R4.one_monomial()
    with pytest.raises(ValueError):
        mono_div(M("x*z^2"), M("x^2*y"))


@pytest.mark.parametrize(
    "a,b,expected",
    [("x^2*y", "x*z^2", "x^2*y*z^2"), ("y*z^3", "x^2*y", "x^2*y*z^3"), ("x*t", "x*t", "x*t")],
)
def test_lcm(a, b, expected):
    assert mono_lcm(M(a), M(b)) == M(expected)


def test_leading():
    f = P("x^2*y - z^2*t")
    assert f.leading() == (1, M("x^2*y"))
    assert P("x*y^3*t - z^4*t").lm == M("x*y^3*t")
    with pytest.raises(ValueError):
        R4.zero().leading()


def test_add_scaled_examples():
    g = P("y*z^3 - x^2*t^2")
    assert R4.zero().add_scaled(1, M("z^3*t"), g) == P("y*z^6*t - x^2*z^3*t^3")
    f = P("x^2*y*z^3 - x^4*t^2")
    assert f.add_scaled(-1, R4.one_monomial(), P("x^2*y*z^3 - z^5*t")) == P("z^5*t - x^4*t^2")
    assert not f.add_scaled(-1, R4.one_monomial(), f)


def test_monic():
    assert P("2*x + 4*y").monic() == P("x + 2*y")
    f = P("x - 3*y")
    assert f.monic() is f
    assert P("5").monic() == P("1")
    with pytest.raises(ValueError):
        R4.zero().monic()


def test_is_homogeneous():
    assert P("x^2*y - z^2*t").is_homogeneous()
    assert not P("x^2*y - z*t").is_homogeneous()
    assert R4.zero().is_homogeneous()


def dict_merge(f, c, t, g):
    acc = dict(f.terms)
    for m, a in g.terms:
        mt = tuple(x + y for x, y in zip(m, t))
        acc[mt] = (acc.get(mt, 0) + c * a) % R4.p
    return {m: a for m, a in acc.items() if a}


def is_canonical(f):
    keys = [R4.key(m) for m, _ in f.terms]
    return all(a > b for a, b in zip(keys, keys[1:])) and all(0 < c < R4.p for _, c in f.terms)


@given(polys(), st.integers(0, R4.p - 1), monomials(max_exp=2), polys())
def test_add_scaled_matches_dict_merge(f, c, t, g):
    h = f.add_scaled(c, t, g)
    assert h.to_dict() == dict_merge(f, c, t, g)
    assert is_canonical(h)


@given(monomials(), monomials(), monomials())
def test_order_is_total_and_multiplicative(a, b, c):
    ka, kb = R4.key(a), R4.key(b)
    assert (ka < kb) + (ka == kb) + (ka > kb) == 1
    assert (ka == kb) == (a == b)
    assert R4.key(R4.one_monomial()) <= ka
    if ka < kb:
        assert R4.key(mono_mul(a, c)) < R4.key(mono_mul(b, c))


@given(monomials(), monomials())
def test_divisibility_and_lcm(a, b):
    if mono_divides(a, b):
        assert mono_mul(a, mono_div(b, a)) == b
    else:
        with pytest.raises(ValueError):
            mono_div(b, a)
    m = mono_lcm(a, b)
    assert mono_divides(a, m) and mono_divides(b, m)
    assert m == tuple(max(x, y) for x, y in zip(a, b))


@given(homogeneous_polys(degree=2), homogeneous_polys(degree=3), polys())
def test_homogeneous_products(f, g, h):
    assert (f * g).is_homogeneous()
    if h and f:
        assert (f * h).is_homogeneous() == h.is_homogeneous()


@given(polys(), polys(), polys())
def test_ring_arithmetic(f, g, h):
    assert (f + g) - g == f
    assert f * (g + h) == f * g + f * h
    assert -(-f) == f
