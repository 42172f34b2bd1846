import pytest
from hypothesis import given
from hypothesis import strategies as st

from f45.signatures import (
    RuleTable,
    Signature,
    Store,
    rewritable,
    sig_compare,
    sig_key,
    sig_mul,
    top_reducible,
)
from helpers import R4, M, P, S, monomials


def store_with(sigs):
    """A store whose entry k carries ``sigs[k]`` and a placeholder polynomial."""
    store = Store(R4)
    for s in sigs:
        store.append(s, P("x"))
    return store


# entries numbered as in the worked example's narrative
NARRATIVE = [S("1", 0), S("1", 1), S("1", 2), S("x", 2), S("z^2", 1), S("x^2", 2), S("x^3", 2), S("z^4", 1),
             S("x^2*z", 2)]


def rules_for(store, ks):
    rules = RuleTable(R4, 3)
    for k in ks:
        rules.add_rule(store.sig(k), k, store)
    return rules


def test_sig_compare():
    assert sig_compare(S("x", 2), S("z^4", 1), R4) == 1
    assert sig_compare(S("x*z^2", 1), S("y^2*t", 1), R4) == 1
    assert sig_compare(S("1", 0), S("1", 0), R4) == 0
    assert sig_compare(S("z^4", 1), S("x", 2), R4) == -1


def test_sig_mul():
    assert sig_mul(M("x"), S("x", 2)) == S("x^2", 2)
    assert sig_mul(M("z^2"), S("z^2", 1)) == S("z^4", 1)
    s = S("y*t", 1)
    assert sig_mul(R4.one_monomial(), s) == s


def test_add_rule_keeps_ascending_order():
    store = store_with(NARRATIVE)
    rules = rules_for(store, [2, 3])
    assert rules[2] == [(M("1"), 2), (M("x"), 3)]
    for k in (5, 6, 8):
        rules.add_rule(store.sig(k), k, store)
    assert rules[2] == [(M("1"), 2), (M("x"), 3), (M("x^2"), 5), (M("x^2*z"), 8), (M("x^3"), 6)]
    assert rules.is_sorted()


def test_add_rule_into_empty_list():
    store = store_with(NARRATIVE)
    rules = RuleTable(R4, 3)
    rules.add_rule(store.sig(4), 4, store)
    assert rules[1] == [(M("z^2"), 4)]


def test_add_rule_rejects_mismatched_signature():
    store = store_with(NARRATIVE)
    with pytest.raises(ValueError):
        RuleTable(R4, 3).add_rule(S("y", 2), 3, store)


def test_equal_monomials_later_insert_goes_after():
    store = store_with([S("1", 0), S("1", 0)])
    rules = rules_for(store, [0, 1])
    assert [k for _, k in rules[0]] == [0, 1]
    assert rewritable(R4.one_monomial(), 0, store, rules)
    assert not rewritable(R4.one_monomial(), 1, store, rules)


def test_rewritable_examples():
    store = store_with(NARRATIVE)
    assert rewritable(M("x^2"), 2, store, rules_for(store, [2, 3]))
    assert not rewritable(M("x"), 5, store, rules_for(store, [2, 3, 5]))
    assert not rewritable(M("z^3*t"), 2, store, rules_for(store, [2, 3, 5, 8, 6]))


def test_rewritable_without_matching_rule():
    store = store_with(NARRATIVE)
    rules = RuleTable(R4, 3)
    assert not rewritable(M("x"), 3, store, rules)


def test_top_reducible():
    store = Store(R4)
    for f in ("x*z^2 - y^2*t", "x^2*y - z^2*t"):
        store.append(S("1", 0), P(f))
    assert top_reducible(M("x^2*y"), [0, 1], store)
    assert not top_reducible(M("x^2"), [0, 1], store)
    assert not top_reducible(M("x^2*y"), [], store)


signatures = st.builds(Signature, st.integers(0, 3), monomials(max_exp=3))


@given(signatures, signatures, monomials(max_exp=3), monomials(max_exp=3))
def test_signature_order_properties(a, b, u, v):
    assert sig_compare(a, b, R4) == -sig_compare(b, a, R4)
    assert (sig_compare(a, b, R4) == 0) == (a == b)
    if sig_compare(a, b, R4) < 0:
        assert sig_compare(sig_mul(u, a), sig_mul(u, b), R4) < 0
    assert sig_mul(u, sig_mul(v, a)) == sig_mul(tuple(x + y for x, y in zip(u, v)), a)


@given(st.lists(st.tuples(st.integers(0, 2), monomials(max_exp=2)), min_size=1, max_size=25), monomials(max_exp=2))
def test_rule_tables_stay_sorted_and_consistent(sigs, u):
    store = store_with([Signature(i, t) for i, t in sigs])
    rules = RuleTable(R4, 3)
    for k in range(len(store)):
        rules.add_rule(store.sig(k), k, store)
        assert rules.is_sorted()
    for i in range(3):
        for t, k in rules[i]:
            assert store.sig(k) == Signature(i, t)
    for k in range(len(store)):
        first = rewritable(u, k, store, rules)
        assert rewritable(u, k, store, rules) == first
    # the largest-monomial rule dividing its own signature is never rewritten
    for i in range(3):
        if rules[i]:
            t, k = rules[i][-1]
            assert not rewritable(R4.one_monomial(), k, store, rules)
