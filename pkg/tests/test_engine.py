import random
import time
from collections import defaultdict

import pytest

from f45.algebra import Ring
from f45.engine import COMPLETE, DEGREE_CAP, InputError, RunConfig, certify_verify, f45, sort_inputs
from f45.oracle import buchberger, interreduce, is_groebner, normal_form
from f45.signatures import LabelledEntry, Signature
from f45.systems import random_system
from helpers import R4, M, P, S, example_inputs

EXPECTED_BY_DEGREE = {
    5: {(S("x", 2), "y^3*z*t - x^3*t^2"), (S("z^2", 1), "x*y^3*t - z^4*t")},
    6: {(S("x^2", 2), "z^5*t - x^4*t^2")},
    7: {(S("x^3", 2), "x^5*t^2 - z^2*t^5"), (S("z^4", 1), "z^6*t - y^5*t^2"),
        (S("x^2*z", 2), "y^5*t^2 - x^4*z*t^2")},
    8: {(S("z^3*t", 2), "y^6*t^2 - x*y^2*z*t^4")},
}


def new_entries_by_degree(result):
    """Group created entries by the degree of their signature (= row degree)."""
    m = len(result.inputs)
    out = defaultdict(set)
    for entry in result.store.entries[m:]:
        i, t = entry.signature
        out[sum(t) + result.inputs[i].degree()].add((entry.signature, entry.poly))
    return dict(out)


def test_worked_example():
    t0 = time.perf_counter()
    res = f45(example_inputs(), R4)
    elapsed = time.perf_counter() - t0
    assert res.terminated_by == COMPLETE
    assert res.degrees == [5, 6, 7, 8]
    expected = {d: {(s, P(f)) for s, f in entries} for d, entries in EXPECTED_BY_DEGREE.items()}
    assert new_entries_by_degree(res) == expected
    assert len(res.basis) == 10
    assert elapsed < 1.0


def test_initial_generators_follow_sorted_order():
    F = sort_inputs(example_inputs(), R4)
    assert F == [P("x*z^2 - y^2*t"), P("x^2*y - z^2*t"), P("y*z^3 - x^2*t^2")]


def test_single_input():
    res = f45([P("3*x^2 + y*z")], R4)
    assert res.basis == [P("x^2 + 10668*y*z")]
    assert res.degrees == [] and res.stats.pairs_created == 0


def test_duplicate_generator_reduces_to_zero():
    ring = Ring.make(32003, ["x", "y"])
    x = P("x", ring)
    res = f45([x, x], ring)
    assert res.basis == [x]
    assert res.stats.zero_reductions == 1
    zero = [k for k, e in enumerate(res.store) if not e.poly]
    assert len(zero) == 1
    (k,) = zero
    assert res.store.sig(k) == Signature(1, (0, 0))
    assert (res.store.sig(k).monomial, k) in res.rules[1]
    assert k not in res.G


@pytest.mark.parametrize(
    "inputs,match",
    [
        ([], "empty"),
        ([P("x^2*y - z*t")], "not homogeneous"),
        ([P("x"), R4.zero()], "zero polynomial"),
        ([P("x", Ring.make(7, ["x"]))], "different ring"),
    ],
)
def test_rejected_inputs(inputs, match):
    with pytest.raises(InputError, match=match):
        f45(inputs, R4)


def test_degree_cap_below_input_degree_is_rejected():
    with pytest.raises(InputError):
        f45(example_inputs(), R4, RunConfig(max_degree=3))


def test_degree_cap_stops_early():
    res = f45(example_inputs(), R4, RunConfig(max_degree=6))
    assert res.terminated_by == DEGREE_CAP
    assert res.degrees == [5, 6]
    assert {pr.degree for pr in res.pending} == {7}


def test_certify_example():
    res = f45(example_inputs(), R4, RunConfig(certify=True))
    assert certify_verify(res.store, res.reps, res.inputs) == []
    (k,) = res.store.find(S("x", 2))
    assert res.reps[k] == [P("-y*z"), R4.zero(), P("x")]
    for i in range(3):
        h = res.reps[i]
        assert [bool(hj) for hj in h] == [j == i for j in range(3)]
    assert res.basis == f45(example_inputs(), R4).basis


def test_certify_detects_corruption():
    res = f45(example_inputs(), R4, RunConfig(certify=True))
    (k,) = res.store.find(S("x", 2))
    entry = res.store.entries[k]
    res.store.entries[k] = LabelledEntry(S("x^2", 2), entry.poly)
    violations = certify_verify(res.store, res.reps, res.inputs)
    assert len(violations) == 1 and violations[0].startswith(f"entry {k}:")


def test_certify_requires_representations():
    res = f45(example_inputs(), R4)
    with pytest.raises(ValueError):
        certify_verify(res.store, res.reps, res.inputs)


def test_stats_conservation_and_trace():
    res = f45(example_inputs(), R4, RunConfig(emit_trace=True))
    assert res.stats.conservation_holds()
    assert res.stats.pairs_kept == sum(1 for line in res.trace.lines if line.startswith("PAIR_CREATED"))
    assert [r.degree for r in res.stats.degrees] == res.degrees
    assert res.stats.signature_violations == 0


@pytest.mark.parametrize("seed", range(8))
def test_random_systems_against_oracle(seed):
    ring, gens = random_system(random.Random(1000 + seed))
    res = f45(gens, ring, RunConfig(certify=True))
    assert res.complete
    assert is_groebner(res.basis)
    assert all(not normal_form(f, res.basis) for f in gens)
    assert interreduce(res.basis) == interreduce(buchberger(gens))
    assert certify_verify(res.store, res.reps, res.inputs) == []
    assert res.stats.conservation_holds()
    # new elements of degree d only create pairs of degree >= d
    assert res.degrees == sorted(res.degrees)
    assert [r.degree for r in res.stats.degrees] == sorted(r.degree for r in res.stats.degrees)
    assert {r.degree for r in res.stats.degrees} <= set(res.degrees)
