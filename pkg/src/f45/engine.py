"""The F4/5 main loop: degree-by-degree reduction under the F5 criteria."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Sequence

from .algebra import Poly, Ring
from .field import ff_inv
from .matrixred import MatrixHook, RowSpec, reduction_f5
from .pairing import CriticalPair, PairQueue, s_polynomials_f5, update_f5
from .signatures import LabelledEntry, RuleTable, Signature, Store
from .stats import Stats, Trace

log = logging.getLogger(__name__)

COMPLETE = "complete"
DEGREE_CAP = "degree_cap"


class InputError(ValueError):
    """Rejected input system."""


@dataclass
class RunConfig:
    max_degree: int | None = None
    certify: bool = False
    emit_trace: bool = False
    matrix_hook: MatrixHook | None = field(default=None, repr=False)


@dataclass
class RunResult:
    basis: list[Poly]
    stats: Stats
    store: Store
    rules: RuleTable
    G: list[int]
    inputs: list[Poly]
    terminated_by: str
    degrees: list[int]
    reps: list[list[Poly]] | None = None
    trace: Trace | None = None
    pending: list[CriticalPair] = field(default_factory=list)

    @property
    def complete(self) -> bool:
        return self.terminated_by == COMPLETE


def sort_inputs(inputs: Sequence[Poly], ring: Ring) -> list[Poly]:
    """By total degree, ties by ascending leading monomial (stable)."""
    return sorted(inputs, key=lambda f: (f.degree(), ring.key(f.lm)))


def _validate(inputs: Sequence[Poly], ring: Ring, cfg: RunConfig) -> None:
    if not inputs:
        raise InputError("empty input system")
    for n, f in enumerate(inputs):
        if f.ring != ring:
            raise InputError(f"input {n} lives in a different ring")
        if not f:
            raise InputError(f"input {n} is the zero polynomial")
        if not f.is_homogeneous():
            raise InputError(f"input {n} is not homogeneous: {f!r}")
    if cfg.max_degree is not None and cfg.max_degree < max(f.degree() for f in inputs):
        raise InputError(f"max_degree {cfg.max_degree} is below the largest input degree")


def f45(inputs: Sequence[Poly], ring: Ring, cfg: RunConfig | None = None) -> RunResult:
    """Gröbner basis of homogeneous ``inputs`` (unreduced, in creation order)."""
    cfg = cfg or RunConfig()
    _validate(inputs, ring, cfg)
    F = sort_inputs(inputs, ring)
    m = len(F)
    store = Store(ring)
    rules = RuleTable(ring, m)
    stats = Stats()
    trace = Trace() if cfg.emit_trace else None
    reps: list[list[Poly]] | None = [] if cfg.certify else None
    G: list[int] = []
    P = PairQueue()

    def add_to_basis(i: int) -> None:
        for j in G:
            pair = update_f5(i, j, G, store, rules, stats, trace)
            if pair is not None:
                P.push(pair)
        G.append(i)

    one = ring.one_monomial()
    for i, f in enumerate(F):
        k = store.append(Signature(i, one), f.monic())
        rules.add_rule(store.sig(k), k, store)
        if reps is not None:
            h = [ring.zero()] * m
            h[i] = ring.term(ff_inv(f.lc, ring.modulus), one)
            reps.append(h)
        add_to_basis(k)

    terminated_by = COMPLETE
    degrees: list[int] = []
    while P:
        d = P.min_degree()
        if cfg.max_degree is not None and d > cfg.max_degree:
            terminated_by = DEGREE_CAP
            log.info("stopping at degree %d (cap %d), %d pairs pending", d, cfg.max_degree, len(P))
            break
        d, P_d = P.pop_min()
        degrees.append(d)
        S = s_polynomials_f5(P_d, store, rules, stats, trace)
        if not S:
            continue
        rows = [RowSpec.of(u, k, store) for u, k in S]
        new = reduction_f5(rows, G, store, rules, stats, trace, reps, cfg.matrix_hook, degree=d)
        for k in new:
            add_to_basis(k)

    basis: list[Poly] = []
    for g in G:
        f = store.poly(g)
        if f not in basis:
            basis.append(f)
    return RunResult(basis, stats, store, rules, G, F, terminated_by, degrees, reps, trace, P.pairs())


def certify_verify(store: Store, reps: Sequence[Sequence[Poly]] | None, inputs: Sequence[Poly]) -> list[str]:
    """Check every entry is admissible as labelled by its recorded representation.

    ``inputs`` are the generators in engine order (see :func:`sort_inputs`).
    Returns one message per violating entry.
    """
    if reps is None or len(reps) != len(store):
        raise ValueError("module representation missing for some store entries")
    ring = store.ring
    violations = []
    for k, (entry, h) in enumerate(zip(store, reps)):
        problems = _admissibility_problems(entry, h, inputs, ring)
        if problems:
            violations.append(f"entry {k}: " + "; ".join(problems))
    return violations


def _admissibility_problems(entry: LabelledEntry, h: Sequence[Poly], inputs: Sequence[Poly], ring: Ring) -> list[str]:
    i, t = entry.signature
    problems = []
    if len(h) != len(inputs):
        return [f"representation has {len(h)} components, expected {len(inputs)}"]
    total = ring.zero()
    for hj, fj in zip(h, inputs):
        if hj:
            total = total + hj * fj
    if total != entry.poly:
        problems.append("polynomial differs from sum h_j f_j")
    if any(h[j] for j in range(i + 1, len(h))):
        problems.append(f"nonzero component above index {i}")
    if not h[i] or h[i].lm != t:
        problems.append(f"leading monomial of h_{i} does not match the signature")
    return problems
