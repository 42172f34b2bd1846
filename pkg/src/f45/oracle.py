"""Reference Buchberger implementation used to check the engine.

Shares only the field and polynomial layers with the engine: pair
handling, reduction and linear algebra here are written independently.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

import numpy as np

from .algebra import Monomial, Poly, Ring, TermHeap, mono_div, mono_divides, mono_lcm, mono_mul
from .field import ff_inv


def normal_form(f: Poly, B: Sequence[Poly]) -> Poly:
    """Full remainder of ``f`` on division by ``B`` (first divisor in list order)."""
    return divide(f, B)[1]


def divide(f: Poly, B: Sequence[Poly]) -> tuple[list[Poly], Poly]:
    """Multivariate division: ``f = sum(q_i * B_i) + r`` with ``r`` fully reduced."""
    ring = f.ring
    p = ring.p
    divisors = [(b.lm, ff_inv(b.lc, ring.modulus), Poly(ring, b.terms[1:])) for b in B if b]
    quotients: dict[int, dict[Monomial, int]] = {}
    work = TermHeap(ring, f)
    remainder: dict[Monomial, int] = {}
    while (top := work.pop_leading()) is not None:
        m, c = top
        for n, (lm, inv, tail) in enumerate(divisors):
            if mono_divides(lm, m):
                q = c * inv % p
                u = mono_div(m, lm)
                work.add_scaled(-q, u, tail)
                qd = quotients.setdefault(n, {})
                qd[u] = (qd.get(u, 0) + q) % p
                break
        else:
            remainder[m] = c
    qs = [ring.zero() for _ in B]
    idx = [n for n, b in enumerate(B) if b]
    for n, qd in quotients.items():
        qs[idx[n]] = Poly.from_dict(ring, qd)
    return qs, Poly.from_dict(ring, remainder)


def spoly(f: Poly, g: Poly) -> Poly:
    """``(t/LT f) f - (t/LT g) g`` with ``t = lcm(LM f, LM g)``."""
    if not f or not g:
        raise ValueError("S-polynomial of a zero polynomial")
    ring = f.ring
    t = mono_lcm(f.lm, g.lm)
    a = f.mul_term(ff_inv(f.lc, ring.modulus), mono_div(t, f.lm))
    return a.add_scaled(-ff_inv(g.lc, ring.modulus), mono_div(t, g.lm), g)


def buchberger(inputs: Sequence[Poly]) -> list[Poly]:
    """Classical Buchberger with normal selection and the coprime criterion."""
    G = [f.monic() for f in inputs if f]
    if not G:
        return []
    ring = G[0].ring
    pairs = set(combinations(range(len(G)), 2))

    def lcm_key(ij):
        i, j = ij
        return ring.key(mono_lcm(G[i].lm, G[j].lm)), ij

    while pairs:
        i, j = min(pairs, key=lcm_key)
        pairs.discard((i, j))
        a, b = G[i].lm, G[j].lm
        if mono_mul(a, b) == mono_lcm(a, b):
            continue
        r = normal_form(spoly(G[i], G[j]), G)
        if r:
            G.append(r.monic())
            n = len(G) - 1
            pairs.update((k, n) for k in range(n))
    return G


def is_groebner(B: Sequence[Poly]) -> bool:
    B = [b for b in B if b]
    return all(not normal_form(spoly(f, g), B) for f, g in combinations(B, 2))


def interreduce(B: Sequence[Poly]) -> list[Poly]:
    """Minimalise, tail-reduce and normalise; sorted by ascending LM."""
    B = [b.monic() for b in B if b]
    if not B:
        return []
    ring = B[0].ring
    B.sort(key=lambda b: ring.key(b.lm))
    minimal: list[Poly] = []
    for b in B:
        if not any(mono_divides(g.lm, b.lm) for g in minimal):
            minimal.append(b)
    reduced = []
    for n, b in enumerate(minimal):
        others = minimal[:n] + minimal[n + 1 :]
        tail = Poly(ring, b.terms[1:])
        reduced.append(Poly(ring, b.terms[:1]) + normal_form(tail, others))
    return reduced


def homogenize(f: Poly, ring: Ring | None = None, name: str = "h") -> Poly:
    """Homogenize with a new last variable; ``ring`` is the extended target ring."""
    target = ring or f.ring.extend(name)
    d = f.degree()
    return Poly.from_dict(target, {m + (d - sum(m),): c for m, c in f.terms})


def dehomogenize(f: Poly, ring: Ring) -> Poly:
    """Set the last variable to 1; ``ring`` is the original (smaller) ring."""
    acc: dict[Monomial, int] = {}
    p = ring.p
    for m, c in f.terms:
        k = m[:-1]
        acc[k] = (acc.get(k, 0) + c) % p
    return Poly.from_dict(ring, acc)


def echelon_pivots(rows: Sequence[dict[int, int]], ncols: int, p: int) -> list[int]:
    """Pivot columns of an unrestricted row echelon form (dense, with row swaps).

    Columns are in decreasing monomial order, so the pivot column of a row is
    its leading monomial.
    """
    A = np.zeros((len(rows), ncols), dtype=np.int64)
    for i, row in enumerate(rows):
        for j, c in row.items():
            A[i, j] = c
    pivots = []
    r = 0
    for c in range(ncols):
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        s = r + nz[0]
        if s != r:
            A[[r, s]] = A[[s, r]]
        A[r] = A[r] * pow(int(A[r, c]), -1, p) % p
        below = np.nonzero(A[r + 1 :, c])[0] + r + 1
        if below.size:
            A[below] = (A[below] - np.outer(A[below, c], A[r])) % p
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots
