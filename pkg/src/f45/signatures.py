"""Signatures, the labelled-polynomial store and the rewrite-rule tables."""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .algebra import Monomial, Poly, Ring, mono_divides, mono_mul


class Signature(NamedTuple):
    """The module monomial ``monomial * e_index``."""

    index: int
    monomial: Monomial


def sig_key(s: Signature, ring: Ring) -> tuple:
    return (s.index, ring.key(s.monomial))


def sig_compare(a: Signature, b: Signature, ring: Ring) -> int:
    ka, kb = sig_key(a, ring), sig_key(b, ring)
    return (ka > kb) - (ka < kb)


def sig_mul(t: Monomial, s: Signature) -> Signature:
    return Signature(s.index, mono_mul(t, s.monomial))


def format_signature(s: Signature, ring: Ring) -> str:
    if not any(s.monomial):
        return f"e{s.index}"
    return f"{ring.format_monomial(s.monomial)}*e{s.index}"


@dataclass(frozen=True)
class LabelledEntry:
    signature: Signature
    poly: Poly


class Store:
    """Append-only list of labelled polynomials, addressed by position."""

    def __init__(self, ring: Ring):
        self.ring = ring
        self.entries: list[LabelledEntry] = []

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, k: int) -> LabelledEntry:
        return self.entries[k]

    def __iter__(self):
        return iter(self.entries)

    def append(self, sig: Signature, poly: Poly) -> int:
        self.entries.append(LabelledEntry(sig, poly))
        return len(self.entries) - 1

    def sig(self, k: int) -> Signature:
        return self.entries[k].signature

    def poly(self, k: int) -> Poly:
        return self.entries[k].poly

    def idx(self, k: int) -> int:
        return self.entries[k].signature.index

    def lm(self, k: int) -> Monomial:
        return self.entries[k].poly.lm

    def find(self, sig: Signature) -> list[int]:
        """Positions of all entries carrying ``sig``."""
        return [k for k, e in enumerate(self.entries) if e.signature == sig]


class RuleTable:
    """Per-index lists ``Rules_i`` of ``(t, k)``, kept ascending in ``t``."""

    def __init__(self, ring: Ring, ngens: int = 0):
        self.ring = ring
        self.rules: list[list[tuple[Monomial, int]]] = [[] for _ in range(ngens)]
        self._keys: list[list[tuple]] = [[] for _ in range(ngens)]

    def __getitem__(self, i: int) -> list[tuple[Monomial, int]]:
        return self.rules[i] if i < len(self.rules) else []

    def add_rule(self, sig: Signature, k: int, store: Store | None = None) -> None:
        if store is not None and store.sig(k) != sig:
            raise ValueError(f"rule {sig} does not match the signature of entry {k}")
        i, t = sig
        while len(self.rules) <= i:
            self.rules.append([])
            self._keys.append([])
        key = self.ring.key(t)
        # equal monomials: the later insert goes after, so the scan meets it first
        pos = bisect_right(self._keys[i], key)
        self._keys[i].insert(pos, key)
        self.rules[i].insert(pos, (t, k))

    def rewritable(self, u: Monomial, k: int, store: Store) -> bool:
        """Whether ``u * sig(k)`` is rewritable by a later rule than entry ``k``.

        Rules_i is scanned from its largest monomial down; the first rule
        whose monomial divides ``u * t`` decides.
        """
        i, t = store.sig(k)
        ut = mono_mul(u, t)
        for v, j in reversed(self[i]):
            if mono_divides(v, ut):
                return j != k
        return False

    def is_sorted(self) -> bool:
        return all(ks == sorted(ks) for ks in self._keys)


def add_rule(sig: Signature, k: int, rules: RuleTable, store: Store | None = None) -> RuleTable:
    rules.add_rule(sig, k, store)
    return rules


def rewritable(u: Monomial, k: int, store: Store, rules: RuleTable) -> bool:
    return rules.rewritable(u, k, store)


def top_reducible(t: Monomial, basis_entries: Iterable[int], store: Store) -> bool:
    """True iff the leading monomial of some listed entry divides ``t``."""
    return any(mono_divides(store.lm(g), t) for g in basis_entries)


def lower_index(G: Iterable[int], i: int, store: Store) -> list[int]:
    """The basis elements of index strictly below ``i``."""
    return [g for g in G if store.idx(g) < i]
