"""Critical pairs under the F5 criteria and the degree-sliced pair queue."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import Monomial, mono_degree, mono_div, mono_lcm, mono_mul
from .signatures import (
    RuleTable,
    Signature,
    Store,
    format_signature,
    lower_index,
    sig_key,
    sig_mul,
    top_reducible,
)
from .stats import Stats, Trace


@dataclass(frozen=True)
class CriticalPair:
    """``(lcm, u_k, k, u_l, l)``; the ``k`` component carries the larger signature."""

    lcm: Monomial
    u_k: Monomial
    k: int
    u_l: Monomial
    l: int

    @property
    def degree(self) -> int:
        return mono_degree(self.lcm)

    def signature(self, store: Store) -> Signature:
        return sig_mul(self.u_k, store.sig(self.k))

    def check(self, store: Store) -> None:
        ring = store.ring
        assert mono_lcm(store.lm(self.k), store.lm(self.l)) == self.lcm
        assert mono_mul(self.u_k, store.lm(self.k)) == self.lcm
        assert mono_mul(self.u_l, store.lm(self.l)) == self.lcm
        assert sig_key(self.signature(store), ring) > sig_key(sig_mul(self.u_l, store.sig(self.l)), ring)

    def as_tuple(self) -> tuple:
        return (self.lcm, self.u_k, self.k, self.u_l, self.l)


def _pair_fields(pair: CriticalPair, store: Store) -> dict:
    fmt = store.ring.format_monomial
    return dict(
        d=pair.degree,
        lcm=fmt(pair.lcm),
        k=pair.k,
        u_k=fmt(pair.u_k),
        l=pair.l,
        u_l=fmt(pair.u_l),
        sig=format_signature(pair.signature(store), store.ring),
    )


def update_f5(
    k: int,
    l: int,
    G: Sequence[int],
    store: Store,
    rules: RuleTable,
    stats: Stats | None = None,
    trace: Trace | None = None,
) -> CriticalPair | None:
    """Build the critical pair of entries ``k`` and ``l`` if it passes the F5 criteria."""
    if k == l:
        raise ValueError("a critical pair needs two distinct entries")
    if not store.poly(k) or not store.poly(l):
        raise ValueError("critical pair of a zero polynomial")
    ring = store.ring
    t_k, t_l = store.lm(k), store.lm(l)
    t = mono_lcm(t_k, t_l)
    u_k, u_l = mono_div(t, t_k), mono_div(t, t_l)
    (e_k, m_k), (e_l, m_l) = store.sig(k), store.sig(l)
    if stats is not None:
        stats.pairs_created += 1

    def reject(counter: str, event: str, reason: str):
        if stats is not None:
            setattr(stats, counter, getattr(stats, counter) + 1)
        if trace is not None:
            fmt = ring.format_monomial
            trace.emit(event, stage="update", d=mono_degree(t), lcm=fmt(t), k=k, u_k=fmt(u_k), l=l,
                       u_l=fmt(u_l), reason=reason)
        return None

    if top_reducible(mono_mul(u_k, m_k), lower_index(G, e_k, store), store):
        return reject("pairs_rejected_f5", "PAIR_REJECTED_F5", "k")
    if top_reducible(mono_mul(u_l, m_l), lower_index(G, e_l, store), store):
        return reject("pairs_rejected_f5", "PAIR_REJECTED_F5", "l")
    if rules.rewritable(u_k, k, store):
        return reject("pairs_rejected_rewritable_update", "PAIR_REJECTED_RW", "k")
    if rules.rewritable(u_l, l, store):
        return reject("pairs_rejected_rewritable_update", "PAIR_REJECTED_RW", "l")
    sk = sig_key(sig_mul(u_k, store.sig(k)), ring)
    sl = sig_key(sig_mul(u_l, store.sig(l)), ring)
    if sk == sl:
        # unreachable in practice: one component is always rewritable by the other
        return reject("pairs_rejected_rewritable_update", "PAIR_REJECTED_RW", "tie")
    if sk < sl:
        u_k, u_l, k, l = u_l, u_k, l, k
    pair = CriticalPair(t, u_k, k, u_l, l)
    if stats is not None:
        stats.pairs_kept += 1
    if trace is not None:
        trace.emit("PAIR_CREATED", **_pair_fields(pair, store))
    return pair


class PairQueue:
    """Pending critical pairs grouped by degree, in creation order within a degree."""

    def __init__(self):
        self._slices: dict[int, list[CriticalPair]] = {}

    def __len__(self) -> int:
        return sum(len(v) for v in self._slices.values())

    def __bool__(self) -> bool:
        return bool(self._slices)

    def push(self, pair: CriticalPair) -> None:
        self._slices.setdefault(pair.degree, []).append(pair)

    def min_degree(self) -> int | None:
        return min(self._slices, default=None)

    def pairs(self) -> list[CriticalPair]:
        return [pr for d in sorted(self._slices) for pr in self._slices[d]]

    def pop_min(self) -> tuple[int, list[CriticalPair]] | None:
        """Remove and return the minimal-degree slice, or ``None`` when empty."""
        d = self.min_degree()
        if d is None:
            return None
        return d, self._slices.pop(d)


def queue_push(P: PairQueue, pair: CriticalPair) -> PairQueue:
    P.push(pair)
    return P


def queue_pop_min(P: PairQueue) -> tuple[int, list[CriticalPair]] | None:
    return P.pop_min()


def s_polynomials_f5(
    pairs: Sequence[CriticalPair],
    store: Store,
    rules: RuleTable,
    stats: Stats | None = None,
    trace: Trace | None = None,
) -> list[tuple[Monomial, int]]:
    """Select the larger-signature component ``(u, k)`` of every surviving pair.

    Pairs are re-checked against rules created since they were built. The
    result is sorted by increasing signature with duplicate signatures removed.
    """
    ring = store.ring
    # stable sort: pairs with equal signature keep creation order
    ordered = sorted(pairs, key=lambda pr: sig_key(pr.signature(store), ring))
    out: list[tuple[Monomial, int]] = []
    seen: set[Signature] = set()
    for pair in ordered:
        if rules.rewritable(pair.u_k, pair.k, store) or rules.rewritable(pair.u_l, pair.l, store):
            if stats is not None:
                stats.pairs_rejected_rewritable_spoly += 1
            if trace is not None:
                trace.emit("PAIR_REJECTED_RW", stage="spoly", **_pair_fields(pair, store))
            continue
        sig = pair.signature(store)
        if sig in seen:
            continue
        seen.add(sig)
        out.append((pair.u_k, pair.k))
        if trace is not None:
            trace.emit("SPOL_KEPT", u=ring.format_monomial(pair.u_k), k=pair.k,
                       sig=format_signature(sig, ring))
    out.sort(key=lambda uk: sig_key(sig_mul(uk[0], store.sig(uk[1])), ring))
    return out
