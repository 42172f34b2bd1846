"""Symbolic preprocessing, signature-safe Gaussian elimination and the
reduction step that turns matrix rows into new labelled polynomials."""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .algebra import Monomial, Poly, mono_div, mono_divides, mono_mul
from .field import PrimeModulus, ff_inv
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
from .stats import DegreeRecord, Stats, Trace


@dataclass(frozen=True)
class RowSpec:
    """The product ``multiplier * poly(entry)`` with its signature cached."""

    multiplier: Monomial
    entry: int
    signature: Signature

    @classmethod
    def of(cls, u: Monomial, k: int, store: Store) -> "RowSpec":
        return cls(u, k, sig_mul(u, store.sig(k)))


@dataclass
class MacaulayMatrix:
    """Rows sorted by increasing signature, columns by decreasing monomial.

    ``coeffs[i]`` maps column index to a nonzero coefficient.
    """

    columns: list[Monomial]
    rows: list[RowSpec]
    coeffs: list[dict[int, int]]
    modulus: PrimeModulus
    ops: list[tuple] | None = field(default=None, repr=False)

    @property
    def p(self) -> int:
        return self.modulus.p

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.columns)

    def copy(self) -> "MacaulayMatrix":
        return MacaulayMatrix(list(self.columns), list(self.rows), [dict(r) for r in self.coeffs], self.modulus)

    def leading_column(self, i: int) -> int | None:
        row = self.coeffs[i]
        return min(row) if row else None

    def row_poly(self, i: int, ring) -> Poly:
        row = self.coeffs[i]
        return Poly(ring, [(self.columns[j], row[j]) for j in sorted(row)])


def find_reductor(
    m: Monomial,
    G: Sequence[int],
    F: Iterable[tuple[Monomial, int]],
    store: Store,
    rules: RuleTable,
    stats: Stats | None = None,
) -> tuple[Monomial, int] | None:
    """First ``(u, g)`` with ``u * LM(poly(g)) = m`` that the F5 criteria allow."""
    present = F if isinstance(F, (set, frozenset)) else set(F)
    for g in G:
        lm = store.lm(g)
        if not mono_divides(lm, m):
            continue
        u = mono_div(m, lm)
        if (u, g) in present:
            continue
        i, t = store.sig(g)
        if top_reducible(mono_mul(u, t), lower_index(G, i, store), store) or rules.rewritable(u, g, store):
            if stats is not None:
                stats.reductors_rejected += 1
            continue
        return u, g
    return None


def symbolic_preprocessing(
    S: Sequence[RowSpec | tuple[Monomial, int]],
    G: Sequence[int],
    store: Store,
    rules: RuleTable,
    stats: Stats | None = None,
    trace: Trace | None = None,
) -> tuple[list[RowSpec], list[Monomial]]:
    """Close ``S`` under reductors; return rows by increasing signature and
    the processed monomials in decreasing order."""
    ring = store.ring
    key = ring.key
    F: list[RowSpec] = [r if isinstance(r, RowSpec) else RowSpec.of(r[0], r[1], store) for r in S]
    present = {(r.multiplier, r.entry) for r in F}
    seen: set[Monomial] = set()
    heap: list = []

    def add_monomials(row: RowSpec):
        for m, _ in store.poly(row.entry).terms:
            mu = mono_mul(row.multiplier, m)
            if mu not in seen:
                seen.add(mu)
                heapq.heappush(heap, (tuple(-x for x in key(mu)), mu))

    for row in F:
        add_monomials(row)
    done: list[Monomial] = []
    while heap:
        _, m = heapq.heappop(heap)
        done.append(m)
        found = find_reductor(m, G, present, store, rules, stats)
        if found is None:
            continue
        row = RowSpec.of(found[0], found[1], store)
        F.append(row)
        present.add(found)
        add_monomials(row)
        if trace is not None:
            trace.emit("REDUCTOR_ADDED", m=ring.format_monomial(m), u=ring.format_monomial(row.multiplier),
                       k=row.entry, sig=format_signature(row.signature, ring))
    F.sort(key=lambda r: sig_key(r.signature, ring))
    return F, done


def build_matrix(F: Sequence[RowSpec], T: Sequence[Monomial], store: Store) -> MacaulayMatrix:
    ring = store.ring
    keys = [sig_key(r.signature, ring) for r in F]
    if any(a >= b for a, b in zip(keys, keys[1:])):
        raise ValueError("matrix rows must have strictly increasing signatures")
    col = {m: j for j, m in enumerate(T)}
    if len(col) != len(T):
        raise ValueError("duplicate column monomial")
    coeffs = []
    for r in F:
        u = r.multiplier
        coeffs.append({col[mono_mul(u, m)]: c for m, c in store.poly(r.entry).terms})
    return MacaulayMatrix(list(T), list(F), coeffs, ring.modulus)


def echelonize_f5(
    A: MacaulayMatrix,
    ring,
    record_ops: bool = False,
    stats: Stats | None = None,
) -> MacaulayMatrix:
    """Row echelon form without row or column swaps, in place.

    Columns are swept left to right. The pivot of column ``c`` is the first
    row whose leading column is ``c``; it is made monic and clears column
    ``c`` in the rows below it only, so no row is ever reduced by a row of
    larger signature.
    """
    p = A.p
    rows = A.coeffs
    m = len(rows)
    lead = [min(r) if r else None for r in rows]
    by_lead: dict[int, list[int]] = {}
    for i, c in enumerate(lead):
        if c is not None:
            by_lead.setdefault(c, []).append(i)
    sig_keys = [sig_key(r.signature, ring) for r in A.rows]
    ops = [] if record_ops else None
    # columns only gain pivot candidates to the right of the current one
    c = min(by_lead, default=None)
    while c is not None:
        candidates = [i for i in by_lead.pop(c) if lead[i] == c]
        if candidates:
            r = min(candidates)
            prow = rows[r]
            a = prow[c]
            if a != 1:
                inv = ff_inv(a, A.modulus)
                for j in prow:
                    prow[j] = prow[j] * inv % p
                if ops is not None:
                    ops.append(("scale", r, inv))
            for i in range(r + 1, m):
                row = rows[i]
                a = row.get(c)
                if a is None:
                    continue
                if stats is not None:
                    stats.row_operations += 1
                    if not sig_keys[r] < sig_keys[i]:
                        stats.signature_violations += 1
                for j, b in prow.items():
                    v = (row.get(j, 0) - a * b) % p
                    if v:
                        row[j] = v
                    else:
                        row.pop(j, None)
                if ops is not None:
                    ops.append(("axpy", i, r, a))
                if lead[i] == c:
                    lead[i] = min(row) if row else None
                    if lead[i] is not None:
                        by_lead.setdefault(lead[i], []).append(i)
        c = min(by_lead, default=None)
    A.ops = ops
    return A


def gaussian_elimination_f5(F: Sequence[RowSpec], T: Sequence[Monomial], store: Store) -> list[Poly]:
    """Reduced polynomial of every row of the matrix of ``F`` over columns ``T``."""
    A = echelonize_f5(build_matrix(F, T, store), store.ring)
    return [A.row_poly(i, store.ring) for i in range(len(A.rows))]


MatrixHook = Callable[[int, MacaulayMatrix, MacaulayMatrix], None]


def replay_representations(A: MacaulayMatrix, reps: list[list[Poly]], ring) -> list[list[Poly]]:
    """Apply the recorded row operations of ``A`` to per-row module vectors."""
    one = ring.one_monomial()
    out = [list(v) for v in reps]
    for op in A.ops or ():
        if op[0] == "scale":
            _, r, inv = op
            out[r] = [h.scale(inv) for h in out[r]]
        else:
            _, i, r, a = op
            out[i] = [hi.add_scaled(-a, one, hr) for hi, hr in zip(out[i], out[r])]
    return out


def reduction_f5(
    S: Sequence[RowSpec | tuple[Monomial, int]],
    G: Sequence[int],
    store: Store,
    rules: RuleTable,
    stats: Stats | None = None,
    trace: Trace | None = None,
    reps: list[list[Poly]] | None = None,
    matrix_hook: MatrixHook | None = None,
    degree: int | None = None,
) -> list[int]:
    """Reduce the selected S-polynomial components and store the new entries.

    Every row whose leading monomial changed becomes a new labelled entry
    with a rule; the indices of the nonzero ones are returned. When ``reps``
    is given (certification), module representations are carried along.
    """
    ring = store.ring
    F, T = symbolic_preprocessing(S, G, store, rules, stats, trace)
    A = build_matrix(F, T, store)
    before = A.copy() if matrix_hook is not None else None
    echelonize_f5(A, ring, record_ops=reps is not None, stats=stats)
    if matrix_hook is not None:
        matrix_hook(degree if degree is not None else -1, before, A)
    row_reps = None
    if reps is not None:
        start = [[h.mul_term(1, r.multiplier) for h in reps[r.entry]] for r in F]
        row_reps = replay_representations(A, start, ring)

    record = DegreeRecord(degree if degree is not None else -1, rows=len(F), cols=len(T))
    new: list[int] = []
    for n, row in enumerate(F):
        reduced = A.row_poly(n, ring)
        old_lm = mono_mul(row.multiplier, store.lm(row.entry))
        if reduced and reduced.lm == old_lm:
            continue
        k = store.append(row.signature, reduced)
        rules.add_rule(row.signature, k, store)
        if reps is not None:
            reps.append(row_reps[n])
        record.new_entries += 1
        if reduced:
            new.append(k)
            if trace is not None:
                trace.emit("NEW_ENTRY", k=k, sig=format_signature(row.signature, ring),
                           lm=ring.format_monomial(reduced.lm))
        else:
            record.zero_rows += 1
            if trace is not None:
                trace.emit("ZERO_ROW", k=k, sig=format_signature(row.signature, ring))
    if stats is not None:
        stats.zero_reductions += record.zero_rows
        stats.degrees.append(record)
    return new


def format_matrix(degree: int, A: MacaulayMatrix, ring) -> str:
    """Line-oriented snapshot: a header, the columns, then one line per row."""
    fmt = ring.format_monomial
    lines = [f"MATRIX d={degree} rows={len(A.rows)} cols={len(A.columns)}"]
    lines.append("COLUMNS " + " ".join(fmt(m) for m in A.columns))
    for r, row in zip(A.rows, A.coeffs):
        lead = min(row) if row else -1
        lines.append(f"ROW sig={format_signature(r.signature, ring)} u={fmt(r.multiplier)} k={r.entry} lead={lead}")
    return "\n".join(lines) + "\n"
