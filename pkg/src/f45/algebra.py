"""Monomials, term orders and sparse multivariate polynomials over F_p.

A monomial is a tuple of non-negative exponents, one per ring variable.
A :class:`Poly` keeps its terms as ``(monomial, coefficient)`` pairs sorted
strictly decreasing under the ring's term order, with no zero coefficients.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping

from .field import PrimeModulus, ff_inv

Monomial = tuple  # tuple[int, ...]


def degrevlex_key(m: Monomial) -> tuple:
    # a > b iff degree is larger, or the last nonzero entry of a - b is negative
    return (sum(m),) + tuple(-e for e in reversed(m))


ORDERS: dict[str, Callable[[Monomial], tuple]] = {"degrevlex": degrevlex_key}


def mono_degree(m: Monomial) -> int:
    return sum(m)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True iff ``a`` divides ``b``."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    """The quotient ``b / a``; ``a`` must divide ``b``."""
    q = tuple(y - x for x, y in zip(a, b))
    if any(e < 0 for e in q):
        raise ValueError(f"monomial {a} does not divide {b}")
    return q


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


@dataclass(frozen=True)
class Ring:
    """Polynomial ring F_p[var_names] with a fixed term order."""

    modulus: PrimeModulus
    var_names: tuple[str, ...]
    order: str = "degrevlex"
    _keys: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "var_names", tuple(self.var_names))
        if not self.var_names:
            raise ValueError("a ring needs at least one variable")
        if len(set(self.var_names)) != len(self.var_names):
            raise ValueError(f"duplicate variable names in {self.var_names}")
        if self.order not in ORDERS:
            raise ValueError(f"unknown term order {self.order!r}")

    @classmethod
    def make(cls, p: int, var_names: Iterable[str], order: str = "degrevlex") -> "Ring":
        return cls(PrimeModulus(p), tuple(var_names), order)

    @property
    def p(self) -> int:
        return self.modulus.p

    @property
    def nvars(self) -> int:
        return len(self.var_names)

    def key(self, m: Monomial) -> tuple:
        """Sort key realising the term order: ``key(a) < key(b)`` iff ``a < b``."""
        k = self._keys.get(m)
        if k is None:
            if len(m) != self.nvars:
                raise ValueError(f"monomial {m} has {len(m)} exponents, ring has {self.nvars} variables")
            k = self._keys[m] = ORDERS[self.order](m)
        return k

    def compare(self, a: Monomial, b: Monomial) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def one_monomial(self) -> Monomial:
        return (0,) * self.nvars

    def var(self, name: str) -> Monomial:
        i = self.var_names.index(name)
        return tuple(int(j == i) for j in range(self.nvars))

    def zero(self) -> "Poly":
        return Poly(self, ())

    def term(self, c: int, m: Monomial) -> "Poly":
        c %= self.p
        return Poly(self, ((m, c),) if c else ())

    def from_dict(self, d: Mapping[Monomial, int]) -> "Poly":
        return Poly.from_dict(self, d)

    def format_monomial(self, m: Monomial) -> str:
        parts = []
        for name, e in zip(self.var_names, m):
            if e == 1:
                parts.append(name)
            elif e:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def extend(self, name: str) -> "Ring":
        """This ring with one more variable appended last in the order."""
        return Ring(self.modulus, self.var_names + (name,), self.order)


class Poly:
    """Immutable sparse polynomial; see the module docstring for the invariants."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms):
        self.ring = ring
        self.terms = tuple(terms)
        self._hash = None

    @classmethod
    def from_dict(cls, ring: Ring, d: Mapping[Monomial, int]) -> "Poly":
        p = ring.p
        items = [(m, c % p) for m, c in d.items() if c % p]
        items.sort(key=lambda mc: ring.key(mc[0]), reverse=True)
        return cls(ring, items)

    # --- inspection -------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.terms)
        return self._hash

    def __repr__(self) -> str:
        from .frontend import format_polynomial

        return f"Poly({format_polynomial(self)!r})"

    def leading(self) -> tuple[int, Monomial]:
        """``(LC, LM)``; raises on the zero polynomial."""
        if not self.terms:
            raise ValueError("leading term of the zero polynomial")
        m, c = self.terms[0]
        return c, m

    @property
    def lm(self) -> Monomial:
        return self.leading()[1]

    @property
    def lc(self) -> int:
        return self.leading()[0]

    def monomials(self) -> list[Monomial]:
        return [m for m, _ in self.terms]

    def coefficient(self, m: Monomial) -> int:
        for t, c in self.terms:
            if t == m:
                return c
        return 0

    def to_dict(self) -> dict[Monomial, int]:
        return dict(self.terms)

    def degree(self) -> int:
        """Total degree (of the leading term, the maximum under degree orders)."""
        return max((sum(m) for m, _ in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m, _ in self.terms}) <= 1

    # --- arithmetic -------------------------------------------------------

    def mul_term(self, c: int, t: Monomial) -> "Poly":
        """``c * t * self``; the term order is preserved by monomial multiplication."""
        p = self.ring.p
        c %= p
        if not c:
            return self.ring.zero()
        return Poly(self.ring, [(mono_mul(m, t), a * c % p) for m, a in self.terms])

    def add_scaled(self, c: int, t: Monomial, g: "Poly") -> "Poly":
        """``self + c * t * g`` by a linear merge of the two sorted term lists."""
        ring = self.ring
        p = ring.p
        c %= p
        if not c or not g.terms:
            return self
        other = [(mono_mul(m, t), a * c % p) for m, a in g.terms]
        if not self.terms:
            return Poly(ring, other)
        key = ring.key
        a, b = self.terms, other
        i = j = 0
        out = []
        ka = key(a[0][0])
        kb = key(b[0][0])
        while True:
            if ka > kb:
                out.append(a[i])
                i += 1
                if i == len(a):
                    break
                ka = key(a[i][0])
            elif kb > ka:
                out.append(b[j])
                j += 1
                if j == len(b):
                    break
                kb = key(b[j][0])
            else:
                s = (a[i][1] + b[j][1]) % p
                if s:
                    out.append((a[i][0], s))
                i += 1
                j += 1
                if i == len(a) or j == len(b):
                    break
                ka = key(a[i][0])
                kb = key(b[j][0])
        out.extend(a[i:])
        out.extend(b[j:])
        return Poly(ring, out)

    def __add__(self, other: "Poly") -> "Poly":
        return self.add_scaled(1, self.ring.one_monomial(), other)

    def __sub__(self, other: "Poly") -> "Poly":
        return self.add_scaled(-1, self.ring.one_monomial(), other)

    def __neg__(self) -> "Poly":
        return self.scale(-1)

    def scale(self, c: int) -> "Poly":
        return self.mul_term(c, self.ring.one_monomial())

    def __mul__(self, other: "Poly") -> "Poly":
        # only needed by certification and tests; the engine multiplies by terms
        acc: dict[Monomial, int] = {}
        p = self.ring.p
        for m, a in self.terms:
            for n, b in other.terms:
                k = mono_mul(m, n)
                acc[k] = (acc.get(k, 0) + a * b) % p
        return Poly.from_dict(self.ring, acc)

    def monic(self) -> "Poly":
        c, _ = self.leading()
        if c == 1:
            return self
        return self.scale(ff_inv(c, self.ring.modulus))


def poly_leading(f: Poly) -> tuple[int, Monomial]:
    return f.leading()


def poly_add_scaled(f: Poly, c: int, t: Monomial, g: Poly) -> Poly:
    return f.add_scaled(c, t, g)


def poly_monic(f: Poly) -> Poly:
    return f.monic()


def poly_is_homogeneous(f: Poly) -> bool:
    return f.is_homogeneous()


class TermHeap:
    """Mutable coefficient map that yields its largest monomial first.

    Used by division routines which repeatedly cancel the top term.
    """

    def __init__(self, ring: Ring, f: Poly | None = None):
        self.ring = ring
        self.coeffs: dict[Monomial, int] = {}
        self._heap: list = []
        if f is not None:
            self.add_scaled(1, ring.one_monomial(), f)

    def add_scaled(self, c: int, t: Monomial, g: Poly) -> None:
        p = self.ring.p
        key = self.ring.key
        coeffs = self.coeffs
        for m, a in g.terms:
            mt = mono_mul(m, t)
            old = coeffs.get(mt)
            if old is None:
                coeffs[mt] = a * c % p
                heapq.heappush(self._heap, (tuple(-x for x in key(mt)), mt))
            else:
                coeffs[mt] = (old + a * c) % p

    def pop_leading(self) -> tuple[Monomial, int] | None:
        """Remove and return the largest term with nonzero coefficient."""
        while self._heap:
            _, m = heapq.heappop(self._heap)
            c = self.coeffs.pop(m)
            if c:
                return m, c
        return None
