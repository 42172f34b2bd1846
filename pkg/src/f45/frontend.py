"""Plain-text polynomial systems, canonical rendering and stats JSON.

File format::

    ring 32003 x y z t degrevlex
    # comment
    x^2*y - z^2*t
    x*z^2 - y^2*t
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .algebra import Monomial, Poly, Ring
from .field import PrimeModulus
from .stats import Stats

ORDER_NAMES = ("degrevlex",)


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, col {col}: {message}")
        self.message = message
        self.line = line
        self.col = col


@dataclass
class SystemDocument:
    ring: Ring
    polys: list[Poly]
    source_lines: list[str] = field(default_factory=list)

    @property
    def order(self) -> str:
        return self.ring.order


def _is_ident_start(ch: str) -> bool:
    return ch.isalpha() or ch == "_"


def _is_ident_char(ch: str) -> bool:
    return ch.isalnum() or ch == "_"


class _LineParser:
    def __init__(self, text: str, lineno: int, ring: Ring):
        self.s = text
        self.i = 0
        self.lineno = lineno
        self.ring = ring
        self.index = {name: n for n, name in enumerate(ring.var_names)}

    def error(self, msg: str, at: int | None = None) -> ParseError:
        return ParseError(msg, self.lineno, (self.i if at is None else at) + 1)

    def skip_ws(self) -> None:
        while self.i < len(self.s) and self.s[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.s[self.i] if self.i < len(self.s) else ""

    def read_int(self) -> int:
        start = self.i
        while self.i < len(self.s) and self.s[self.i].isdigit():
            self.i += 1
        return int(self.s[start : self.i])

    def read_ident(self) -> str:
        start = self.i
        while self.i < len(self.s) and _is_ident_char(self.s[self.i]):
            self.i += 1
        return self.s[start : self.i]

    def polynomial(self) -> Poly:
        acc: dict[Monomial, int] = {}
        sign = 1
        if self.peek() == "-":
            sign = -1
            self.i += 1
        while True:
            c, m = self.term()
            acc[m] = (acc.get(m, 0) + sign * c) % self.ring.p
            ch = self.peek()
            if not ch:
                break
            if ch not in "+-":
                raise self.error(f"expected '+' or '-', found {ch!r}")
            sign = 1 if ch == "+" else -1
            self.i += 1
        return Poly.from_dict(self.ring, acc)

    def term(self) -> tuple[int, Monomial]:
        exps = [0] * self.ring.nvars
        ch = self.peek()
        start = self.i
        coeff = None
        if ch.isdigit():
            coeff = self.read_int()
        nfactors = 0
        while True:
            ch = self.peek()
            if ch == "*":
                if coeff is None and nfactors == 0:
                    raise self.error("unexpected '*'")
                self.i += 1
                if not _is_ident_start(self.peek()):
                    raise self.error("expected a variable after '*'")
                ch = self.peek()
            if not _is_ident_start(ch):
                break
            at = self.i
            name = self.read_ident()
            if name not in self.index:
                raise self.error(f"unknown variable {name!r}", at)
            e = 1
            if self.peek() == "^":
                self.i += 1
                self.skip_ws()
                if not (self.i < len(self.s) and self.s[self.i].isdigit()):
                    raise self.error("malformed exponent")
                at = self.i
                e = self.read_int()
                if e == 0:
                    raise self.error("exponent must be positive", at)
            exps[self.index[name]] += e
            nfactors += 1
        if coeff is None and nfactors == 0:
            raise self.error("expected a term", start if start < len(self.s) else None)
        return (1 if coeff is None else coeff), tuple(exps)


def _parse_header(line: str, lineno: int) -> Ring:
    tokens = []
    pos = 0
    for tok in line.split():
        pos = line.index(tok, pos)
        tokens.append((tok, pos + 1))
        pos += len(tok)
    if not tokens or tokens[0][0] != "ring":
        raise ParseError("expected header 'ring <p> <vars...> <order>'", lineno, 1)
    if len(tokens) < 4:
        raise ParseError("ring header needs a modulus, at least one variable and an order", lineno, 1)
    ptok, pcol = tokens[1]
    if not ptok.isdigit():
        raise ParseError(f"modulus {ptok!r} is not an integer", lineno, pcol)
    try:
        modulus = PrimeModulus(int(ptok))
    except ValueError as exc:
        raise ParseError(str(exc), lineno, pcol) from None
    order, ocol = tokens[-1]
    if order not in ORDER_NAMES:
        raise ParseError(f"unsupported term order {order!r}", lineno, ocol)
    names = []
    for tok, col in tokens[2:-1]:
        if not (_is_ident_start(tok[0]) and all(_is_ident_char(ch) for ch in tok)):
            raise ParseError(f"invalid variable name {tok!r}", lineno, col)
        if tok in names:
            raise ParseError(f"duplicate variable {tok!r}", lineno, col)
        names.append(tok)
    return Ring(modulus, tuple(names), order)


def parse_polynomial(text: str, ring: Ring, lineno: int = 1) -> Poly:
    if not text.strip():
        raise ParseError("empty polynomial", lineno, 1)
    return _LineParser(text, lineno, ring).polynomial()


def parse_system(text: str) -> SystemDocument:
    ring = None
    polys: list[Poly] = []
    sources: list[str] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if ring is None:
            ring = _parse_header(line, lineno)
            continue
        polys.append(parse_polynomial(line, ring, lineno))
        sources.append(line)
    if ring is None:
        raise ParseError("missing ring header", 1, 1)
    return SystemDocument(ring, polys, sources)


def format_polynomial(f: Poly, ring: Ring | None = None) -> str:
    ring = ring or f.ring
    if not f:
        return "0"
    p = ring.p
    out = []
    for n, (m, c) in enumerate(f.terms):
        neg = c > p // 2
        a = p - c if neg else c
        mono = ring.format_monomial(m)
        if mono == "1":
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if n == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


def format_system(polys, ring: Ring) -> str:
    header = f"ring {ring.p} {' '.join(ring.var_names)} {ring.order}\n"
    return header + "".join(format_polynomial(f, ring) + "\n" for f in polys)


def stats_to_json(s: Stats) -> str:
    doc = {
        "pairs_created": s.pairs_created,
        "pairs_rejected_f5": s.pairs_rejected_f5,
        "pairs_rejected_rewritable_update": s.pairs_rejected_rewritable_update,
        "pairs_rejected_rewritable_spoly": s.pairs_rejected_rewritable_spoly,
        "reductors_rejected": s.reductors_rejected,
        "zero_reductions": s.zero_reductions,
        "degrees": [
            {"degree": r.degree, "rows": r.rows, "cols": r.cols, "new_entries": r.new_entries, "zero_rows": r.zero_rows}
            for r in s.degrees
        ],
    }
    return json.dumps(doc, indent=2) + "\n"
