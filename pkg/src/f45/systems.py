"""Ready-made input systems: the small worked example and random homogeneous ones."""

from __future__ import annotations

import random
from itertools import combinations_with_replacement

from .algebra import Poly, Ring

EXAMPLE_TEXT = """\
# <x^2*y - z^2*t, x*z^2 - y^2*t, y*z^3 - x^2*t^2> over F_32003, degrevlex
ring 32003 x y z t degrevlex
x^2*y - z^2*t
x*z^2 - y^2*t
y*z^3 - x^2*t^2
"""


def monomials_of_degree(nvars: int, d: int) -> list[tuple[int, ...]]:
    out = []
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for v in combo:
            e[v] += 1
        out.append(tuple(e))
    return out


def random_homogeneous(ring: Ring, degree: int, rng: random.Random, density: float = 0.6) -> Poly:
    """A nonzero homogeneous polynomial with roughly ``density`` of all terms present."""
    monos = monomials_of_degree(ring.nvars, degree)
    while True:
        d = {m: rng.randrange(1, ring.p) for m in monos if rng.random() < density}
        if d:
            return Poly.from_dict(ring, d)


def random_system(
    rng: random.Random,
    p: int = 32003,
    nvars: tuple[int, int] = (3, 4),
    ngens: tuple[int, int] = (2, 4),
    degrees: tuple[int, int] = (2, 3),
    density: float = 0.6,
) -> tuple[Ring, list[Poly]]:
    n = rng.randint(*nvars)
    ring = Ring.make(p, "xyzt"[:n] if n <= 4 else [f"x{i}" for i in range(n)])
    m = rng.randint(*ngens)
    gens = [random_homogeneous(ring, rng.randint(*degrees), rng, density) for _ in range(m)]
    return ring, gens
