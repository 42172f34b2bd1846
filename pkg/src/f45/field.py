"""Arithmetic in the prime field F_p.

Scalars are plain Python ints kept in the canonical range ``[0, p)``.
"""

from __future__ import annotations

from dataclasses import dataclass

MAX_MODULUS = 2**31


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeModulus:
    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or isinstance(self.p, bool):
            raise TypeError(f"modulus must be an int, got {type(self.p).__name__}")
        if not 2 < self.p < MAX_MODULUS:
            raise ValueError(f"modulus must satisfy 2 < p < 2^31, got {self.p}")
        if not is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")

    def __int__(self) -> int:
        return self.p

    def canonical(self, a: int) -> int:
        return a % self.p


def ff_add(a: int, b: int, m: PrimeModulus) -> int:
    s = a + b
    return s - m.p if s >= m.p else s


def ff_sub(a: int, b: int, m: PrimeModulus) -> int:
    s = a - b
    return s + m.p if s < 0 else s


def ff_neg(a: int, m: PrimeModulus) -> int:
    return m.p - a if a else 0


def ff_mul(a: int, b: int, m: PrimeModulus) -> int:
    return a * b % m.p


def ff_inv(a: int, m: PrimeModulus) -> int:
    """Inverse of ``a`` modulo p by the extended Euclidean algorithm."""
    a %= m.p
    if a == 0:
        raise ZeroDivisionError("inversion of zero")
    r0, r1 = m.p, a
    s0, s1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    return s0 % m.p
