"""Exact integer and rational helpers: p-adic valuations, lcm folds, primes.

Python integers are arbitrary precision and ``fractions.Fraction`` keeps every
rational reduced with a positive denominator, so nothing here ever rounds;
these wrappers add the domain checks and conventions the rest of the package
relies on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

# Trial division stays deterministic and fast up to here; larger candidate
# primes are rejected outright rather than probabilistically tested.
PRIMALITY_CHECK_LIMIT = 10**6


class EnumerationCapError(RuntimeError):
    """A brute-force enumeration would exceed its configured cap."""

    def __init__(self, what: str, requested: int, cap: int):
        super().__init__(f"{what}: n = {requested} exceeds the enumeration cap {cap}")
        self.requested = requested
        self.cap = cap


def is_prime(p: int) -> bool:
    """Deterministic trial division; intended for p <= PRIMALITY_CHECK_LIMIT."""
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def _require_prime(p: int) -> None:
    if p > PRIMALITY_CHECK_LIMIT:
        raise ValueError(
            f"primality checking is limited to p <= {PRIMALITY_CHECK_LIMIT}, got {p}"
        )
    if not is_prime(p):
        raise ValueError(f"expected a prime, got {p}")


def vp_int(a: int, p: int) -> int:
    """Largest e such that p**e divides a, for a >= 1 and p prime."""
    if a <= 0:
        raise ValueError(f"valuation needs a positive integer, got {a}")
    _require_prime(p)
    e = 0
    while a % p == 0:
        a //= p
        e += 1
    return e


def vp_rat(r: Fraction, p: int) -> int:
    """p-adic valuation of a nonzero rational: vp(numerator) - vp(denominator)."""
    r = Fraction(r)
    if r == 0:
        raise ValueError("the valuation of 0 is not representable")
    return vp_int(abs(r.numerator), p) - vp_int(r.denominator, p)


def lcm_list(xs: Iterable[int]) -> int:
    """Least common multiple of positive integers; the empty list gives 1."""
    xs = list(xs)
    for x in xs:
        if x < 1:
            raise ValueError(f"lcm is defined here for positive integers only, got {x}")
    return math.lcm(*xs)


def lcm_range(n: int) -> int:
    """lcm(1, 2, ..., n); n in {0, 1} gives 1."""
    if n < 0:
        raise ValueError(f"lcm_range needs n >= 0, got {n}")
    return math.lcm(*range(2, n + 1))


def denominator_of(r: Fraction | int) -> int:
    """Smallest positive d with d*r an integer; den(0) = 1."""
    return Fraction(r).denominator


def primes_up_to(n: int) -> list[int]:
    """Strictly increasing list of all primes <= n (sieve); n < 2 gives []."""
    if n < 2:
        return []
    sieve = bytearray(b"\x01") * (n + 1)
    sieve[:2] = b"\x00\x00"
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            start = p * p
            sieve[start : n + 1 : p] = b"\x00" * ((n - start) // p + 1)
    return [i for i, flag in enumerate(sieve) if flag]


@dataclass(frozen=True)
class PrimeFactorization:
    """Prime-power factorization as (prime, exponent) pairs, primes increasing.

    The empty factorization represents 1.
    """

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        previous = 1
        for p, e in self.factors:
            if p <= previous:
                raise ValueError(f"primes must be strictly increasing, got {p} after {previous}")
            _require_prime(p)
            if e < 1:
                raise ValueError(f"exponents must be >= 1, got {p}^{e}")
            previous = p

    def value(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)
