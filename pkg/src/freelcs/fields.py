"""Exact coefficient arithmetic: prime fields and the rationals.

All dimensions computed by this package are characteristic-0 dimensions.
Ranks are computed over a large word-sized prime field by default (fast,
machine-word arithmetic) with optional exact-rational recomputation and a
two-prime agreement mode.
"""
from __future__ import annotations

import random
from fractions import Fraction

import sympy

DEFAULT_PRIME = 2147483647  # 2**31 - 1


class PrimeExhausted(ArithmeticError):
    """A denominator or pivot vanished mod p; retry with another prime."""


class FieldDisagreement(RuntimeError):
    """Two independent primes produced different dimensions."""


class GF:
    """The prime field F_p.  Elements are ints in [0, p)."""

    def __init__(self, p=DEFAULT_PRIME):
        if not sympy.isprime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    @property
    def name(self):
        return f"gf{self.p}"

    def coerce(self, x):
        """Reduce an int or Fraction into [0, p)."""
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise PrimeExhausted(f"denominator divisible by {self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return x % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise PrimeExhausted(f"zero pivot mod {self.p}")
        return pow(a, -1, self.p)

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, GF) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


class QQ:
    """The rational numbers, exact via Fraction."""

    p = None

    @property
    def name(self):
        return "qq"

    def coerce(self, x):
        return x if isinstance(x, Fraction) else Fraction(x)

    def inv(self, a):
        return 1 / Fraction(a)

    def __repr__(self):
        return "QQ()"

    def __eq__(self, other):
        return isinstance(other, QQ)

    def __hash__(self):
        return hash("QQ")


def random_prime_pair(seed=None):
    """Two distinct random 31-bit primes for the agreement check."""
    rng = random.Random(seed)

    def draw():
        return int(sympy.nextprime(rng.randrange(2**30, 2**31 - 100)))

    p = draw()
    q = draw()
    while q == p:
        q = draw()
    return p, q
