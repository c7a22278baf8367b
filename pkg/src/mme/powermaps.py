"""Periodic points of power maps z -> z^d.

On the unit circle the periodic points of z^d are the roots of unity
e^{2 pi i a/b} with gcd(b, d) = 1, in which case the period is the
multiplicative order of d modulo b; off the circle only 0 and infinity
are periodic.  Two power maps share their full periodic-point set exactly
when their degrees have the same radical.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import sympy


def radical(d):
    """Product of the distinct primes dividing d."""
    if d < 2:
        raise ValueError("radical is defined for integers >= 2 here")
    out = 1
    for p in sympy.factorint(d):
        out *= p
    return out


def same_periodic_points_powermaps(df, dg):
    """Per(z^df) == Per(z^dg), decided by the radical criterion."""
    if df < 2 or dg < 2:
        raise ValueError("power-map degrees must be >= 2")
    return radical(df) == radical(dg)


@dataclass(frozen=True)
class RootOfUnity:
    """e^{2 pi i a/b} in lowest terms with 0 <= a < b."""

    a: int
    b: int

    def __post_init__(self):
        if self.b < 1:
            raise ValueError("denominator must be positive")
        if not (0 <= self.a < self.b):
            raise ValueError("numerator must satisfy 0 <= a < b")
        if math.gcd(self.a, self.b) != 1:
            raise ValueError("a/b must be in lowest terms")

    @classmethod
    def reduced(cls, a, b):
        if b < 1:
            raise ValueError("denominator must be positive")
        a %= b
        g = math.gcd(a, b)
        return cls(a // g, b // g)

    def as_complex(self):
        return complex(
            math.cos(2 * math.pi * self.a / self.b),
            math.sin(2 * math.pi * self.a / self.b),
        )


def is_periodic(z, d):
    """Whether the root of unity z is periodic (not just preperiodic) for z^d."""
    if d < 2:
        raise ValueError("degree must be >= 2")
    return math.gcd(z.b, d) == 1


def period(z, d):
    """Exact period of z under z^d, or None when z is not periodic.

    z^(d^n) = z needs b | d^n - 1, so the period is the multiplicative
    order of d modulo b.
    """
    if not is_periodic(z, d):
        return None
    if z.b == 1:
        return 1  # z = 1 is fixed
    return int(sympy.n_order(d, z.b))


def brute_force_is_periodic(z, d, max_steps=None):
    """Oracle: iterate the exponent map a/b -> d a/b mod 1 and look for a loop.

    The orbit of a/b under multiplication by d mod 1 has at most b states,
    so z is periodic iff the start state recurs within b steps.
    """
    if max_steps is None:
        max_steps = z.b + 1
    a, b = z.a, z.b
    cur = a
    for _ in range(max_steps):
        cur = (cur * d) % b
        if cur == a:
            return True
    return False
