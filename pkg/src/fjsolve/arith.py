"""Half-integral 2x2 matrices, the GL2(Z) action on them, and Gauss reduction.

A matrix ``t = [[n, r/2], [r/2, m]]`` is stored as the integer triple
``(n, r, m)``; equivalently the binary quadratic form ``n x^2 + r x y + m y^2``.
"""
from fractions import Fraction
from typing import NamedTuple

from .errors import NotPositiveSemidefinite


class HalfIntegralMatrix2(NamedTuple):
    n: int
    r: int
    m: int

    @property
    def discriminant(self):
        return 4 * self.n * self.m - self.r * self.r

    def is_psd(self):
        return self.n >= 0 and self.m >= 0 and self.discriminant >= 0

    def is_positive_definite(self):
        return self.n > 0 and self.discriminant > 0

    def value(self, x, y):
        """Value of the quadratic form at the integer vector (x, y)."""
        return self.n * x * x + self.r * x * y + self.m * y * y

    def require_psd(self):
        if not self.is_psd():
            raise NotPositiveSemidefinite(f"{tuple(self)} has discriminant {self.discriminant}")
        return self


class Unimodular2(NamedTuple):
    """Integer matrix [[a, b], [c, d]] with determinant +1 or -1."""
    a: int
    b: int
    c: int
    d: int

    @property
    def det(self):
        return self.a * self.d - self.b * self.c

    def __matmul__(self, other):
        a, b, c, d = self
        e, f, g, h = other
        return Unimodular2(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def inverse(self):
        a, b, c, d = self
        s = self.det
        return Unimodular2(s * d, -s * b, -s * c, s * a)

    @classmethod
    def checked(cls, a, b, c, d):
        u = cls(a, b, c, d)
        if u.det not in (1, -1):
            raise ValueError(f"{tuple(u)} is not unimodular")
        return u


IDENTITY = Unimodular2(1, 0, 0, 1)
SWAP = Unimodular2(0, 1, 1, 0)
FLIP = Unimodular2(1, 0, 0, -1)


def act(u, t):
    """Return ``u^T t u``. This is a right action: act(v, act(u, t)) == act(u @ v, t)."""
    a, b, c, d = u
    n, r, m = t
    return HalfIntegralMatrix2(
        n * a * a + r * a * c + m * c * c,
        2 * n * a * b + r * (a * d + b * c) + 2 * m * c * d,
        n * b * b + r * b * d + m * d * d,
    )


def is_reduced(t):
    n, r, m = t
    return 0 <= r <= n <= m


def reduce(t):
    """Gauss-reduce a positive semidefinite t.

    Returns ``(t_red, u)`` with ``t_red == act(u, t)`` and ``0 <= r <= n <= m``.
    Singular forms land on ``(0, 0, m')``.
    """
    t = HalfIntegralMatrix2(*t).require_psd()
    u = IDENTITY
    while True:
        n, r, m = t
        if n > m:
            u = u @ SWAP
            t = act(SWAP, t)
            continue
        if n == 0:
            # PSD forces r == 0 here
            break
        # translate r into (-n, n]
        s = (n - r) // (2 * n)
        if s:
            step = Unimodular2(1, s, 0, 1)
            u = u @ step
            t = act(step, t)
        if t.n > t.m:
            continue
        break
    if t.r < 0:
        u = u @ FLIP
        t = act(FLIP, t)
    return t, u


def min_represented(t):
    """Smallest value ``v^T t v`` over nonzero integer vectors v."""
    t_red, _ = reduce(t)
    # singular forms represent 0; reduced ones have their minimum at (1, 0)
    return Fraction(t_red.n)
