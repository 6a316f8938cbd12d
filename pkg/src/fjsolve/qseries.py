"""Truncated q-expansions with exact rational coefficients.

Exponents live on the grid ``q^(e/scale)``; coefficients are stored sparsely
keyed by the integer grid exponent ``e``. ``prec`` is measured in powers of q
and may be fractional (theta-decomposition components need that).
"""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .errors import UnsupportedWeight

_BERNOULLI = {4: Fraction(-1, 30), 6: Fraction(1, 42)}


@dataclass(frozen=True)
class QExpansion:
    weight: object
    prec: Fraction
    coeffs: dict = field(default_factory=dict)
    scale: int = 1

    def __post_init__(self):
        object.__setattr__(self, "prec", Fraction(self.prec))
        bound = self.grid_bound
        clean = {}
        for e, c in self.coeffs.items():
            if e < 0 or e > bound:
                raise ValueError(f"exponent {e}/{self.scale} outside [0, {self.prec}]")
            c = Fraction(c)
            if c:
                clean[int(e)] = c
        object.__setattr__(self, "coeffs", clean)

    @property
    def grid_bound(self):
        """Largest stored grid exponent, floor(prec * scale)."""
        return (self.prec * self.scale).numerator // (self.prec * self.scale).denominator

    def __getitem__(self, e):
        if e < 0 or e > self.grid_bound:
            raise IndexError(f"grid exponent {e} beyond truncation")
        return self.coeffs.get(e, Fraction(0))

    def coefficient(self, exponent):
        """Coefficient of q^exponent for a rational exponent."""
        g = Fraction(exponent) * self.scale
        if g.denominator != 1:
            return Fraction(0)
        return self[g.numerator]

    def list(self):
        return [self[e] for e in range(self.grid_bound + 1)]

    def is_zero(self):
        return not self.coeffs

    def rescale(self, scale):
        if scale % self.scale:
            raise ValueError(f"cannot move scale {self.scale} to {scale}")
        f = scale // self.scale
        return QExpansion(self.weight, self.prec, {e * f: c for e, c in self.coeffs.items()}, scale)

    def truncate(self, prec):
        prec = Fraction(prec)
        if prec > self.prec:
            raise ValueError("truncate cannot extend precision")
        bound = prec * self.scale
        return QExpansion(self.weight, prec, {e: c for e, c in self.coeffs.items() if e <= bound}, self.scale)

    def __add__(self, other):
        s = lcm(self.scale, other.scale)
        a, b = self.rescale(s), other.rescale(s)
        prec = min(a.prec, b.prec)
        out = {}
        for src in (a.coeffs, b.coeffs):
            for e, c in src.items():
                if e <= prec * s:
                    out[e] = out.get(e, 0) + c
        return QExpansion(self.weight, prec, out, s)

    def __neg__(self):
        return self.scaled(-1)

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, c):
        c = Fraction(c)
        return QExpansion(self.weight, self.prec, {e: c * v for e, v in self.coeffs.items()}, self.scale)

    def __mul__(self, other):
        if isinstance(other, QExpansion):
            return series_mul(self, other)
        return self.scaled(other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, QExpansion):
            return NotImplemented
        return (self.prec == other.prec and self.scale == other.scale
                and self.coeffs == other.coeffs and self.weight == other.weight)

    def __hash__(self):
        return hash((self.prec, self.scale, tuple(sorted(self.coeffs.items()))))

    def __repr__(self):
        terms = " + ".join(f"({c})*q^({Fraction(e, self.scale)})" for e, c in sorted(self.coeffs.items())[:6])
        return f"QExpansion(weight={self.weight}, {terms or '0'} + O(q^{self.prec}))"


def constant(c, prec, weight=0):
    return QExpansion(weight, prec, {0: c})


def series_mul(f, g):
    """Truncated Cauchy product; precision is the smaller of the two."""
    s = lcm(f.scale, g.scale)
    f, g = f.rescale(s), g.rescale(s)
    prec = min(f.prec, g.prec)
    bound = (prec * s).numerator // (prec * s).denominator
    out = {}
    for e1, c1 in f.coeffs.items():
        if e1 > bound:
            continue
        for e2, c2 in g.coeffs.items():
            e = e1 + e2
            if e <= bound:
                out[e] = out.get(e, 0) + c1 * c2
    return QExpansion(f.weight + g.weight, prec, out, s)


def power(f, k, prec=None):
    result = constant(1, f.prec if prec is None else prec)
    for _ in range(k):
        result = series_mul(result, f)
    return result


def sigma(n, k):
    return sum(d ** k for d in range(1, n + 1) if n % d == 0)


@lru_cache(maxsize=None)
def eisenstein(k, N):
    """Normalized Eisenstein series E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n for k in {4, 6}."""
    if k not in _BERNOULLI:
        raise UnsupportedWeight(f"Eisenstein series only for k in (4, 6), got {k}")
    factor = -Fraction(2 * k) / _BERNOULLI[k]
    coeffs = {0: Fraction(1)}
    for n in range(1, N + 1):
        coeffs[n] = factor * sigma(n, k - 1)
    return QExpansion(k, N, coeffs)


@lru_cache(maxsize=None)
def delta(N):
    """q * prod (1 - q^n)^24, truncated at q^N."""
    # prod (1 - q^n)^24 up to q^(N-1), by repeated multiplication with (1 - q^n)
    poly = [0] * N
    if N:
        poly[0] = 1
    for n in range(1, N):
        for _ in range(24):
            for e in range(N - 1, n - 1, -1):
                poly[e] -= poly[e - n]
    coeffs = {e + 1: Fraction(c) for e, c in enumerate(poly)}
    return QExpansion(12, N, coeffs)


def mk_exponents(k):
    """Exponents (a, b, c) of the monomial basis E4^a E6^b Delta^c of M_k, ascending in c."""
    if k < 0 or k % 2:
        return []
    out = []
    for c in range(k // 12 + 1):
        w = k - 12 * c
        if w == 2:
            continue
        b = 1 if w % 4 else 0
        out.append(((w - 6 * b) // 4, b, c))
    return out


@lru_cache(maxsize=None)
def monomial(a, b, c, N):
    f = constant(1, N)
    for g, e in ((eisenstein(4, N), a), (eisenstein(6, N), b), (delta(N), c)):
        for _ in range(e):
            f = series_mul(f, g)
    return f


def mk_basis(k, N):
    """Basis of M_k(SL2(Z)) by the monomials E4^a E6^b Delta^c with b in {0, 1}."""
    return [monomial(a, b, c, N) for a, b, c in mk_exponents(k)]
