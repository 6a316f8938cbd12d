"""Genus-1 Jacobi forms of integral weight and index.

Coefficients ``c(n, r)`` of an index-m form depend only on the discriminant
``4nm - r^2`` and on ``r mod 2m``. A :class:`JacobiExpansion` therefore stores
one representative per class, the pair ``(e, rho)`` with ``rho`` in ``(-m, m]``
and ``n = e / scale``; any other ``(n, r)`` is looked up through that law.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import NamedTuple

from . import linalg
from .errors import (CoefficientLawViolation, GradingViolation, HolomorphyViolation,
                     InsufficientPrecision, PrecisionExceeded)
from .qseries import QExpansion, eisenstein, mk_exponents, monomial


def _reduce_r(r, m):
    """Representative of r mod 2m in (-m, m] and the shift lambda with r = rho + 2 m lambda."""
    rho = (r + m - 1) % (2 * m) - (m - 1)
    return rho, (r - rho) // (2 * m)


@dataclass(frozen=True)
class JacobiExpansion:
    weight: object
    index: int
    prec: int
    coeffs: dict = field(default_factory=dict)
    holomorphic: bool = False
    scale: int = 1

    def __post_init__(self):
        m, bound = self.index, self.prec * self.scale
        clean = {}
        for (e, rho), c in self.coeffs.items():
            c = Fraction(c)
            if not c:
                continue
            if m == 0 and rho != 0 or m > 0 and not -m < rho <= m:
                raise ValueError(f"key {(e, rho)} is not a canonical index-{m} representative")
            if not 0 <= e <= bound:
                raise ValueError(f"key {(e, rho)} outside truncation {self.prec}")
            if self.holomorphic and self.grid_discriminant(e, rho) < 0:
                raise HolomorphyViolation(f"nonzero coefficient at {(e, rho)} with negative discriminant")
            clean[(int(e), int(rho))] = c
        object.__setattr__(self, "coeffs", clean)

    def grid_discriminant(self, e, r):
        """scale * (4 n m - r^2) for n = e / scale."""
        return 4 * self.index * e - self.scale * r * r

    def normalize(self, e, r):
        """Canonical key of the class containing the grid pair (e, r)."""
        m = self.index
        if m == 0:
            return e, r
        rho, lam = _reduce_r(r, m)
        return e - self.scale * (lam * rho + m * lam * lam), rho

    def coeff(self, n, r):
        """c(n, r) for rational n; raises PrecisionExceeded when the class lies beyond truncation."""
        g = Fraction(n) * self.scale
        if g.denominator != 1:
            return Fraction(0)
        if self.index == 0 and r != 0:
            return Fraction(0)
        e, rho = self.normalize(g.numerator, r)
        if e < 0:
            return Fraction(0)
        if e > self.prec * self.scale:
            raise PrecisionExceeded(f"c({n}, {r}) needs n = {Fraction(e, self.scale)} > {self.prec}")
        return self.coeffs.get((e, rho), Fraction(0))

    def raw_items(self, bound=None):
        """Yield every nonzero (e, r, c) with grid exponent e <= bound."""
        if bound is None:
            bound = self.prec * self.scale
        m, s = self.index, self.scale
        for (e, rho), c in self.coeffs.items():
            if m == 0:
                if e <= bound:
                    yield e, rho, c
                continue
            for direction in (1, -1):
                lam = 0 if direction == 1 else -1
                while True:
                    ee = e + s * (lam * rho + m * lam * lam)
                    if ee > bound:
                        break
                    yield ee, rho + 2 * m * lam, c
                    lam += direction

    def keys(self):
        return sorted(self.coeffs, key=lambda k: (self.grid_discriminant(*k), k[1]))

    def is_zero(self):
        return not self.coeffs

    def with_prec(self, prec):
        if prec > self.prec:
            raise PrecisionExceeded("cannot extend truncation")
        bound = prec * self.scale
        return JacobiExpansion(self.weight, self.index, prec,
                               {k: c for k, c in self.coeffs.items() if k[0] <= bound},
                               self.holomorphic, self.scale)

    def __add__(self, other):
        _check_compatible(self, other)
        prec = min(self.prec, other.prec)
        out = dict(self.with_prec(prec).coeffs)
        for k, c in other.with_prec(prec).coeffs.items():
            out[k] = out.get(k, 0) + c
        return JacobiExpansion(self.weight, self.index, prec, out,
                               self.holomorphic and other.holomorphic, self.scale)

    def scaled(self, c):
        c = Fraction(c)
        return JacobiExpansion(self.weight, self.index, self.prec,
                               {k: c * v for k, v in self.coeffs.items()}, self.holomorphic, self.scale)

    def __neg__(self):
        return self.scaled(-1)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, JacobiExpansion):
            return jacobi_mul(self, other)
        if isinstance(other, QExpansion):
            return jacobi_mul(self, from_qexpansion(other))
        return self.scaled(other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, JacobiExpansion):
            return NotImplemented
        return (self.weight == other.weight and self.index == other.index and self.prec == other.prec
                and self.scale == other.scale and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.index, self.prec, tuple(sorted(self.coeffs.items()))))

    def __repr__(self):
        return (f"JacobiExpansion(weight={self.weight}, index={self.index}, prec={self.prec}, "
                f"{len(self.coeffs)} classes)")

    @classmethod
    def from_raw(cls, weight, index, prec, raw, holomorphic=False, scale=1):
        """Build from a table {(e, r): c} covering every grid exponent e <= prec * scale.

        The table must obey the elliptic coefficient law; absent keys count as 0.
        """
        probe = cls(weight, index, prec, {}, False, scale)
        bound = prec * scale
        canon = {}
        for (e, r), c in raw.items():
            c = Fraction(c)
            if not c or e > bound:
                continue
            if index == 0 and r != 0:
                raise CoefficientLawViolation(f"index 0 form has r = {r} at e = {e}")
            key = probe.normalize(e, r)
            if key[0] < 0:
                raise CoefficientLawViolation(f"({e}, {r}) lies in a class with negative n")
            if canon.setdefault(key, c) != c:
                raise CoefficientLawViolation(
                    f"class of ({e}, {r}) carries both {canon[key]} and {c}")
        probe = cls(weight, index, prec, canon, False, scale)
        for e, r, c in probe.raw_items(bound):
            if Fraction(raw.get((e, r), 0)) != c:
                raise CoefficientLawViolation(
                    f"c at ({e}, {r}) is {raw.get((e, r), 0)} but its class carries {c}")
        return cls(weight, index, prec, canon, holomorphic, scale)


def _check_compatible(f, g):
    if f.index != g.index or f.scale != g.scale:
        raise ValueError("index/scale mismatch")


def from_qexpansion(f):
    """Index-0 Jacobi expansion constant in z."""
    if f.prec.denominator != 1:
        raise ValueError("index-0 Jacobi forms need an integral truncation")
    return JacobiExpansion(f.weight, 0, int(f.prec), {(e, 0): c for e, c in f.coeffs.items()},
                           True, f.scale)


def jacobi_mul(f, g):
    """Product of Jacobi expansions; weights and indices add, truncation is the smaller one."""
    s = lcm(f.scale, g.scale)
    prec = min(f.prec, g.prec)
    bound = prec * s
    M = f.index + g.index
    lo, hi = (-M, M) if M else (0, 0)
    fs, gs = s // f.scale, s // g.scale
    A = [(e * fs, r, c) for e, r, c in f.raw_items(bound // fs)]
    B = [(e * gs, r, c) for e, r, c in g.raw_items(bound // gs)]
    out = {}
    for e1, r1, c1 in A:
        for e2, r2, c2 in B:
            e = e1 + e2
            if e > bound:
                continue
            r = r1 + r2
            if M and not lo < r <= hi or not M and r != 0:
                continue
            out[(e, r)] = out.get((e, r), 0) + c1 * c2
    return JacobiExpansion(f.weight + g.weight, M, prec, out, f.holomorphic and g.holomorphic, s)


def jacobi_power(f, k):
    result = JacobiExpansion(0, 0, f.prec, {(0, 0): 1}, True, f.scale)
    for _ in range(k):
        result = jacobi_mul(result, f)
    return result


# -- Laurent series in (q^(1/s), zeta), as dicts {(e, r): coefficient} ------------

def _times_binomial(series, coef, de, dr, bound):
    """series * (1 + coef q^de zeta^dr), truncated at e <= bound."""
    out = dict(series)
    for (e, r), c in series.items():
        if e + de <= bound:
            k = (e + de, r + dr)
            out[k] = out.get(k, 0) + coef * c
    return out


def _divide_q_binomial(series, coef, de, bound):
    """series / (1 + coef q^de), truncated at e <= bound."""
    by_r = {}
    for (e, r), c in series.items():
        by_r.setdefault(r, [0] * (bound + 1))[e] += c
    out = {}
    for r, column in by_r.items():
        for e in range(de, bound + 1):
            column[e] -= coef * column[e - de]
        for e, c in enumerate(column):
            if c:
                out[(e, r)] = c
    return out


@lru_cache(maxsize=None)
def phi_m2_1(N):
    """Weak Jacobi form of weight -2, index 1: theta_1(tau, z)^2 / eta(tau)^6 (up to sign)."""
    series = {(0, 1): Fraction(1), (0, 0): Fraction(-2), (0, -1): Fraction(1)}
    for n in range(1, N + 1):
        for _ in range(2):
            series = _times_binomial(series, -1, n, 1, N)
            series = _times_binomial(series, -1, n, -1, N)
        for _ in range(4):
            series = _divide_q_binomial(series, -1, n, N)
    return JacobiExpansion.from_raw(-2, 1, N, series)


@lru_cache(maxsize=None)
def phi_0_1(N):
    """Weak Jacobi form of weight 0, index 1: 4 * sum over the even thetas of (theta_i(z)/theta_i(0))^2."""
    bound = 2 * N  # grid q^(1/2)
    total = {}
    # theta_2 ratio squared: (zeta + 2 + 1/zeta)/4 * prod (1+q^n zeta)^2 (1+q^n/zeta)^2 / (1+q^n)^4
    s2 = {(0, 1): Fraction(1, 4), (0, 0): Fraction(1, 2), (0, -1): Fraction(1, 4)}
    for n in range(1, N + 1):
        for _ in range(2):
            s2 = _times_binomial(s2, 1, 2 * n, 1, bound)
            s2 = _times_binomial(s2, 1, 2 * n, -1, bound)
        for _ in range(4):
            s2 = _divide_q_binomial(s2, 1, 2 * n, bound)
    parts = [s2]
    # theta_3 and theta_4: half-integral q-powers, sign +1 and -1
    for sign in (1, -1):
        s = {(0, 0): Fraction(1)}
        for n in range(1, N + 1):
            de = 2 * n - 1
            for _ in range(2):
                s = _times_binomial(s, sign, de, 1, bound)
                s = _times_binomial(s, sign, de, -1, bound)
            for _ in range(4):
                s = _divide_q_binomial(s, sign, de, bound)
        parts.append(s)
    for part in parts:
        for k, c in part.items():
            total[k] = total.get(k, 0) + 4 * c
    odd = [k for k, c in total.items() if c and k[0] % 2]
    assert not odd, "half-integral q-powers failed to cancel"
    raw = {(e // 2, r): c for (e, r), c in total.items() if c}
    return JacobiExpansion.from_raw(0, 1, N, raw)


def weak_generators(N):
    """(phi_{-2,1}, phi_{0,1}) truncated at q^N."""
    return phi_m2_1(N), phi_0_1(N)


@lru_cache(maxsize=None)
def _generator_power(i, j, N):
    return jacobi_mul(jacobi_power(phi_m2_1(N), i), jacobi_power(phi_0_1(N), j))


@lru_cache(maxsize=None)
def weak_monomial(a, b, c, i, j, N):
    """E4^a E6^b Delta^c phi_{-2,1}^i phi_{0,1}^j."""
    return jacobi_mul(from_qexpansion(monomial(a, b, c, N)), _generator_power(i, j, N))


def weak_monomials(k, m, N):
    """Exponent tuples and expansions spanning the weak Jacobi forms of weight k, index m."""
    out = []
    for i in range(m + 1):
        for a, b, c in mk_exponents(k + 2 * i):
            exps = (a, b, c, i, m - i)
            out.append((exps, weak_monomial(*exps, N)))
    return out


@lru_cache(maxsize=None)
def _jacobi_basis(k, m, N):
    if k % 2:
        return ()
    monos = [f for _, f in weak_monomials(k, m, N)]
    if not monos:
        return ()
    probe = JacobiExpansion(k, m, N)
    keys = sorted({key for f in monos for key in f.coeffs},
                  key=lambda key: (probe.grid_discriminant(*key), key[1]))
    W = [[f.coeffs.get(key, Fraction(0)) for key in keys] for f in monos]
    if linalg.rank(W, len(keys)) < len(monos):
        raise InsufficientPrecision(f"truncation {N} cannot separate weak forms of weight {k}, index {m}")
    negative = [j for j, key in enumerate(keys) if probe.grid_discriminant(*key) < 0]
    constraints = [[W[i][j] for i in range(len(monos))] for j in negative]
    combos = linalg.nullspace(constraints, len(monos))
    if not combos:
        return ()
    rows = [[sum(x[i] * W[i][j] for i in range(len(monos))) for j in range(len(keys))] for x in combos]
    R, _, _ = linalg.rref(rows)
    basis = []
    for row in R:
        coeffs = {key: c for key, c in zip(keys, row) if c}
        basis.append(JacobiExpansion(k, m, N, coeffs, holomorphic=True))
    return tuple(basis)


def jacobi_basis(k, m, N):
    """Echelonized basis of holomorphic Jacobi forms of weight k, index m (empty for odd k)."""
    if m == 0:
        return [from_qexpansion(f) for f in _index0_basis(k, N)]
    return list(_jacobi_basis(k, m, N))


def _index0_basis(k, N):
    if k % 2 or k < 0:
        return []
    rows = [monomial(*exps, N) for exps in mk_exponents(k)]
    R, _, _ = linalg.rref([f.list() for f in rows])
    return [QExpansion(k, N, dict(enumerate(row))) for row in R]


# -- theta series and theta decomposition --------------------------------------

class ThetaComponentIndex(NamedTuple):
    m: int
    mu: int


@dataclass(frozen=True)
class ThetaDecomposition:
    index: int
    components: tuple

    def __post_init__(self):
        if len(self.components) != 2 * self.index:
            raise ValueError(f"need {2 * self.index} components, got {len(self.components)}")


def theta_component(idx, N):
    """theta_{m,mu}(tau, z) = sum over r = mu mod 2m of q^(r^2/4m) zeta^r, on the q^(1/4m) grid."""
    m, mu = idx
    if not 0 <= mu < 2 * m:
        raise ValueError(f"mu must lie in [0, {2 * m})")
    rho, _ = _reduce_r(mu, m)
    s = 4 * m
    coeffs = {}
    if rho * rho <= s * N:
        coeffs[(rho * rho, rho)] = 1
    return JacobiExpansion(Fraction(1, 2), m, N, coeffs, holomorphic=True, scale=s)


def theta_decompose(phi):
    """Components h_mu (q^(1/4m) grid) with phi = sum_mu h_mu(tau) theta_{m,mu}(tau, z)."""
    m = phi.index
    if m < 1:
        raise ValueError("theta decomposition needs index >= 1")
    if phi.scale != 1:
        raise ValueError("expected an integral-exponent Jacobi expansion")
    if not phi.holomorphic and any(phi.grid_discriminant(*k) < 0 for k in phi.coeffs):
        raise HolomorphyViolation("theta decomposition needs a holomorphic form")
    s = 4 * m
    comps = []
    for mu in range(2 * m):
        rho, _ = _reduce_r(mu, m)
        # discriminants known for this class: D = 4 m n - rho^2 with n <= N
        prec = phi.prec - Fraction(rho * rho, s)
        coeffs = {}
        for (e, r), c in phi.coeffs.items():
            if r == rho:
                coeffs[phi.grid_discriminant(e, r)] = c
        comps.append(QExpansion(Fraction(phi.weight) - Fraction(1, 2), prec, coeffs, s))
    return ThetaDecomposition(m, tuple(comps))


def theta_recompose(d, k, N):
    """Inverse of theta_decompose: c(n, r) = coefficient of q^(D/4m) in h_(r mod 2m)."""
    m = d.index
    s = 4 * m
    coeffs = {}
    for mu, h in enumerate(d.components):
        h = h.rescale(s) if h.scale != s else h
        rho, _ = _reduce_r(mu, m)
        for D, c in h.coeffs.items():
            if (D + mu * mu) % s:
                raise GradingViolation(f"h_{mu} has support at q^({D}/{s}), off the class -mu^2 mod 4m")
        for n in range(N + 1):
            D = 4 * m * n - rho * rho
            if D < 0:
                continue
            if D > h.grid_bound:
                raise PrecisionExceeded(f"h_{mu} known only up to q^{h.prec}")
            c = h[D]
            if c:
                coeffs[(n, rho)] = c
    return JacobiExpansion(k, m, N, coeffs, holomorphic=True)


def eisenstein_jacobi_41(N):
    """E_{4,1} = (E4 phi_{0,1} - E6 phi_{-2,1}) / 12."""
    a = jacobi_mul(from_qexpansion(eisenstein(4, N)), phi_0_1(N))
    b = jacobi_mul(from_qexpansion(eisenstein(6, N)), phi_m2_1(N))
    return (a - b).scaled(Fraction(1, 12))
