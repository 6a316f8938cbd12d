"""Symmetric formal Fourier-Jacobi polynomials of genus 2 and cogenus 1.

A polynomial ``f = sum_{m <= B} phi_m(tau_1, z) e(m tau_2)`` has coefficients
``c(f; t) = c(phi_m; n, r)`` for ``t = (n, r, m)``. It is symmetric when
``c(f; t) = det(u)^k c(f; u^T t u)`` for every u in GL2(Z) keeping both
bottom-right entries within the precision.
"""
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import FLIP, SWAP, HalfIntegralMatrix2, act, min_represented
from .errors import ComponentMismatch, HolomorphyViolation, PrecisionExceeded
from .jacobi import JacobiExpansion, from_qexpansion, jacobi_mul
from .qseries import QExpansion

GENERATORS = (("swap", SWAP), ("flip", FLIP))


@dataclass(frozen=True)
class FourierJacobiPolynomial:
    weight: int
    precision: int
    components: tuple

    def __post_init__(self):
        comps = tuple(from_qexpansion(c) if isinstance(c, QExpansion) else c for c in self.components)
        object.__setattr__(self, "components", comps)
        B = self.precision
        if len(comps) != B + 1:
            raise ComponentMismatch(f"expected {B + 1} components, got {len(comps)}")
        N = comps[0].prec
        for m, phi in enumerate(comps):
            if phi.index != m:
                raise ComponentMismatch(f"component {m} has index {phi.index}")
            if phi.weight != self.weight and not phi.is_zero():
                raise ComponentMismatch(f"component {m} has weight {phi.weight}, expected {self.weight}")
            if phi.prec != N:
                raise ComponentMismatch(f"component {m} truncated at {phi.prec}, expected {N}")
            if phi.scale != 1:
                raise ComponentMismatch(f"component {m} has fractional q-exponents")
            bad = [k for k in phi.coeffs if phi.grid_discriminant(*k) < 0]
            if bad:
                raise HolomorphyViolation(f"component {m} is not holomorphic at {bad[0]}")
        if N < B:
            raise ComponentMismatch(f"truncation {N} must be at least the precision {B}")

    @property
    def truncation(self):
        return self.components[0].prec

    def __getitem__(self, m):
        return self.components[m]

    def is_zero(self):
        return all(phi.is_zero() for phi in self.components)

    def __add__(self, other):
        if other.precision != self.precision:
            raise ComponentMismatch("precision mismatch")
        return FourierJacobiPolynomial(self.weight, self.precision,
                                       tuple(a + b for a, b in zip(self.components, other.components)))

    def scaled(self, c):
        return FourierJacobiPolynomial(self.weight, self.precision, tuple(p.scaled(c) for p in self.components))

    def __sub__(self, other):
        return self + other.scaled(-1)

    def __mul__(self, other):
        if isinstance(other, FourierJacobiPolynomial):
            return fj_mul(self, other)
        return self.scaled(other)

    def __eq__(self, other):
        if not isinstance(other, FourierJacobiPolynomial):
            return NotImplemented
        return (self.weight == other.weight and self.precision == other.precision
                and all(a.coeffs == b.coeffs and a.prec == b.prec
                        for a, b in zip(self.components, other.components)))

    def __hash__(self):
        return hash((self.weight, self.precision, self.components))

    def __repr__(self):
        return (f"FourierJacobiPolynomial(weight={self.weight}, precision={self.precision}, "
                f"truncation={self.truncation})")


def construct(k, B, comps):
    """Validated polynomial from components phi_0, ..., phi_B."""
    comps = tuple(comps)
    for m, phi in enumerate(comps):
        if isinstance(phi, JacobiExpansion) and phi.weight != k and not phi.is_zero():
            raise ComponentMismatch(f"component {m} has weight {phi.weight}, expected {k}")
    return FourierJacobiPolynomial(k, B, comps)


def zero(k, B, N):
    return FourierJacobiPolynomial(k, B, tuple(JacobiExpansion(k, m, N, {}, True) for m in range(B + 1)))


def unit(B, N):
    comps = [JacobiExpansion(0, 0, N, {(0, 0): 1}, True)]
    comps += [JacobiExpansion(0, m, N, {}, True) for m in range(1, B + 1)]
    return FourierJacobiPolynomial(0, B, tuple(comps))


def canonical_indices(B, N):
    """All (m, n, r) with m <= B, n <= N, r a canonical residue and 4nm - r^2 >= 0, sorted."""
    out = []
    for m in range(B + 1):
        residues = [0] if m == 0 else range(-m + 1, m + 1)
        for n in range(N + 1):
            for r in residues:
                if 4 * n * m - r * r >= 0:
                    out.append((m, n, r))
    return out


def coefficient_vector(f, indices=None):
    if indices is None:
        indices = canonical_indices(f.precision, f.truncation)
    return [f.components[m].coeffs.get((n, r), Fraction(0)) for m, n, r in indices]


def coefficient(f, t):
    """c(f; t) for a positive semidefinite t = (n, r, m)."""
    t = HalfIntegralMatrix2(*t).require_psd()
    if t.m > f.precision:
        raise PrecisionExceeded(f"m = {t.m} exceeds precision {f.precision}")
    return f.components[t.m].coeff(t.n, t.r)


@dataclass
class SymmetryReport:
    witnesses: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.witnesses

    def __bool__(self):
        return self.passed


def symmetry_indices(B):
    for m in range(B + 1):
        for n in range(m + 1):
            rmax = math.isqrt(4 * n * m)
            for r in range(-rmax, rmax + 1):
                yield HalfIntegralMatrix2(n, r, m)


def check_symmetry(f):
    """Test c(f; t) = det(u)^k c(f; u^T t u) for u in {swap, flip} and all t with n <= m <= B.

    The lower unipotent generators of GL2(Z) preserve m and act on phi_m through
    its elliptic coefficient law, which the storage format guarantees.
    """
    report = SymmetryReport()
    for t in symmetry_indices(f.precision):
        lhs = coefficient(f, t)
        for _, u in GENERATORS:
            rhs = u.det ** f.weight * coefficient(f, act(u, t))
            if lhs != rhs:
                report.witnesses.append((t, u, lhs, rhs))
    return report


def fj_mul(f, g):
    B = min(f.precision, g.precision)
    N = min(f.truncation, g.truncation)
    comps = []
    for m in range(B + 1):
        total = JacobiExpansion(f.weight + g.weight, m, N, {}, True)
        for m1 in range(m + 1):
            total = total + jacobi_mul(f.components[m1], g.components[m - m1]).with_prec(N)
        comps.append(total)
    return FourierJacobiPolynomial(f.weight + g.weight, B, tuple(comps))


def phi_operator(f):
    """Formal Siegel Phi operator: the index-0 component as an elliptic q-expansion."""
    phi0 = f.components[0]
    return QExpansion(f.weight, phi0.prec, {e: c for (e, _), c in phi0.coeffs.items()})


def vanishing_order(f):
    """min of min_represented(t) over t with c(f; t) != 0; math.inf for f = 0."""
    best = math.inf
    for m, phi in enumerate(f.components):
        if m >= best:
            break
        for (n, r), c in phi.coeffs.items():
            best = min(best, min_represented((n, r, m)))
    return best
