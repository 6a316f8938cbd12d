"""Slope bounds and the truncation precision they imply."""
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Optional

from mpmath import iv

# Known minimal slopes of scalar Siegel modular forms of genus 1..5.
EXACT_SLOPES = {
    1: Fraction(12),
    2: Fraction(10),
    3: Fraction(9),
    4: Fraction(8),
    5: Fraction(54, 7),
}


@dataclass(frozen=True)
class SlopeValue:
    genus: int
    exact: Optional[Fraction]
    lower_bound: Fraction

    @property
    def best(self):
        """The value used for bounds: exact when known, else the certified lower bound."""
        return self.exact if self.exact is not None else self.lower_bound


def _to_fraction(mpf_tuple):
    sign, man, exp, _ = mpf_tuple
    value = Fraction(int(man)) * (Fraction(2) ** exp)
    return -value if sign else value


def _gamma_two_plus_half(g):
    """Interval enclosure of Gamma(2 + g/2) from factorial closed forms."""
    if g % 2 == 0:
        return iv.mpf(factorial(1 + g // 2))
    j = (g + 3) // 2
    # Gamma(j + 1/2) = (2j)! / (4^j j!) * sqrt(pi)
    return iv.mpf(factorial(2 * j)) / iv.mpf(4 ** j * factorial(j)) * iv.sqrt(iv.pi)


def eichler_blichfeldt_interval(g, prec=128):
    """Enclosure of sqrt(3) pi^3 / 2 * Gamma(2 + g/2)^(-4/g) as a pair of Fractions."""
    if g < 1:
        raise ValueError("genus must be positive")
    old = iv.prec
    iv.prec = prec
    try:
        gamma = _gamma_two_plus_half(g)
        power = iv.exp(iv.log(gamma) * (iv.mpf(-4) / g))
        value = iv.sqrt(3) * iv.pi ** 3 / 2 * power
        lo, hi = value._mpi_
    finally:
        iv.prec = old
    return _to_fraction(lo), _to_fraction(hi)


def eichler_blichfeldt(g, prec=128):
    """Certified rational lower bound for the minimal slope in genus g."""
    return eichler_blichfeldt_interval(g, prec)[0]


def slope(g):
    if g < 1:
        raise ValueError("genus must be positive")
    return SlopeValue(g, EXACT_SLOPES.get(g), eichler_blichfeldt(g))


def truncation_precision(k, g):
    """Smallest B with J_{k,m}[m] = 0 for every m > B, i.e. floor(4k / (3 slope_g)).

    Jacobi forms of genus g, weight k, index m vanishing to order m are zero once
    m > 4k / (3 slope_g); a lower bound for the slope can only make B larger.
    """
    if k < 0:
        raise ValueError("weight must be nonnegative")
    x = Fraction(4 * k) / (3 * slope(g).best)
    return x.numerator // x.denominator
