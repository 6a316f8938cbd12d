"""Genus-2 Siegel modular forms as symmetric formal Fourier-Jacobi polynomials.

The unknowns are coordinates over bases of J_{k,m} for m = 0..B; each symmetry
relation ``c(f; t) = det(u)^k c(f; u^T t u)`` is one linear equation. The
solution space is FM_{k, <= B}.
"""
import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import NamedTuple

from . import linalg
from .arith import act
from .bounds import truncation_precision
from .errors import OddWeightUnsupported, TableRangeExceeded
from .formal import (GENERATORS, FourierJacobiPolynomial, canonical_indices, check_symmetry,
                     symmetry_indices)
from .jacobi import JacobiExpansion, jacobi_basis

DIM_TABLE_ENV = "FJSOLVE_DIM_TABLE"


def default_precision(k):
    return truncation_precision(k, 1) + 2


def default_truncation(B):
    return max(B, 6)


@dataclass
class ConstraintSystem:
    weight: int
    precision: int
    truncation: int
    bases: tuple
    unknowns: list = field(default_factory=list)
    rows: list = field(default_factory=list)
    provenance: list = field(default_factory=list)

    @property
    def ncols(self):
        return len(self.unknowns)


def build_constraints(k, B, N=None):
    if k % 2:
        raise OddWeightUnsupported(f"odd weight {k} is not supported")
    if k < 0:
        raise ValueError("weight must be nonnegative")
    N = default_truncation(B) if N is None else N
    if N < B:
        raise ValueError(f"truncation {N} must be at least the precision {B}")
    bases = tuple(tuple(jacobi_basis(k, m, N)) for m in range(B + 1))
    unknowns = [(m, j) for m in range(B + 1) for j in range(len(bases[m]))]
    column = {u: i for i, u in enumerate(unknowns)}
    system = ConstraintSystem(k, B, N, bases, unknowns)
    seen = set()
    for t in symmetry_indices(B):
        for name, u in GENERATORS:
            image = act(u, t)
            sign = u.det ** k
            row = [Fraction(0)] * len(unknowns)
            for j, phi in enumerate(bases[t.m]):
                row[column[(t.m, j)]] += phi.coeff(t.n, t.r)
            for j, phi in enumerate(bases[image.m]):
                row[column[(image.m, j)]] -= sign * phi.coeff(image.n, image.r)
            key = tuple(row)
            if not any(row) or key in seen:
                continue
            seen.add(key)
            system.rows.append(row)
            system.provenance.append((t, name))
    return system


def nullspace(system):
    """Exact basis of the solution space of a constraint system (coordinate vectors)."""
    return linalg.nullspace(system.rows, system.ncols)


def assemble(system, x):
    """FourierJacobiPolynomial with coordinates x over the system's Jacobi bases."""
    comps = []
    col = 0
    for m, basis in enumerate(system.bases):
        phi = JacobiExpansion(system.weight, m, system.truncation, {}, True)
        for b in basis:
            if x[col]:
                phi = phi + b.scaled(x[col])
            col += 1
        comps.append(phi)
    return FourierJacobiPolynomial(system.weight, system.precision, tuple(comps))


@dataclass(frozen=True)
class SymmetricBasis:
    weight: int
    precision: int
    truncation: int
    elements: tuple

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]


def echelonize(k, B, N, polys):
    """Reduced echelon form of polynomials with respect to their (m, n, r)-ordered coefficients."""
    indices = canonical_indices(B, N)
    rows = [[p.components[m].coeffs.get((n, r), Fraction(0)) for m, n, r in indices] for p in polys]
    R, _, _ = linalg.rref(rows)
    out = []
    for row in R:
        per_m = [dict() for _ in range(B + 1)]
        for (m, n, r), c in zip(indices, row):
            if c:
                per_m[m][(n, r)] = c
        comps = tuple(JacobiExpansion(k, m, N, per_m[m], True) for m in range(B + 1))
        out.append(FourierJacobiPolynomial(k, B, comps))
    return out


def symmetric_basis(k, B=None, N=None):
    """Echelonized basis of FM_{k, <= B} at truncation N; every element is checked for symmetry."""
    B = default_precision(k) if B is None else B
    N = default_truncation(B) if N is None else N
    system = build_constraints(k, B, N)
    polys = [assemble(system, x) for x in nullspace(system)]
    elements = echelonize(k, B, N, polys)
    for f in elements:
        report = check_symmetry(f)
        if not report.passed:
            raise AssertionError(f"solver produced a non-symmetric element: {report.witnesses[0]}")
    return SymmetricBasis(k, B, N, tuple(elements))


def load_dim_table(path=None):
    """Genus-2 even-weight dimensions {k: dim M_k}; path, then $FJSOLVE_DIM_TABLE, then the shipped table."""
    path = path or os.environ.get(DIM_TABLE_ENV)
    if path:
        with open(path) as fh:
            doc = json.load(fh)
    else:
        doc = json.loads(resources.files("fjsolve").joinpath("data/genus2_dims.json").read_text())
    return {int(k): int(v) for k, v in doc["dimensions"].items()}


class DimCheck(NamedTuple):
    computed: int
    reference: int
    agree: bool


def dim_check(k, table=None, B=None, N=None):
    if k % 2:
        raise OddWeightUnsupported(f"odd weight {k} is not supported")
    table = load_dim_table() if table is None else table
    if k not in table:
        raise TableRangeExceeded(f"weight {k} is outside the dimension table")
    computed = len(symmetric_basis(k, B, N))
    return DimCheck(computed, table[k], computed == table[k])
