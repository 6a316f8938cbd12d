"""Acceptance criteria, one test each; tolerances and time limits are pinned below.

Run alone with ``pytest tests/test_acceptance.py``; the terminal summary prints
one PASS/FAIL line per criterion.
"""
import io
import json
import math
import random
import time
from fractions import Fraction

import pytest

from fjsolve import linalg
from fjsolve.arith import Unimodular2, act, is_reduced, min_represented, reduce
from fjsolve.bounds import EXACT_SLOPES, eichler_blichfeldt_interval, truncation_precision
from fjsolve.cli import main
from fjsolve.formal import check_symmetry, coefficient, fj_mul, phi_operator, vanishing_order
from fjsolve.jacobi import jacobi_basis, theta_decompose, theta_recompose
from fjsolve.qseries import QExpansion, series_mul
from fjsolve.serialize import deserialize, serialize
from fjsolve.solver import default_precision, default_truncation, dim_check, load_dim_table, symmetric_basis

from .oracles import siegel_dim

SEED = 20261015
WEIGHTS = (0, 2, 4, 6, 8, 10, 12)
EXPECTED_DIMS = (1, 0, 1, 1, 1, 2, 3)
EB_G2_INTERVAL = (Fraction("6.70"), Fraction("6.71"))
CASES = 200

LIMIT_SLOPES = 1.0
LIMIT_EB = 1.0
LIMIT_DIM_CHECK = 300.0
LIMIT_STABILIZATION = 600.0
LIMIT_CLASSICAL = 60.0
LIMIT_PROPERTIES = 300.0
LIMIT_SERIALIZATION = 60.0


class Timer:
    def __init__(self, limit):
        self.limit = limit

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        if exc[0] is None:
            assert self.elapsed < self.limit, f"took {self.elapsed:.2f}s, limit {self.limit}s"


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.criterion(1, "slope table 12, 10, 9, 8, 54/7 from the CLI")
def test_criterion_1_slope_table():
    with Timer(LIMIT_SLOPES):
        got = []
        for g in range(1, 6):
            code, out, _ = cli("slope", "--genus", str(g))
            assert code == 0
            fields = dict(line.split(": ", 1) for line in out.splitlines())
            got.append(Fraction(fields["exact"]))
    assert got == [12, 10, 9, 8, Fraction(54, 7)]


@pytest.mark.criterion(2, "Eichler-Blichfeldt bound below exact slopes; genus 2 bound in [6.70, 6.71]")
def test_criterion_2_eichler_blichfeldt():
    with Timer(LIMIT_EB):
        intervals = {g: eichler_blichfeldt_interval(g) for g in range(1, 6)}
    for g, (lo, hi) in intervals.items():
        assert hi < EXACT_SLOPES[g]
    lo, hi = intervals[2]
    assert EB_G2_INTERVAL[0] <= lo and hi <= EB_G2_INTERVAL[1], (
        f"certified enclosure [{float(lo):.9f}, {float(hi):.9f}] of sqrt(3) pi^3 / 8 "
        f"lies outside [{float(EB_G2_INTERVAL[0])}, {float(EB_G2_INTERVAL[1])}]")


@pytest.mark.criterion(3, "dim-check for k = 0..12 agrees with the genus-2 dimension table")
def test_criterion_3_dim_check():
    table = load_dim_table()
    assert tuple(table[k] for k in WEIGHTS) == EXPECTED_DIMS
    assert tuple(siegel_dim(k) for k in WEIGHTS) == EXPECTED_DIMS
    with Timer(LIMIT_DIM_CHECK):
        results = []
        for k in WEIGHTS:
            B = truncation_precision(k, 1) + 2
            results.append(dim_check(k, table, B, max(B, 6)))
    assert tuple(r.computed for r in results) == EXPECTED_DIMS
    assert all(r.agree for r in results)


@pytest.mark.criterion(4, "dimensions stable from B to B + 1 for k = 0..12")
def test_criterion_4_stabilization():
    with Timer(LIMIT_STABILIZATION):
        for k in WEIGHTS:
            B = default_precision(k)
            assert len(symmetric_basis(k, B)) == len(symmetric_basis(k, B + 1))


def divisor_sum_e4(N):
    return [1] + [240 * sum(d ** 3 for d in range(1, n + 1) if n % d == 0) for n in range(1, N + 1)]


@pytest.mark.criterion(5, "weight 4 element is E4 / E_{4,1}; weight 10 has one element of order >= 1")
def test_criterion_5_classical_forms():
    with Timer(LIMIT_CLASSICAL):
        (F4,) = symmetric_basis(4)
        F4 = F4.scaled(1 / coefficient(F4, (0, 0, 0)))
        N = F4.truncation
        assert phi_operator(F4).list() == divisor_sum_e4(N)
        (E41,) = jacobi_basis(4, 1, N)
        assert E41.coeff(0, 0) == 1
        phi1 = F4[1]
        # with c(0,0,0) = 1 the index-1 coefficient is c(1,0,0) E_{4,1} = 240 E_{4,1}
        assert coefficient(F4, (1, 0, 0)) == 240
        assert phi1.coeff(0, 0) == 240
        assert phi1.scaled(Fraction(1, 240)) == E41
        basis10 = symmetric_basis(10)
        assert len(basis10) == 2
        assert sum(1 for f in basis10 if vanishing_order(f) >= 1) == 1


def random_combination(rng, elements):
    total = None
    for e in elements:
        term = e.scaled(Fraction(rng.randint(-5, 5), rng.randint(1, 3)))
        total = term if total is None else total + term
    return total


def random_psd(rng, bound=20):
    n, m = rng.randint(0, bound), rng.randint(0, bound)
    rmax = math.isqrt(4 * n * m)
    return (n, rng.randint(-rmax, rmax), m)


def random_unimodular(rng, bound=4):
    while True:
        a, b, c, d = (rng.randint(-bound, bound) for _ in range(4))
        if a * d - b * c in (1, -1):
            return Unimodular2(a, b, c, d)


@pytest.mark.criterion(6, "randomized property suites, >= 200 cases each")
def test_criterion_6_properties():
    rng = random.Random(SEED)
    counts = {}
    with Timer(LIMIT_PROPERTIES):
        # GL2(Z) action and reduction
        for _ in range(CASES):
            t, u1, u2 = random_psd(rng), random_unimodular(rng), random_unimodular(rng)
            assert act(u2, act(u1, t)) == act(u1 @ u2, t)
            red, w = reduce(t)
            assert is_reduced(red) and act(w, t) == red
            assert reduce(act(u1, t))[0] == red
            assert min_represented(act(u1, t)) == min_represented(t)
        counts["action"] = CASES

        # elliptic law and reflection on every constructed basis element
        N = 6
        elements = [phi for k in range(0, 14, 2) for m in range(1, 4) for phi in jacobi_basis(k, m, N)]
        cases = 0
        for phi in elements:
            for _ in range(max(1, CASES // len(elements) + 1)):
                n = rng.randint(0, N)
                m = phi.index
                r = rng.randint(-math.isqrt(4 * n * m), math.isqrt(4 * n * m))
                lam = rng.randint(-2, 2)
                c = phi.coeff(n, r)
                assert c == (-1) ** phi.weight * phi.coeff(n, -r)
                n2 = n + lam * r + m * lam * lam
                if n2 <= N:
                    assert phi.coeff(n2, r + 2 * m * lam) == c
                cases += 1
        counts["elliptic"] = cases

        # theta decomposition round trip on random combinations
        spaces = [(k, m) for k in range(4, 16, 2) for m in range(1, 4) if jacobi_basis(k, m, N)]
        for _ in range(CASES):
            k, m = rng.choice(spaces)
            phi = random_combination(rng, jacobi_basis(k, m, N))
            assert theta_recompose(theta_decompose(phi), k, N) == phi
        counts["theta"] = CASES

        # symmetry closure, Phi multiplicativity and order additivity under fj_mul
        B = 2
        bases = {k: symmetric_basis(k, B) for k in (4, 6, 8, 10, 12)}
        for _ in range(CASES):
            k1, k2 = rng.choice(list(bases)), rng.choice(list(bases))
            f, g = random_combination(rng, bases[k1]), random_combination(rng, bases[k2])
            if f.is_zero() or g.is_zero():
                f, g = bases[k1][0], bases[k2][0]
            prod = fj_mul(f, g)
            assert check_symmetry(prod).passed
            assert phi_operator(prod) == series_mul(phi_operator(f), phi_operator(g))
            if vanishing_order(f) + vanishing_order(g) <= B:
                assert vanishing_order(prod) == vanishing_order(f) + vanishing_order(g)
        counts["fj_mul"] = CASES

        # nullspace brute-force check
        for _ in range(CASES):
            rows, cols = rng.randint(1, 6), rng.randint(1, 7)
            A = [[rng.randint(-4, 4) for _ in range(cols)] for _ in range(rows)]
            basis = linalg.nullspace(A, cols)
            assert linalg.rank(A, cols) + len(basis) == cols
            for v in basis:
                assert all(x == 0 for x in linalg.mat_vec(A, v))
        counts["nullspace"] = CASES
    assert all(v >= CASES for v in counts.values()), counts


@pytest.mark.criterion(7, "byte-exact round trip for k <= 12; perturbed coefficient detected with witness")
def test_criterion_7_serialization(tmp_path):
    with Timer(LIMIT_SERIALIZATION):
        outputs = {}
        for k in range(0, 13, 2):
            B = default_precision(k)
            for b in (B, B + 1):
                basis = symmetric_basis(k, b, default_truncation(b))
                text = serialize(basis, {"weight": k})
                loaded, meta = deserialize(text, with_metadata=True)
                assert serialize(loaded, meta) == text
                outputs[(k, b)] = text

        detected = 0
        for k in (4, 10, 12):
            text = outputs[(k, default_precision(k))]
            doc = json.loads(text)
            for e, element in enumerate(doc["elements"]):
                for i, entry in enumerate(element["entries"]):
                    if not entry["n"] < entry["m"]:
                        continue
                    bad = json.loads(text)
                    value = Fraction(entry["value"]) + 1
                    bad["elements"][e]["entries"][i]["value"] = f"{value.numerator}/{value.denominator}"
                    path = tmp_path / f"bad_{k}_{e}_{i}.json"
                    path.write_text(json.dumps(bad))
                    code, out, err = cli("verify-symmetry", str(path))
                    assert code == 1 and out == "FAILED\n"
                    poly = deserialize(path.read_text(), check_symmetry=False)[e]
                    witnesses = check_symmetry(poly).witnesses
                    assert witnesses and len(err.splitlines()) == len(witnesses)
                    t0 = (entry["n"], entry["r"], entry["m"])
                    for t, u, lhs, rhs in witnesses:
                        assert lhs == coefficient(poly, t) != rhs == u.det ** k * coefficient(poly, act(u, t))
                    assert any(tuple(t) == t0 or tuple(act(u, t)) == t0 for t, u, _, _ in witnesses)
                    detected += 1
        assert detected > 0
