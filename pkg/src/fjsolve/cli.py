"""Command-line entry point: ``fjsolve <subcommand> ...``.

Exit status is 0 on success, 1 when a verification fails, 2 on usage or input errors.
"""
import argparse
import math
import sys
from fractions import Fraction

from . import bounds, formal, jacobi, solver
from .arith import reduce
from .errors import FJSolveError
from .qseries import QExpansion, series_mul
from .serialize import deserialize, render_rational, serialize


class UsageError(Exception):
    pass


def _read(path, check_symmetry=True):
    with open(path) as fh:
        return deserialize(fh.read(), check_symmetry=check_symmetry)


def _polynomial(obj, element):
    if isinstance(obj, solver.SymmetricBasis):
        if not 0 <= element < len(obj):
            raise UsageError(f"basis has {len(obj)} elements, no element {element}")
        return obj[element]
    if isinstance(obj, formal.FourierJacobiPolynomial):
        return obj
    raise UsageError("expected an fjpolynomial or basis document")


def _plain(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _decimal_floor(x, digits=12):
    scaled = math.floor(x * 10 ** digits)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10 ** digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


def cmd_basis(args, out, err):
    B = solver.default_precision(args.weight) if args.precision is None else args.precision
    N = solver.default_truncation(B) if args.truncation is None else args.truncation
    basis = solver.symmetric_basis(args.weight, B, N)
    meta = {"command": f"basis --weight {args.weight} --precision {B} --truncation {N}"}
    out.write(serialize(basis, meta))
    return 0


def cmd_dim_check(args, out, err):
    table = solver.load_dim_table(args.dim_table)
    result = solver.dim_check(args.weight, table)
    verdict = "AGREE" if result.agree else "DISAGREE"
    out.write(f"weight {args.weight}: computed {result.computed}, reference {result.reference}, {verdict}\n")
    return 0 if result.agree else 1


def cmd_verify_symmetry(args, out, err):
    obj = _read(args.file, check_symmetry=False)
    if isinstance(obj, solver.SymmetricBasis):
        polys = list(obj)
    else:
        polys = [_polynomial(obj, 0)]
    failed = False
    for i, f in enumerate(polys):
        report = formal.check_symmetry(f)
        for t, u, lhs, rhs in report.witnesses:
            failed = True
            err.write(f"element {i}: t = {tuple(t)}, u = {tuple(u)}, "
                      f"c(t) = {render_rational(lhs)}, det(u)^k c(u^T t u) = {render_rational(rhs)}\n")
    out.write("FAILED\n" if failed else "PASSED\n")
    return 1 if failed else 0


def cmd_phi(args, out, err):
    f = _polynomial(_read(args.file), args.element)
    out.write(serialize(formal.phi_operator(f)))
    return 0


def cmd_theta_decompose(args, out, err):
    phi = _read(args.file)
    if not isinstance(phi, jacobi.JacobiExpansion):
        raise UsageError("expected a jacobi document")
    out.write(serialize(jacobi.theta_decompose(phi)))
    return 0


def cmd_multiply(args, out, err):
    a, b = _read(args.file1), _read(args.file2)
    if isinstance(a, QExpansion) and isinstance(b, QExpansion):
        product = series_mul(a, b)
    elif isinstance(a, jacobi.JacobiExpansion) and isinstance(b, jacobi.JacobiExpansion):
        product = jacobi.jacobi_mul(a, b)
    else:
        product = formal.fj_mul(_polynomial(a, args.element), _polynomial(b, args.element))
    out.write(serialize(product))
    return 0


def cmd_order(args, out, err):
    order = formal.vanishing_order(_polynomial(_read(args.file), args.element))
    out.write(("inf" if order == math.inf else _plain(order)) + "\n")
    return 0


def cmd_slope(args, out, err):
    if args.genus < 1:
        raise UsageError("genus must be positive")
    s = bounds.slope(args.genus)
    out.write(f"genus: {s.genus}\n")
    out.write(f"exact: {'unknown' if s.exact is None else s.exact}\n")
    out.write(f"lower_bound: {_decimal_floor(s.lower_bound)}\n")
    return 0


def cmd_reduce(args, out, err):
    t, u = reduce((args.n, args.r, args.m))
    out.write(f"reduced: {t.n} {t.r} {t.m}\n")
    out.write(f"u: {u.a} {u.b} {u.c} {u.d}\n")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="fjsolve", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("basis", help="basis of symmetric Fourier-Jacobi polynomials")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--precision", type=int)
    p.add_argument("--truncation", type=int)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("dim-check", help="compare the computed dimension with the reference table")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--dim-table", metavar="PATH")
    p.set_defaults(func=cmd_dim_check)

    p = sub.add_parser("verify-symmetry")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify_symmetry)

    for name, func in (("phi", cmd_phi), ("order", cmd_order)):
        p = sub.add_parser(name)
        p.add_argument("file")
        p.add_argument("--element", type=int, default=0)
        p.set_defaults(func=func)

    p = sub.add_parser("theta-decompose")
    p.add_argument("file")
    p.set_defaults(func=cmd_theta_decompose)

    p = sub.add_parser("multiply")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--element", type=int, default=0)
    p.set_defaults(func=cmd_multiply)

    p = sub.add_parser("slope")
    p.add_argument("--genus", type=int, required=True)
    p.set_defaults(func=cmd_slope)

    p = sub.add_parser("reduce")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_reduce)
    return parser


def main(argv=None, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        return args.func(args, out, err)
    except (UsageError, FJSolveError, OSError) as exc:
        err.write(f"fjsolve: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
