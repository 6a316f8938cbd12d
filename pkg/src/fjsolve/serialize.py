"""Canonical JSON documents for expansions, polynomials and bases.

Rationals are written as "p/q" strings in lowest terms; entries are sorted and
never zero, so equal objects serialize to identical bytes.
"""
import json
import re
from fractions import Fraction
from math import gcd

from .errors import ComponentMismatch, FJSolveError, ParseError, ValidationError
from .formal import FourierJacobiPolynomial, check_symmetry, coefficient_vector
from .jacobi import JacobiExpansion, ThetaDecomposition
from .linalg import rank
from .qseries import QExpansion
from .solver import SymmetricBasis, echelonize

SCHEMA_VERSION = "1"
KINDS = ("qexpansion", "jacobi", "fjpolynomial", "basis")
_RATIONAL = re.compile(r"^(-?\d+)/(\d+)$")


def render_rational(x):
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s):
    if not isinstance(s, str):
        raise ParseError(f"expected a 'p/q' string, got {s!r}")
    match = _RATIONAL.match(s)
    if not match:
        raise ParseError(f"malformed rational {s!r}")
    p, q = int(match.group(1)), int(match.group(2))
    if q == 0:
        raise ValidationError("positive-denominator", s)
    if gcd(p, q) != 1:
        raise ValidationError("lowest-terms", s)
    return Fraction(p, q)


def _number(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else render_rational(x)


def _read_number(x):
    if isinstance(x, bool):
        raise ParseError(f"expected a number, got {x!r}")
    if isinstance(x, int):
        return x
    value = parse_rational(x)
    return int(value) if value.denominator == 1 else value


# -- to documents --------------------------------------------------------------

def _qexpansion_doc(f):
    return {
        "kind": "qexpansion",
        "weight": _number(f.weight),
        "truncation": _number(f.prec),
        "denominator_scale": f.scale,
        "entries": [{"n": e, "value": render_rational(c)} for e, c in sorted(f.coeffs.items())],
    }


def _jacobi_doc(phi):
    return {
        "kind": "jacobi",
        "weight": _number(phi.weight),
        "index": phi.index,
        "truncation": phi.prec,
        "denominator_scale": phi.scale,
        "holomorphic": phi.holomorphic,
        "entries": [{"n": e, "r": r, "value": render_rational(c)} for (e, r), c in sorted(phi.coeffs.items())],
    }


def _fj_entries(f):
    out = []
    for m, phi in enumerate(f.components):
        for (n, r), c in sorted(phi.coeffs.items()):
            out.append({"m": m, "n": n, "r": r, "value": render_rational(c)})
    return out


def _fj_doc(f):
    return {
        "kind": "fjpolynomial",
        "weight": f.weight,
        "precision": f.precision,
        "truncation": f.truncation,
        "entries": _fj_entries(f),
    }


def _basis_doc(b):
    return {
        "kind": "basis",
        "weight": b.weight,
        "precision": b.precision,
        "truncation": b.truncation,
        "elements": [{"entries": _fj_entries(f)} for f in b.elements],
    }


def _theta_doc(d):
    return {
        "kind": "thetadecomposition",
        "index": d.index,
        "components": [_qexpansion_doc(h) for h in d.components],
    }


def to_document(obj, metadata=None):
    if isinstance(obj, QExpansion):
        body = _qexpansion_doc(obj)
    elif isinstance(obj, JacobiExpansion):
        body = _jacobi_doc(obj)
    elif isinstance(obj, FourierJacobiPolynomial):
        body = _fj_doc(obj)
    elif isinstance(obj, SymmetricBasis):
        body = _basis_doc(obj)
    elif isinstance(obj, ThetaDecomposition):
        body = _theta_doc(obj)
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    doc = {"schema_version": SCHEMA_VERSION}
    doc.update(body)
    doc["metadata"] = {str(k): str(v) for k, v in sorted((metadata or {}).items())}
    return doc


def _format(value, indent):
    """JSON with one line per entry; lists of scalars-only objects stay compact."""
    pad, inner = " " * indent, " " * (indent + 1)
    if isinstance(value, dict):
        if not value:
            return "{}"
        if all(not isinstance(v, (dict, list)) for v in value.values()) and "value" in value:
            return json.dumps(value)
        items = [f"{inner}{json.dumps(k)}: {_format(v, indent + 1)}" for k, v in value.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(value, list):
        if not value:
            return "[]"
        items = [inner + _format(v, indent + 1) for v in value]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return json.dumps(value)


def serialize(obj, metadata=None):
    """Canonical text of obj: JSON with fixed key order and a trailing newline."""
    return _format(to_document(obj, metadata), 0) + "\n"


# -- from documents ------------------------------------------------------------

def _field(doc, name, kind=None):
    if name not in doc:
        raise ParseError(f"missing field {name!r}")
    value = doc[name]
    if kind is int and (not isinstance(value, int) or isinstance(value, bool)):
        raise ParseError(f"field {name!r} must be an integer")
    if kind is not None and kind is not int and not isinstance(value, kind):
        raise ParseError(f"field {name!r} must be of type {kind.__name__}")
    return value


def _entries(items, keys):
    if not isinstance(items, list):
        raise ParseError("entries must be a list")
    out = []
    last = None
    for item in items:
        if not isinstance(item, dict):
            raise ParseError("each entry must be an object")
        key = tuple(_field(item, k, int) for k in keys)
        value = parse_rational(_field(item, "value"))
        if not value:
            raise ValidationError("nonzero-entries", f"zero value at {key}")
        if last is not None and key <= last:
            raise ValidationError("entries-sorted", f"{key} follows {last}")
        last = key
        out.append((key, value))
    return out


def _build(constructor, *args):
    try:
        return constructor(*args)
    except ComponentMismatch as exc:
        raise ValidationError("components", str(exc)) from exc
    except FJSolveError as exc:
        raise ValidationError(type(exc).__name__, str(exc)) from exc
    except ValueError as exc:
        raise ValidationError("canonical-keys", str(exc)) from exc


def _load_qexpansion(doc):
    weight = _read_number(_field(doc, "weight"))
    prec = _read_number(_field(doc, "truncation"))
    scale = _field(doc, "denominator_scale", int)
    coeffs = {key[0]: v for key, v in _entries(_field(doc, "entries"), ("n",))}
    return _build(QExpansion, weight, prec, coeffs, scale)


def _load_jacobi(doc):
    weight = _read_number(_field(doc, "weight"))
    index = _field(doc, "index", int)
    prec = _field(doc, "truncation", int)
    scale = _field(doc, "denominator_scale", int)
    holomorphic = _field(doc, "holomorphic", bool)
    coeffs = dict(_entries(_field(doc, "entries"), ("n", "r")))
    return _build(JacobiExpansion, weight, index, prec, coeffs, holomorphic, scale)


def _load_fj(weight, B, N, items):
    per_m = [dict() for _ in range(B + 1)]
    for (m, n, r), v in _entries(items, ("m", "n", "r")):
        if not 0 <= m <= B:
            raise ValidationError("canonical-keys", f"m = {m} outside precision {B}")
        per_m[m][(n, r)] = v
    comps = tuple(_build(JacobiExpansion, weight, m, N, per_m[m], True) for m in range(B + 1))
    return _build(FourierJacobiPolynomial, weight, B, comps)


def _load_basis(doc, symmetry):
    weight = _field(doc, "weight", int)
    B = _field(doc, "precision", int)
    N = _field(doc, "truncation", int)
    elements = _field(doc, "elements", list)
    polys = []
    for element in elements:
        if not isinstance(element, dict):
            raise ParseError("each basis element must be an object")
        polys.append(_load_fj(weight, B, N, _field(element, "entries")))
    if polys:
        if symmetry:
            for i, f in enumerate(polys):
                if not check_symmetry(f).passed:
                    raise ValidationError("symmetric", f"element {i} violates the symmetry condition")
        vectors = [coefficient_vector(f) for f in polys]
        if rank(vectors, len(vectors[0])) != len(polys):
            raise ValidationError("independent", "basis elements are linearly dependent")
        if symmetry and echelonize(weight, B, N, polys) != polys:
            raise ValidationError("echelonized", "basis is not in reduced echelon form")
    return SymmetricBasis(weight, B, N, tuple(polys))


def deserialize(text, with_metadata=False, check_symmetry=True):
    """Parse and validate a document; returns the object (and its metadata if asked).

    ``check_symmetry=False`` loads bases without re-running the symmetry check so
    that a damaged file can still be inspected.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object")
    version = _field(doc, "schema_version", str)
    if version != SCHEMA_VERSION:
        raise ValidationError("schema_version", f"unsupported version {version!r}")
    kind = _field(doc, "kind", str)
    if kind == "qexpansion":
        obj = _load_qexpansion(doc)
    elif kind == "jacobi":
        obj = _load_jacobi(doc)
    elif kind == "fjpolynomial":
        obj = _load_fj(_field(doc, "weight", int), _field(doc, "precision", int),
                       _field(doc, "truncation", int), _field(doc, "entries"))
    elif kind == "basis":
        obj = _load_basis(doc, check_symmetry)
    else:
        raise ParseError(f"unknown kind {kind!r}")
    metadata = doc.get("metadata", {})
    if not isinstance(metadata, dict) or not all(isinstance(v, str) for v in metadata.values()):
        raise ParseError("metadata must map strings to strings")
    return (obj, metadata) if with_metadata else obj
