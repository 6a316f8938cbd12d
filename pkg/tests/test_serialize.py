import json
from fractions import Fraction

import pytest

from fjsolve.errors import ParseError, ValidationError
from fjsolve.formal import check_symmetry, phi_operator, zero
from fjsolve.jacobi import JacobiExpansion, eisenstein_jacobi_41, jacobi_basis, theta_decompose
from fjsolve.qseries import QExpansion, delta, eisenstein
from fjsolve.serialize import deserialize, parse_rational, render_rational, serialize
from fjsolve.solver import SymmetricBasis, symmetric_basis


@pytest.fixture(scope="module")
def basis4_text():
    return serialize(symmetric_basis(4, 2))


def test_rationals():
    assert render_rational(Fraction(-3, 6)) == "-1/2"
    assert render_rational(5) == "5/1"
    assert parse_rational("-1/2") == Fraction(-1, 2)
    with pytest.raises(ValidationError) as info:
        parse_rational("2/4")
    assert info.value.invariant == "lowest-terms"
    with pytest.raises(ValidationError):
        parse_rational("1/0")
    for bad in ("1/-2", "0.5", "1", 3, "a/b"):
        with pytest.raises(ParseError):
            parse_rational(bad)


@pytest.mark.parametrize("k", range(0, 13, 2))
def test_solver_outputs_round_trip(k):
    for B in (2, 3):
        basis = symmetric_basis(k, B)
        text = serialize(basis, {"command": f"basis --weight {k}"})
        loaded, meta = deserialize(text, with_metadata=True)
        assert loaded == basis
        assert serialize(loaded, meta) == text
        for f in basis:
            assert serialize(deserialize(serialize(f))) == serialize(f)
            assert serialize(deserialize(serialize(phi_operator(f)))) == serialize(phi_operator(f))


def test_expansions_round_trip():
    objects = [eisenstein(4, 6), delta(8), QExpansion(Fraction(1, 2), Fraction(23, 4), {3: Fraction(-2, 3)}, 4),
               eisenstein_jacobi_41(6)] + jacobi_basis(12, 3, 6)
    for obj in objects:
        text = serialize(obj)
        assert deserialize(text) == obj
        assert serialize(deserialize(text)) == text


def test_zero_form_has_empty_entries():
    doc = json.loads(serialize(zero(4, 1, 6)))
    assert doc["entries"] == []
    assert json.loads(serialize(JacobiExpansion(4, 1, 6, {}, True)))["entries"] == []


def test_basis_document_reloads_symmetric(basis4_text):
    loaded = deserialize(basis4_text)
    assert isinstance(loaded, SymmetricBasis)
    assert all(check_symmetry(f).passed for f in loaded)


def test_theta_decomposition_is_output_only():
    doc = json.loads(serialize(theta_decompose(eisenstein_jacobi_41(4))))
    assert doc["kind"] == "thetadecomposition" and len(doc["components"]) == 2
    with pytest.raises(ParseError):
        deserialize(json.dumps(doc))


def edit(text, fn):
    doc = json.loads(text)
    fn(doc)
    return json.dumps(doc)


def expect_invalid(text, invariant):
    with pytest.raises(ValidationError) as info:
        deserialize(text)
    assert info.value.invariant == invariant


def test_value_not_in_lowest_terms(basis4_text):
    def fn(doc):
        doc["elements"][0]["entries"][1]["value"] = "480/2"
    expect_invalid(edit(basis4_text, fn), "lowest-terms")


def test_unsorted_entries(basis4_text):
    def fn(doc):
        entries = doc["elements"][0]["entries"]
        entries[0], entries[1] = entries[1], entries[0]
    expect_invalid(edit(basis4_text, fn), "entries-sorted")


def test_zero_entry(basis4_text):
    def fn(doc):
        doc["elements"][0]["entries"][1]["value"] = "0/1"
    expect_invalid(edit(basis4_text, fn), "nonzero-entries")


def test_schema_version(basis4_text):
    expect_invalid(edit(basis4_text, lambda doc: doc.update(schema_version="2")), "schema_version")


def test_perturbed_basis_fails_symmetry(basis4_text):
    def fn(doc):
        doc["elements"][0]["entries"][8]["value"] = "30241/1"
    text = edit(basis4_text, fn)
    expect_invalid(text, "symmetric")
    loaded = deserialize(text, check_symmetry=False)
    assert not check_symmetry(loaded[0]).passed


def test_dependent_basis():
    text = serialize(symmetric_basis(4, 2))
    expect_invalid(edit(text, lambda doc: doc["elements"].append(doc["elements"][0])), "independent")


def test_non_echelon_basis():
    b = symmetric_basis(10, 2)
    mixed = SymmetricBasis(10, 2, b.truncation, (b[0] + b[1], b[1]))
    expect_invalid(serialize(mixed), "echelonized")


def test_non_canonical_jacobi_key():
    text = serialize(eisenstein_jacobi_41(6))
    def fn(doc):
        doc["entries"].append({"n": 7, "r": 3, "value": "1/1"})
    with pytest.raises(ValidationError):
        deserialize(edit(text, fn))


def test_malformed_documents():
    for text in ("not json", "[]", json.dumps({"schema_version": "1"}),
                 json.dumps({"schema_version": "1", "kind": "matrix"})):
        with pytest.raises(ParseError):
            deserialize(text)
    text = serialize(eisenstein(4, 3))
    with pytest.raises(ParseError):
        deserialize(edit(text, lambda doc: doc.pop("truncation")))
    with pytest.raises(ParseError):
        deserialize(edit(text, lambda doc: doc["entries"][0].update(n="0")))


def test_serialization_is_deterministic():
    assert serialize(symmetric_basis(12, 3)) == serialize(symmetric_basis(12, 3))
    assert serialize(eisenstein(4, 4)).endswith("}\n")
