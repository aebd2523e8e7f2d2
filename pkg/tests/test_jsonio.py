import json
from fractions import Fraction

import pytest

from g2kit import jsonio
from g2kit.forms import ExteriorForm
from g2kit.jsonio import JsonFormatError
from g2kit.scalars import ComplexRational

from conftest import rand_form


def test_form_round_trip_exact(rng):
    f = rand_form(rng, 6, 3, nterms=4, complex_coeffs=True)
    obj = jsonio.form_to_obj(f)
    assert jsonio.form_from_obj(json.loads(json.dumps(obj))) == f


def test_form_round_trip_float(rng):
    f = rand_form(rng, 5, 2, nterms=3).as_float()
    obj = jsonio.form_to_obj(f)
    back = jsonio.form_from_obj(json.loads(json.dumps(obj)))
    assert back.mode == "float"
    assert back == f


def test_exact_document_rejects_numbers():
    doc = {"dim": 3, "degree": 1, "terms": [{"idx": [1], "re": 0.5, "im": 0}]}
    with pytest.raises(JsonFormatError):
        jsonio.form_from_obj(doc)


def test_float_document_rejects_strings():
    doc = {
        "dim": 3,
        "degree": 1,
        "mode": "float",
        "terms": [{"idx": [1], "re": "1/2", "im": 0}],
    }
    with pytest.raises(JsonFormatError):
        jsonio.form_from_obj(doc)


def test_rational_strings_canonical():
    f = ExteriorForm(3, 1, {(1,): Fraction(2, 4)})
    obj = jsonio.form_to_obj(f)
    assert obj["terms"][0]["re"] == "1/2"


def test_vector_matrix_round_trip(rng):
    v = (Fraction(1, 3), Fraction(-2), Fraction(0))
    assert jsonio.vector_from_obj(jsonio.vector_to_obj(v, "exact"), "exact") == v
    m = [[0.25, -1.0], [3.5, 0.0]]
    assert jsonio.matrix_from_obj(jsonio.matrix_to_obj(m, "float"), "float") == m
    with pytest.raises(JsonFormatError):
        jsonio.matrix_from_obj([[1, 2], [3]], "exact")


def test_canonical_dumps_sorted_and_stable():
    a = jsonio.dumps_canonical({"b": 1, "a": [1.0, 2.5]})
    b = jsonio.dumps_canonical({"a": [1.0, 2.5], "b": 1})
    assert a == b
    assert a.index('"a"') < a.index('"b"')


def test_canonical_float_formatting():
    text = jsonio.dumps_canonical({"x": 0.1 + 0.2})
    assert "0.30000000000000004" in text
    assert jsonio.dumps_canonical({"f": Fraction(1, 3)}) == '{"f":"1/3"}'
    assert jsonio.dumps_canonical({"c": ComplexRational(1, -2)}) == '{"c":"1-2i"}'


def test_canonical_valid_json():
    obj = {"nested": {"list": [1, 2.5, "s", None, True]}, "n": 7}
    parsed = json.loads(jsonio.dumps_canonical(obj))
    assert parsed["n"] == 7
    assert parsed["nested"]["list"][3] is None
