"""The model file format: decoding with located errors, eager validation,
and the canonical-dump round trip.
"""

import json

import pytest

from algebroids.algebroid import canonical_algebroid
from algebroids.errors import ParseError, UnknownName, ValidationError
from algebroids.fixtures import broken_anchor, broken_jacobi, so3
from algebroids.model import (
    Model,
    builtin_model,
    dumps_model,
    load_model,
    loads_model,
    tensor_key_string,
)
from algebroids.ring import Chart
from algebroids.tensor import GradedTensor, Kind, pretty

MINIMAL = """
{
  "charts": {"plane": ["x", "y"]},
  "tensors": {
    "w": {"owner": "plane", "kind": "mv", "degree": 2,
          "terms": {"1,2": "x^2 - y"}}
  }
}
"""


def test_minimal_document():
    model = loads_model(MINIMAL)
    w = model.tensor("w")
    assert w.kind is Kind.MV and w.degree == 2
    assert pretty(w) == "(x^2 - y)*e_x∧e_y"
    assert model.owner_named("plane") == canonical_algebroid(Chart(("x", "y")))


def test_round_trip_is_byte_identical():
    text = dumps_model(builtin_model())
    assert dumps_model(loads_model(text)) == text
    # and the canonical form is stable, not merely idempotent from this seed
    assert text.endswith("\n")
    assert json.loads(text)  # well-formed


def test_shipped_files_round_trip():
    for path in ("fixtures/standard.json", "fixtures/so3.json"):
        with open(path) as handle:
            text = handle.read()
        assert dumps_model(load_model(path)) == text


def test_shipped_standard_matches_builtin():
    assert dumps_model(load_model("fixtures/standard.json")) == \
        dumps_model(builtin_model())


def test_so3_file_contents():
    model = load_model("fixtures/so3.json")
    assert list(model.algebroids) == ["so3"]
    assert model.algebroids["so3"] == so3()
    assert model.algebroids["so3"].base.coords == ()


def test_broken_fixture_files_fail_validation():
    with pytest.raises(ValidationError) as err:
        load_model("fixtures/broken_anchor.json")
    assert err.value.witness["pair"] == ["e1", "e2"]
    assert "residual" in err.value.witness

    with pytest.raises(ValidationError) as err:
        load_model("fixtures/broken_jacobi.json")
    assert err.value.witness["triple"] == ["1", "2", "3"]


def test_unchecked_structures_still_dump():
    # the broken files were produced by dumping unvalidated builders
    model = Model(charts={"line": Chart(("x",))},
                  algebroids={"broken-anchor": broken_anchor()})
    text = dumps_model(model)
    with open("fixtures/broken_anchor.json") as handle:
        assert text == handle.read()
    model = Model(charts={"base": Chart(())},
                  algebroids={"bad2": broken_jacobi()})
    assert "bad2" in dumps_model(model)  # names come from the model


def test_parse_error_locations():
    with pytest.raises(ParseError) as err:
        loads_model("{not json")
    assert "JSON" in str(err.value)

    with pytest.raises(ParseError) as err:
        loads_model('{"charts": {"c": ["x"]}, "tensors": {"t": '
                    '{"owner": "c", "kind": "mv", "degree": 1, '
                    '"terms": {"0": "x"}}}}')
    assert "1-based" in str(err.value)

    with pytest.raises(ParseError) as err:
        loads_model('{"charts": {"c": ["x"]}, "tensors": {"t": '
                    '{"owner": "c", "kind": "mv", "degree": 1, '
                    '"terms": {"1": "x +"}}}}')
    assert "tensors" in str(err.value) and "t" in str(err.value)

    with pytest.raises(ParseError):
        loads_model('{"charts": {"c": ["x"]}, "tensors": {"t": '
                    '{"owner": "c", "kind": "vector", "degree": 1, '
                    '"terms": {}}}}')


def test_unresolved_names():
    with pytest.raises(ParseError):
        loads_model('{"algebroids": {"A": {"chart": "missing", '
                    '"fibers": ["e"], "anchor": [[]], "c": {}}}}')
    model = loads_model(MINIMAL)
    with pytest.raises(UnknownName):
        model.tensor("nope")
    with pytest.raises(UnknownName):
        model.owner_named("nope")
    with pytest.raises(UnknownName):
        model.algebroid("plane")  # a chart, not an algebroid


def test_poisson_entries_expose_bivectors():
    model = builtin_model()
    p = model.tensor("poisson-plane")
    assert p.kind is Kind.MV and p.degree == 2
    assert model.tensor("P") == model.poisson["poisson-four"].bivector


def test_key_strings():
    assert tensor_key_string(Kind.MV, (0, 2)) == "1,3"
    assert tensor_key_string(Kind.FORM, ()) == ""
    assert tensor_key_string(Kind.MIXED, ((0, 1), 2)) == "1,2|3"


def test_suite_defaults_survive_round_trip():
    model = builtin_model()
    assert model.suite == {"seed": 0, "trials": 50}
    again = loads_model(dumps_model(model))
    assert again.suite == model.suite
