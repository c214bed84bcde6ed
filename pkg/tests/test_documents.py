import json
from pathlib import Path

import pytest

from corank.documents import (
    PRESENTATION_SCHEMA,
    PROBLEM_SCHEMA,
    RESULT_SCHEMA,
    DocumentError,
    dumps,
    extension_inputs,
    load_problem,
    presentation_from_document,
    presentation_to_document,
    rep_from_document,
    rep_to_document,
    result_document,
    schema_errors,
)
from corank.fixtures import ALGEBRA_FIXTURES, CYCLIC_FIXTURES, aug1
from corank.presentation import present_right_ideal
from corank.rings import QQ

ROOT = Path(__file__).resolve().parent.parent


@pytest.mark.parametrize("name,schema", [("problem", PROBLEM_SCHEMA), ("result", RESULT_SCHEMA),
                                         ("presentation", PRESENTATION_SCHEMA)])
def test_shipped_schemas_match(name, schema):
    assert json.loads((ROOT / "docs" / f"{name}.schema.json").read_text()) == schema


def test_round_trip_all_fixtures():
    for make in list(CYCLIC_FIXTURES.values()) + list(ALGEBRA_FIXTURES.values()):
        rep = make()
        doc = rep_to_document(rep)
        assert schema_errors(doc) == []
        back = rep_from_document(load_problem(dumps(doc)))
        assert rep_to_document(back) == doc


def test_fractions_travel_as_strings():
    doc = rep_to_document(aug1())
    doc["relations"] = [[0, "1/2"]]
    rep = rep_from_document(load_problem(json.dumps(doc)))
    assert rep.relations.basis == ((0, 1),)
    doc["relations"] = [[0, "1/0"]]
    with pytest.raises(DocumentError):
        rep_from_document(load_problem(json.dumps(doc)))


def test_malformed_and_schema_errors():
    with pytest.raises(DocumentError) as e:
        load_problem('{"ring": ')
    assert e.value.messages[0].startswith("malformed JSON")
    with pytest.raises(DocumentError) as e:
        load_problem(json.dumps({"ring": {"kind": "R"}, "variables": ["x"], "kind": "cyclic_module"}))
    assert len(e.value.messages) >= 2


def test_shape_errors_are_named():
    doc = rep_to_document(aug1())
    doc["action"]["y"] = [[0, 1], [0, 1]]
    with pytest.raises(DocumentError, match="unknown variables"):
        rep_from_document(doc)
    doc = rep_to_document(aug1())
    doc["representatives"]["x"] = "x +"
    with pytest.raises(DocumentError, match="representatives/x"):
        rep_from_document(doc)
    doc = rep_to_document(aug1())
    doc["relations"] = [[1, 2, 3]]
    with pytest.raises(DocumentError, match="expected 2 entries"):
        rep_from_document(doc)


def test_extension_inputs():
    doc = {"ring": {"kind": "Q"}, "variables": ["x"], "kind": "extension",
           "generators": [{"name": "t", "witness": "x^2 - x"}], "relations": ["t^2"]}
    X, r_gens, rels, known, ring = extension_inputs(load_problem(json.dumps(doc)))
    assert ring == QQ and r_gens[0][0] == "t" and str(rels[0]) == "t^2" and known == []


def test_presentation_round_trip():
    pres = present_right_ideal(aug1())
    doc = presentation_to_document(pres)
    assert schema_errors(doc, PRESENTATION_SCHEMA) == []
    back = presentation_from_document(doc, QQ, aug1().alphabet)
    assert back.relations == pres.relations and back.witnesses == pres.witnesses
    wrapped = {"outputs": {"presentation": doc}}
    assert presentation_from_document(wrapped, QQ, aug1().alphabet).alphabet == pres.alphabet
    with pytest.raises(DocumentError):
        presentation_from_document({"outputs": {}}, QQ, aug1().alphabet)


def test_result_documents_validate():
    doc = result_document("present", "ok", input_name="a.json", parameters={}, summary="s", outputs={})
    assert schema_errors(doc, RESULT_SCHEMA) == []
    with pytest.raises(ValueError):
        result_document("present", "fine")


def test_dumps_is_deterministic_and_compact_for_flat_lists():
    doc = {"b": [1, 2], "a": {"rows": [[1, 0], [0, 1]]}}
    text = dumps(doc)
    assert text == dumps(json.loads(text))
    assert '"b": [1, 2]' in text and text.index('"b"') < text.index('"a"')
    assert text.endswith("\n")
