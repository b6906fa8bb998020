import json

import pytest

from schemebounds.builders import cameron_seidel, complete_graph, gq_point_graph, hamming
from schemebounds.schemefile import SchemeFileError, dumps, loads, read_scheme, write_scheme

BUILT_IN = [cameron_seidel(t) for t in range(1, 6)] + [gq_point_graph(q) for q in (2, 3, 5)] + \
    [hamming(d) for d in range(1, 7)] + [complete_graph(n) for n in (2, 7, 64)]


@pytest.mark.parametrize("s", BUILT_IN, ids=[s.name for s in BUILT_IN])
def test_round_trip(s):
    text = dumps(s)
    assert loads(text) == s
    assert dumps(loads(text)) == text


def test_missing_q_is_derived_and_normalized():
    s = cameron_seidel(2)
    doc = json.loads(dumps(s))
    del doc["Q"]
    derived = loads(json.dumps(doc))
    assert derived.Q == s.Q
    assert dumps(derived) == dumps(s)


def test_fields_are_rational_strings():
    doc = json.loads(dumps(cameron_seidel(2)))
    assert doc["order"] == "128"
    assert doc["classes"] == 3
    assert doc["P"][0] == ["1", "15", "70", "42"]


def test_fractional_entries_survive(tmp_path):
    P = [["1", "2", "2"], ["1", "1/2", "-3/2"], ["1", "-2", "1"]]
    s = loads(json.dumps({"name": "pretender", "classes": 2, "order": "5", "P": P}))
    assert any(x.denominator != 1 for x in s.Q.entries)
    path = tmp_path / "p.json"
    write_scheme(s, path)
    assert read_scheme(path) == s
    assert "12/5" in path.read_text()


@pytest.mark.parametrize("mutate", [
    lambda d: d["P"][1].__setitem__(1, "3/0"),
    lambda d: d["P"][1].__setitem__(1, "2/4"),
    lambda d: d["P"][1].__setitem__(1, 3),
    lambda d: d.__setitem__("order", "8/3"),
    lambda d: d.__setitem__("order", 8),
    lambda d: d.__setitem__("classes", 2),
    lambda d: d.pop("P"),
    lambda d: d.__setitem__("extra", 1),
    lambda d: d["Q"].pop(),
])
def test_rejections(mutate):
    doc = json.loads(dumps(cameron_seidel(1)))
    mutate(doc)
    with pytest.raises(SchemeFileError):
        loads(json.dumps(doc))


def test_not_json():
    with pytest.raises(SchemeFileError):
        loads("name: x")


def test_singular_p_without_q():
    doc = {"classes": 1, "order": "2", "P": [["1", "1"], ["1", "1"]]}
    with pytest.raises(SchemeFileError):
        loads(json.dumps(doc))


def test_unreadable(tmp_path):
    with pytest.raises(SchemeFileError):
        read_scheme(tmp_path / "nope.json")
