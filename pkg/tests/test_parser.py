# tests/test_parser.py

# 1. 標準庫導入
import json
from fractions import Fraction

# 2. 第三方庫導入
import pytest

# 3. 本專案導入
from linloop.errors import InstanceDimensionError, InstanceSyntaxError, ZeroDenominatorError
from linloop.models.entries import IntervalEntry, RationalEntry
from linloop.models.instance import LoopKind
from linloop.parsers.instance_parser import (
    load_instance,
    parse_entry,
    parse_instance,
    parse_number,
    serialize_instance,
)


@pytest.mark.parametrize(
    ("text", "expected"),
    [
        ("3", Fraction(3)),
        ("-7/4", Fraction(-7, 4)),
        ("0.125", Fraction(1, 8)),
        ("-2.5", Fraction(-5, 2)),
        (" 6/8 ", Fraction(3, 4)),
    ],
)
def test_parse_number(text, expected):
    assert parse_number(text) == expected


@pytest.mark.parametrize("text", ["", "1/", "abc", "1e3", "--1", "1/2/3", "1/07", "3/-4", "1/0.5"])
def test_parse_number_rejects_garbage(text):
    with pytest.raises(InstanceSyntaxError):
        parse_number(text)


@pytest.mark.parametrize("text", ["1/0", "-3/00"])
def test_zero_denominator(text):
    with pytest.raises(ZeroDenominatorError):
        parse_number(text)


def test_leading_zero_denominator_rejected_in_instance():
    with pytest.raises(InstanceSyntaxError):
        parse_instance(json.dumps({"kind": "linear", "A": [["1/07"]], "B": [[1]]}))


def test_parse_entry_forms():
    assert parse_entry(2) == RationalEntry(Fraction(2))
    assert parse_entry("1/3") == RationalEntry(Fraction(1, 3))
    assert parse_entry("[1/4, 0.5]") == IntervalEntry(Fraction(1, 4), Fraction(1, 2))
    with pytest.raises(InstanceSyntaxError):
        parse_entry("[1, 0]")
    with pytest.raises(InstanceSyntaxError):
        parse_entry(0.5)
    with pytest.raises(InstanceSyntaxError):
        parse_entry(True)
    with pytest.raises(InstanceSyntaxError):
        parse_entry(None)


def test_parse_linear_instance():
    inst = parse_instance(json.dumps({"kind": "linear", "A": [["1/2", 0], [0, "2"]], "B": [[1, "-1"]]}))
    assert inst.kind is LoopKind.LINEAR
    assert inst.rational_data().A == [[Fraction(1, 2), 0], [0, 2]]


def test_parse_affine_instance():
    inst = parse_instance(json.dumps({"kind": "affine", "A": [["1/2"]], "b": ["-1"], "B": [[1]], "eta": [0]}))
    assert inst.is_affine
    assert inst.rational_data().b == [Fraction(-1)]


@pytest.mark.parametrize(
    ("payload", "error"),
    [
        ("not json", InstanceSyntaxError),
        ("[1, 2]", InstanceSyntaxError),
        (json.dumps({"kind": "cubic", "A": [[1]], "B": [[1]]}), InstanceSyntaxError),
        (json.dumps({"kind": "linear", "B": [[1]]}), InstanceSyntaxError),
        (json.dumps({"kind": "linear", "A": [1], "B": [[1]]}), InstanceSyntaxError),
        (json.dumps({"kind": "linear", "A": [[1]], "B": [[1]], "b": [1]}), InstanceDimensionError),
        (json.dumps({"kind": "linear", "A": [[1, 2]], "B": [[1]]}), InstanceDimensionError),
        (json.dumps({"kind": "affine", "A": [[1]], "B": [[1]], "b": [1]}), InstanceSyntaxError),
        (json.dumps({"kind": "linear", "A": [], "B": [[1]]}), InstanceDimensionError),
        (json.dumps({"kind": "linear", "A": [["1/0"]], "B": [[1]]}), ZeroDenominatorError),
    ],
)
def test_parse_instance_errors(payload, error):
    with pytest.raises(error):
        parse_instance(payload)


def test_serialize_then_parse_keeps_entries(tmp_path):
    text = json.dumps(
        {"kind": "affine", "A": [["1/2", "[1/4,1/2]"], [0, 1]], "b": [1, "-3/2"], "B": [[1, 0]], "eta": ["0.75"]}
    )
    inst = parse_instance(text)
    path = tmp_path / "again.json"
    path.write_text(serialize_instance(inst), encoding="utf-8")
    assert load_instance(path) == inst
    assert json.loads(serialize_instance(inst))["eta"] == ["3/4"]


def test_load_missing_file_raises_oserror(tmp_path):
    with pytest.raises(OSError):
        load_instance(tmp_path / "missing.json")
