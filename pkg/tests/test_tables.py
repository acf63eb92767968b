import json

import pytest

from quandle_cocycles.io import load_knot_table
from quandle_cocycles.tables import STANDARD, reproduce_table, table_exit_code, validate_knot


def write_table(tmp_path, rows):
    p = tmp_path / "knots.json"
    p.write_text(json.dumps(rows))
    return load_knot_table(str(p))


def test_standard_words_pass_the_gate(knots, expected):
    for name in STANDARD:
        assert validate_knot(name, knots[name], expected) == (True, "")


def test_gate_rejects_wrong_word(tmp_path, expected):
    knots = write_table(tmp_path, [{"name": "6_1", "strands": 3, "word": "1 -2 1 -2"}])
    ok, why = validate_knot("6_1", knots["6_1"], expected)
    assert not ok and "R_3 colorings 3, expected 9" in why
    rows = reproduce_table("1", only={"6_1"}, knots=knots, expected=expected)
    assert [r.status for r in rows] == ["SKIPPED"]
    assert table_exit_code(rows) == 0


def test_missing_word_is_skipped(tmp_path, expected):
    knots = write_table(tmp_path, [{"name": "3_1", "strands": 2, "word": "1 1 1"}])
    rows = reproduce_table("1", only={"3_1", "4_1"}, knots=knots, expected=expected)
    assert {r.knot: r.status for r in rows} == {"3_1": "PASS"}
    rows = reproduce_table("2", only={"4_1"}, knots=knots, expected=expected)
    assert rows[0].status == "SKIPPED" and rows[0].note == "no braid word"


def test_duplicate_names_rejected(tmp_path):
    with pytest.raises(ValueError):
        write_table(tmp_path, [{"name": "3_1", "word": "1 1 1"}, {"name": "3_1", "word": "1 1 1"}])


def test_bundled_words_are_validated(validated, knots):
    assert set(STANDARD) <= set(validated)
    assert len(validated) == len(knots)


@pytest.mark.parametrize("table", ["1", "2"])
def test_module_tables_reproduce(table, knots, expected):
    rows = reproduce_table(table, knots=knots, expected=expected)
    assert rows and all(r.status == "PASS" for r in rows)


def test_classical_table_failures_are_chirality(knots, expected):
    rows = reproduce_table("classical", knots=knots, expected=expected)
    for r in rows:
        if r.status == "FAIL":
            assert "mirror image" in r.note, r.knot


@pytest.mark.parametrize(
    "table,names",
    [("3", {"3_1", "8_18", "8_19", "8_20"}), ("5", {"3_1", "8_18", "8_20"})],
)
def test_twist_spin_anchor_rows(table, names, knots, expected):
    rows = reproduce_table(table, only=names, knots=knots, expected=expected)
    assert {r.knot: r.status for r in rows} == {n: "PASS" for n in names}


def test_parallel_rows_match_serial(knots, expected):
    serial = reproduce_table("2", knots=knots, expected=expected)
    parallel = reproduce_table("2", knots=knots, expected=expected, jobs=3)
    assert [(r.knot, r.status, r.got) for r in serial] == [(r.knot, r.status, r.got) for r in parallel]


def test_exit_code_reflects_hard_failures(knots, expected):
    assert table_exit_code(reproduce_table("1", only={"3_1"}, knots=knots, expected=expected)) == 0
    rows = reproduce_table("classical", only={"7_7"}, knots=knots, expected=expected)
    assert rows[0].status == "FAIL" and table_exit_code(rows) == 1


def test_caution_rows_are_not_hard_failures(knots, expected):
    rows = reproduce_table("4", only={"9_37", "9_47"}, knots=knots, expected=expected)
    assert all(r.caution for r in rows)
    assert not any(r.hard_failure for r in rows)


def test_unknown_table():
    with pytest.raises(KeyError):
        reproduce_table("9")
