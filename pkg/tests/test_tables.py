import json
from pathlib import Path

import pytest

from volkenborn.catalog.tables import PRINTED_TABLES, emit_tables, table_rows

GOLDEN = Path(__file__).resolve().parent / "golden"


@pytest.mark.parametrize("name", ["stirling1", "stirling2", "lah", "central_T_even"])
def test_matches_printed_table(name):
    assert emit_tables([name]) == (GOLDEN / f"{name}.tsv").read_text(encoding="utf-8")


def test_small_t_matrix_differs_only_at_the_misprint():
    golden = (GOLDEN / "central_t_even.tsv").read_text(encoding="utf-8").splitlines()
    ours = emit_tables(["central_t_even"]).splitlines()
    diffs = [(g, o) for g, o in zip(golden, ours) if g != o]
    assert len(golden) == len(ours)
    assert diffs == [("5\t0\t576\t-870\t273\t-30\t1\t0", "5\t0\t576\t-820\t273\t-30\t1\t0")]


def test_row_examples():
    assert [str(v) for v in table_rows("stirling2")[5]] == ["0", "1", "15", "25", "10", "1"]
    assert [str(v) for v in table_rows("central_T_even")[4][:5]] == ["0", "1", "21", "14", "1"]


def test_byte_stable():
    assert emit_tables() == emit_tables()
    assert emit_tables(format="json") == emit_tables(format="json")


def test_json_layout():
    data = json.loads(emit_tables(["lah"], 3, "json"))
    assert data == [{"table": "lah", "rows": [["1", "0", "0", "0"], ["0", "1", "0", "0"], ["0", "2", "1", "0"], ["0", "6", "6", "1"]]}]


def test_default_emits_all_printed_tables():
    text = emit_tables()
    assert [line[2:] for line in text.splitlines() if line.startswith("# ")] == list(PRINTED_TABLES)


def test_unknown_table_and_format():
    with pytest.raises(ValueError):
        emit_tables(["nope"])
    with pytest.raises(ValueError):
        emit_tables(["lah"], format="xml")
    with pytest.raises(ValueError):
        emit_tables(["LAMBDA_S2"])
