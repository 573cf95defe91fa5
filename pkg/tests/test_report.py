import csv
import io

import pytest

from simile_miner.report import load_frozen, render_csv, render_text, report_rows

from conftest import DATA

# French column of the published top-12 table, in published order
TABLE3_FR = [
    "pâle + marker + mort (283)", "pleurer + marker + enfant (188)",
    "immobile + marker + statue (179)", "rapide + marker + éclair (164)",
    "blanc + marker + neige (162)", "aimer + marker + frère (140)",
    "tomber + marker + massue (135)", "tuer + marker + chien (122)",
    "pâle + marker + morte (121)", "beau + marker + ange (115)",
    "passer + marker + éclair (112)", "rapide + marker + pensée (106)",
]


def table3_rows(top=None):
    return report_rows(load_frozen(DATA / "table3_fr_frozen.jsonl"), top)


def test_rows_follow_table_order():
    assert [r.display for r in table3_rows()] == TABLE3_FR


def test_text_rendering():
    text = render_text(table3_rows(12))
    lines = text.splitlines()
    assert lines[0].split()[:2] == ["#", "simile"]
    assert "pâle + marker + mort (283)" in lines[1]
    assert len(lines) == 13


def test_top_zero_is_header_only():
    assert render_text(table3_rows(0)).splitlines() == [render_text([]).strip()]
    assert render_csv(table3_rows(0)).strip() == "rank,simile,count,authors,tier,evidence,review_fraction"


def test_top_n_truncates():
    assert [r.display for r in table3_rows(3)] == TABLE3_FR[:3]


def test_csv_rendering():
    rows = list(csv.DictReader(io.StringIO(render_csv(table3_rows()))))
    assert rows[0]["simile"] == "pâle + marker + mort" and rows[0]["count"] == "283"
    assert rows[0]["tier"] == "PROMINENT"


def test_bad_frozen_file(tmp_path):
    p = tmp_path / "f.jsonl"
    p.write_text('{"language": "FR"}\n', encoding="utf-8")
    with pytest.raises(ValueError, match="f.jsonl:1"):
        load_frozen(p)
