import random

import pytest

from neutrosophic.errors import ParseError, SchemeError
from neutrosophic.inql.storage import (
    Database,
    load_directory,
    load_relation,
    parse_catalog,
    parse_relation,
    relation_text,
    save_relation,
)
from neutrosophic.nrdm.relation import NeutroRelation

from support import DEMOS

CATALOG = {"Item": ("I1", "I2"), "Quality": ("q1", "q2", "q3"), "N": (1, 2, 3)}


def test_eval_fixture_loads():
    db = load_directory(DEMOS / "eval")
    r = db["EVAL"]
    assert len(r) == 5
    assert r.get(("I2", "q1")).pair == (1.0, 1.0)
    assert r.scheme.domain_names == ("Item", "Quality")


def test_save_then_load(tmp_path):
    db = Database(CATALOG)
    rng = random.Random(2)
    scheme = db.scheme({"I": "Item", "Q": "Quality", "K": "N"})
    rows = {t: (rng.randint(0, 100) / 100, rng.randint(0, 1000) / 1000)
            for t in scheme.tau() if rng.random() < 0.6}
    db.add("R", NeutroRelation(scheme, rows))
    save_relation("R", tmp_path / "R.csv", db)
    db2 = Database(CATALOG)
    load_relation(tmp_path / "R.csv", db2)
    assert db2["R"] == db["R"]
    assert (tmp_path / "R.csv").read_text() == relation_text(db2["R"])


def test_numeric_members_round_trip():
    db = Database(CATALOG)
    r = parse_relation("scheme: K:N\n1,0.5,0.25\n3,1,0\n", db)
    assert r.get((1,)).pair == (0.5, 0.25)
    assert parse_relation(relation_text(r), db) == r


@pytest.mark.parametrize("body,row", [
    ("I1,q1,1.2,0\n", 2),
    ("I1,q1,0.5\n", 2),
    ("I1,q9,0.5,0.5\n", 2),
    ("I1,q1,0.5,0.5\nI1,q1,0.2,0.2\n", 3),
    ("I1,q1,abc,0.5\n", 2),
])
def test_malformed_rows_report_the_row(body, row):
    db = Database(CATALOG)
    with pytest.raises(ParseError) as err:
        parse_relation("scheme: I:Item, Q:Quality\n" + body, db, "bad.csv")
    assert err.value.line == row
    assert f"row {row}" in str(err.value)


def test_bad_headers():
    db = Database(CATALOG)
    for text in ["", "I1,q1,0,0\n", "scheme: I:Nope\n", "scheme: I:Item, I:Item\n", "scheme: I\n"]:
        with pytest.raises(ParseError):
            parse_relation(text, db)


def test_catalog_errors():
    for text in ["Item I1, I2", "Item: I1, I1", "Item: a\nItem: b", "Item:"]:
        with pytest.raises(ParseError):
            parse_catalog(text)


def test_catalog_conflict():
    db = Database(CATALOG)
    r = NeutroRelation(db.scheme({"I": "Item"}))
    other = Database({"Item": ("x",)})
    with pytest.raises(SchemeError):
        other.add("R", r)


def test_missing_catalog(tmp_path):
    with pytest.raises(Exception, match="domain catalog"):
        load_directory(tmp_path)
