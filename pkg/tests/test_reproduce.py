"""Golden-file check of the fixture reproduction table.

Regenerate deliberately with::

    python3 -c "from skewarm.reproduce import *; print(rows_table(reproduce_fixtures(1)))" \
        > tests/golden/reproduce_table.txt
"""

from pathlib import Path

import pytest

from skewarm.fixtures import fixture_ids, paper_fixture
from skewarm.reproduce import fixture_rows, reproduce_fixtures, rows_table

GOLDEN = Path(__file__).parent / "golden" / "reproduce_table.txt"


@pytest.fixture(scope="module")
def rows():
    return reproduce_fixtures(1)


def test_table_matches_golden(rows):
    assert rows_table(rows) + "\n" == GOLDEN.read_text()


def test_every_row_confirmed(rows):
    bad = [r for r in rows if not r.ok]
    assert not bad, bad


def test_ex2_row(rows):
    got = {r.check: r.observed for r in rows if r.fixture == "EX2-z4mat"}
    assert got["skew-armendariz"] == "fails"
    assert got["central-skew-armendariz"].startswith("holds")


def test_each_fixture_has_checks():
    for fid in fixture_ids():
        assert fixture_rows(paper_fixture(fid))
