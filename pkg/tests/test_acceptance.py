"""Acceptance battery: one pass/fail line per criterion, all at tolerance zero."""

import pytest

from hypermat.acceptance import CRITERIA, AcceptanceContext


@pytest.fixture(scope="module")
def ctx():
    return AcceptanceContext()


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda c: c.__name__)
def test_criterion(criterion, ctx):
    record = criterion(ctx)
    line = f"{record.status.upper()}: {record.check}"
    if record.detail:
        line += f" ({record.detail})"
    print(line)
    assert record.status == "pass", record.witness
