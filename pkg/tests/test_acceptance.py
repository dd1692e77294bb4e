"""Acceptance suite: one PASS/FAIL line per criterion.

Each criterion runs the corresponding cross-check from ``s3quotients.verify``
over every group of order at most 1500. Run with ``pytest -s`` to see the lines,
or standalone with ``python3 tests/test_acceptance.py``.
"""

import pytest

from s3quotients.verify import CHECKS

MAX_ORDER = 1500


def _run(fn, takes_order):
    return fn(MAX_ORDER) if takes_order else fn()


@pytest.mark.parametrize("number,fn,takes_order", CHECKS, ids=[f"criterion_{n:02d}_{fn.__name__}" for n, fn, _ in CHECKS])
def test_criterion(number, fn, takes_order):
    result = _run(fn, takes_order)
    print(result.line())
    assert result.number == number
    assert result.passed, result.line()


def test_all_criteria_present():
    assert [n for n, _, _ in CHECKS] == list(range(1, 13))


if __name__ == "__main__":
    ok = True
    for _, fn, takes_order in CHECKS:
        result = _run(fn, takes_order)
        ok &= result.passed
        print(result.line(), flush=True)
    raise SystemExit(0 if ok else 1)
