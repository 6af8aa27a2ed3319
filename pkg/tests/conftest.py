import itertools
from functools import lru_cache

import pytest

from monoretract.domain import INTEGERS
from monoretract.matrix import ExponentMatrix
from monoretract.monomial import Monomial, MonomialMap
from monoretract.oracle import enumerate_idempotent


def mat(*rows):
    return ExponentMatrix.from_rows(rows)


def monic_map(domain, *exponent_columns):
    """Map sending X_i to the monic monomial with the i-th exponent vector."""
    n = len(exponent_columns)
    return MonomialMap(n, domain, tuple(Monomial.monic(domain, c) for c in exponent_columns))


PHI1 = mat([1, 0, 0], [0, 1, 0], [1, 0, 0])
PHI2 = mat([1, 0, 0], [0, 1, 0], [0, 1, 0])
PAIR = mat([0, 0, 1], [0, 1, 0], [0, 0, 1])


@lru_cache(maxsize=None)
def census(n, bound):
    return enumerate_idempotent(n, bound)


def census_cells():
    return [(n, b) for n in (1, 2, 3) for b in (0, 1, 2)]


def all_matrices(n, bound):
    for flat in itertools.product(range(bound + 1), repeat=n * n):
        yield ExponentMatrix(tuple(flat[i * n:(i + 1) * n] for i in range(n)))


@pytest.fixture
def phi1_map():
    return monic_map(INTEGERS, (1, 0, 1), (0, 1, 0), (0, 0, 0))


ACCEPTANCE_LINES: list[str] = []


def report_criterion(number: int, ok: bool, detail: str):
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
