import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from monoretract.errors import CensusTooLargeError, DimensionMismatchError, InputError
from monoretract.matrix import ExponentMatrix
from monoretract.oracle import (
    enumerate_idempotent,
    generated_monoid,
    is_idempotent_direct,
    monoid_same_image,
    parse_census,
    rational_rank,
    render_census,
)

from conftest import PAIR, PHI1, census, census_cells, mat


def fraction_rank(rows):
    """Plain Gauss-Jordan over Fractions; test-side check of the Bareiss rank."""
    a = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    for c in range(len(a[0])):
        piv = next((r for r in range(rank, len(a)) if a[r][c] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for r in range(len(a)):
            if r != rank and a[r][c] != 0:
                f = a[r][c] / a[rank][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[rank])]
        rank += 1
    return rank


def test_census_examples():
    assert [m.rows for m in enumerate_idempotent(1, 1)] == [((0,),), ((1,),)]
    assert [m.rows for m in enumerate_idempotent(2, 0)] == [((0, 0), (0, 0))]


def test_census_n2_bound1_against_direct_squaring():
    expected = []
    for flat in itertools.product((0, 1), repeat=4):
        a, b, c, d = flat
        sq = (a * a + b * c, a * b + b * d, c * a + d * c, c * b + d * d)
        if sq == flat:
            expected.append(((a, b), (c, d)))
    got = [m.rows for m in enumerate_idempotent(2, 1)]
    assert got == sorted(expected)
    assert set(got) == {
        ((0, 0), (0, 0)),
        ((1, 0), (0, 1)),
        ((1, 0), (0, 0)),
        ((0, 0), (0, 1)),
        ((1, 1), (0, 0)),
        ((0, 0), (1, 1)),
        ((1, 0), (1, 0)),
        ((0, 1), (0, 1)),
    }


@pytest.mark.parametrize("n,b", census_cells())
def test_pruned_and_unpruned_agree(n, b):
    pruned = census(n, b)
    full = enumerate_idempotent(n, b, prune=False)
    assert pruned.matrices == full.matrices
    assert list(pruned.matrices) == sorted(pruned.matrices)
    assert all(is_idempotent_direct(m.rows) for m in pruned)


def test_census_flags():
    c = census(3, 1)
    for m, nd, st_ in zip(c.matrices, c.nondegenerate, c.standard):
        assert nd == all(any(r) for r in m.rows)
        assert st_ == (list(m.diagonal) == sorted(m.diagonal, reverse=True))


def test_census_cap_is_a_hard_error():
    with pytest.raises(CensusTooLargeError):
        enumerate_idempotent(5, 2)
    with pytest.raises(InputError):
        enumerate_idempotent(0, 1)


def test_census_workers_do_not_change_result():
    assert enumerate_idempotent(4, 1, workers=2).matrices == enumerate_idempotent(4, 1).matrices


def test_census_text_round_trip():
    c = census(2, 2)
    text = render_census(c)
    assert text.splitlines()[0] == "census n=2 bound=2 count=12"
    assert parse_census(text) == c


def test_rational_rank_examples():
    assert rational_rank(ExponentMatrix.identity(3)) == 3
    assert rational_rank(PHI1) == 2
    assert rational_rank(mat([1, 1], [1, 1])) == 1
    assert rational_rank(ExponentMatrix.zero(2)) == 0


@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(st.integers(0, 4), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_rational_rank_matches_fraction_elimination(rows):
    assert rational_rank(ExponentMatrix.from_rows(rows)) == fraction_rank(rows)


def test_monoid_examples():
    assert monoid_same_image(PHI1, PAIR, 4)
    assert monoid_same_image(PHI1, PHI1, 0)
    assert not monoid_same_image(ExponentMatrix.identity(2), mat([1, 0], [1, 0]), 4)
    with pytest.raises(DimensionMismatchError):
        monoid_same_image(PHI1, ExponentMatrix.identity(2))


def test_generated_monoid_multiples():
    assert generated_monoid(((1, 1),), 4) == {(0, 0), (1, 1), (2, 2)}
