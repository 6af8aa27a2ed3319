from fractions import Fraction

import pytest

from monoretract.domain import INTEGERS, RATIONALS, integers_mod, is_unit, nontrivial_idempotents
from monoretract.errors import (
    DegenerateError,
    InputError,
    NotARetractionError,
    NotIdempotentError,
    NotMonicError,
    NotStandardError,
    ZeroImageError,
)
from monoretract.matrix import ExponentMatrix, to_monic_map
from monoretract.monomial import ZERO, Monomial, MonomialMap, is_retraction
from monoretract.structure import (
    associated_monic,
    decompose,
    decorate,
    enumerate_decorations,
    lambda_consistent,
    polynomial_ring_witness,
)
from monoretract.transform import standardize

from conftest import PAIR, PHI1, census, mat, monic_map

Z6 = integers_mod(6)


def mono(d, c, *e):
    return Monomial(d(c), e)


def test_decompose_worked_example(phi1_map):
    s = decompose(phi1_map)
    assert (s.p, s.N1, s.N2) == (2, (1, 2), (3,))
    assert s.psi[1] == Monomial.monic(INTEGERS, (0, 0, 1))
    assert s.psi[2] == Monomial.monic(INTEGERS, (0, 0, 0))


def test_decompose_identity():
    s = decompose(MonomialMap.identity(2, INTEGERS))
    assert (s.p, s.N1, s.N2) == (2, (1, 2), ())
    assert all(not any(s.psi[i].exponents) for i in s.N1)


def test_decompose_reads_columns():
    s = decompose(to_monic_map(mat([1, 0, 0], [0, 1, 0], [2, 2, 0]), INTEGERS))
    assert (s.N1, s.N2) == ((1, 2), (3,))
    assert s.psi[1] == s.psi[2] == Monomial.monic(INTEGERS, (0, 0, 2))


def test_decompose_rejections():
    with pytest.raises(NotMonicError):
        decompose(MonomialMap(1, Z6, (mono(Z6, 3, 1),)))
    with pytest.raises(NotARetractionError):
        decompose(monic_map(INTEGERS, (0, 1), (1, 0)))
    with pytest.raises(DegenerateError):
        decompose(monic_map(INTEGERS, (1, 0), (0, 0)))


def test_associated_monic_of_monic_map(phi1_map):
    for d in (INTEGERS, RATIONALS, Z6):
        phi = to_monic_map(PHI1, d)
        a = associated_monic(phi)
        assert a.monic_map == phi
        assert all(lam.is_one for lam in a.lambdas)
        assert a.lambda_consistent and a.all_lambdas_units
        assert a.idempotent_witnesses == ()


def test_associated_monic_rejects_inconsistent_sign():
    # X1 -> -X1 X3^2 squares to X1 X3^2: lambda_1 * f_1(lambda) = (-1)(-1)(1)^2 = 1 != -1
    phi = MonomialMap(3, INTEGERS, (mono(INTEGERS, -1, 1, 0, 2), mono(INTEGERS, 1, 0, 1, 0), mono(INTEGERS, 1, 0, 0, 0)))
    assert not is_retraction(phi)
    with pytest.raises(NotARetractionError):
        associated_monic(phi)


def test_associated_monic_negative_constant():
    phi = MonomialMap(3, INTEGERS, (mono(INTEGERS, 1, 1, 0, 2), mono(INTEGERS, 1, 0, 1, 0), mono(INTEGERS, -1, 0, 0, 0)))
    a = associated_monic(phi)
    assert [lam.value for lam in a.lambdas] == [1, 1, -1]
    assert a.lambda_consistent and a.all_lambdas_units
    assert a.monic_map == to_monic_map(mat([1, 0, 0], [0, 1, 0], [2, 0, 0]), INTEGERS)
    (t,) = a.theta_checks
    assert (t.i, t.j, t.theta.value, t.holds) == (1, 3, -1, True)


def test_associated_monic_idempotent_coefficient():
    a = associated_monic(MonomialMap(1, Z6, (mono(Z6, 3, 1),)))
    assert a.lambda_consistent
    assert not a.all_lambdas_units
    assert [(i, w.value) for i, w in a.idempotent_witnesses] == [(1, 3)]


def test_associated_monic_rejects_zero_image():
    with pytest.raises(ZeroImageError):
        associated_monic(MonomialMap(2, INTEGERS, (ZERO, mono(INTEGERS, 1, 0, 1))))


def test_witness_examples():
    w = polynomial_ring_witness(PHI1, INTEGERS)
    assert w.verified and w.p == 2
    assert [str(f) for f in w.alpha] == ["X1 X3", "X2"]
    assert [str(g) for g in w.beta] == ["X1", "X2", "1"]
    assert w.to_dict() == {
        "p": 2,
        "alpha": {"Y1": "X1 X3", "Y2": "X2"},
        "beta": {"X1": "X1", "X2": "X2", "X3": "1"},
        "verified": True,
    }
    w = polynomial_ring_witness(ExponentMatrix.identity(2), INTEGERS)
    assert w.verified and w.p == 2
    w = polynomial_ring_witness(mat([1, 0, 0], [0, 1, 0], [2, 3, 0]), RATIONALS)
    assert w.verified and w.p == 2
    assert [c.exponents for c in w.composite] == [(1, 0), (0, 1)]


def test_witness_preconditions():
    with pytest.raises(NotIdempotentError):
        polynomial_ring_witness(mat([0, 1], [1, 0]), INTEGERS)
    with pytest.raises(NotStandardError):
        polynomial_ring_witness(PAIR, INTEGERS)
    with pytest.raises(DegenerateError):
        polynomial_ring_witness(mat([1, 0], [0, 0]), INTEGERS)


@pytest.mark.parametrize("n,b", [(1, 2), (2, 2), (3, 2)])
def test_structure_over_census(n, b):
    for M in census(n, b).nondegenerate_matrices():
        s = decompose(to_monic_map(M, INTEGERS))
        assert s.p == M.trace
        for i in s.N1:
            f = s.psi[i] * Monomial.variable(INTEGERS, n, i)
            assert f.exponents == M.column(i - 1)
        S, _ = standardize(M)
        w = polynomial_ring_witness(S, INTEGERS)
        assert w.verified and w.p == M.trace


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_prime_field_decorations_are_units(p):
    d = integers_mod(p)
    for M in census(2, 2).nondegenerate_matrices():
        monic = to_monic_map(M, d)
        for lams in enumerate_decorations(monic):
            a = associated_monic(decorate(monic, lams))
            assert a.all_lambdas_units


@pytest.mark.parametrize("m", [6, 12])
def test_idempotent_decorations_give_witnesses(m):
    d = integers_mod(m)
    idems = nontrivial_idempotents(d)
    assert idems
    for e in idems:
        phi = MonomialMap(1, d, (Monomial(e, (1,)),))
        assert is_retraction(phi)
        a = associated_monic(phi)
        assert not a.all_lambdas_units
        assert a.idempotent_witnesses == ((1, e),)


def test_decorations_match_retraction_test():
    d = integers_mod(6)
    monic = to_monic_map(PHI1, d)
    found = set(enumerate_decorations(monic))
    for lams in found:
        assert is_retraction(decorate(monic, lams))
    assert any(not is_unit(l) for lams in found for l in lams)
    with pytest.raises(InputError):
        enumerate_decorations(to_monic_map(PHI1, RATIONALS))
    with pytest.raises(InputError):
        enumerate_decorations(to_monic_map(PHI1, integers_mod(31)))


def test_lambda_consistency_over_rationals():
    monic = to_monic_map(PHI1, RATIONALS)
    # f1 = X1 X3 forces lambda_1 * lambda_3 = 1, f2 = X2 forces lambda_2 = 1
    ok = [RATIONALS(Fraction(3, 2)), RATIONALS(1), RATIONALS(Fraction(2, 3))]
    assert lambda_consistent(monic, ok)
    assert lambda_consistent(monic, [RATIONALS(-1), RATIONALS(1), RATIONALS(-1)])
    bad = [RATIONALS(2), RATIONALS(1), RATIONALS(1)]
    assert not lambda_consistent(monic, bad)
