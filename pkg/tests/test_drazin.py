from fractions import Fraction

import pytest

from idemalg.core.exceptions import (
    HypothesisViolation,
    ParameterError,
    PresentationMismatch,
    WitnessInvalid,
)
from idemalg.core.types_ import Family, Letter
from idemalg.drazin import (
    ClosedFormCoefficients,
    algebra_drazin,
    alpha_p_plus_q,
    alpha_pq_witnesses,
    closed_form_drazin_alpha_pq,
    closed_form_group_lambda,
    closed_form_via_witnesses,
    drazin_via_left_right,
    matrix_drazin,
    phi,
)
from idemalg.linalg import RationalMatrix
from idemalg.models import LambdaSpec, build_family_pair, build_lambda_pair, represent
from idemalg.verify import triple_drazin
from idemalg.wordalg import Element, Presentation, Word, normal_form

from .conftest import fake

ALPHAS = [Fraction(1), Fraction(2), Fraction(-2), Fraction(1, 3), Fraction(-1)]


def test_invertible_matrix_has_index_zero():
    M = RationalMatrix.from_rows([[2, 1], [1, 1]])
    result = matrix_drazin(M)
    assert result.index == 0
    assert result.inverse == M.inverse()
    assert result.verified


def test_nilpotent_matrix():
    result = matrix_drazin(RationalMatrix.from_rows([[0, 1, 0], [0, 0, 1], [0, 0, 0]]))
    assert result.index == 3
    assert result.inverse.is_zero
    assert result.verified


def test_idempotent_is_its_own_group_inverse():
    P = RationalMatrix.from_rows([[1, 1], [0, 0]])
    result = matrix_drazin(P)
    assert result.index == 1
    assert result.inverse == P
    assert result.group_invertible


def test_core_nilpotent_mix():
    M = RationalMatrix.block_diagonal(
        RationalMatrix.from_rows([[3]]), RationalMatrix.from_rows([[0, 1], [0, 0]])
    )
    result = matrix_drazin(M)
    assert result.index == 2
    assert result.inverse == RationalMatrix.block_diagonal(
        RationalMatrix.from_rows([[Fraction(1, 3)]]), RationalMatrix.zeros(2)
    )


def test_algebra_drazin_of_generator(family):
    pres = Presentation.f(family, 2)
    p = Element.word(pres, Word(Letter.P, 1))
    result = algebra_drazin(p)
    assert result.inverse == p
    assert result.index == 1


def test_algebra_drazin_of_nilpotent_word():
    pres = Presentation.zn(4)
    pq = Element.word(pres, Word.parse("pq"))
    result = algebra_drazin(pq)
    assert result.inverse.is_zero
    assert result.index == 2
    assert result.verified


@pytest.mark.oracle
@pytest.mark.parametrize("m", [2, 3, 4])
def test_algebra_and_matrix_oracles_agree(family, m):
    pair = build_family_pair(family, m)
    for _ in range(3):
        elem = fake.element(pair.intended)
        lhs = represent(algebra_drazin(elem).inverse, pair)
        assert lhs == matrix_drazin(represent(elem, pair)).inverse


@pytest.mark.parametrize("m", [2, 3, 4])
def test_drazin_of_the_drazin_inverse(family, m):
    pres = Presentation.f(family, m)
    for _ in range(3):
        elem = fake.element(pres)
        once = algebra_drazin(elem)
        twice = algebra_drazin(once.inverse)
        assert twice.index <= 1
        assert algebra_drazin(twice.inverse).inverse == once.inverse
        assert triple_drazin(elem) == once.inverse


def test_drazin_of_a_nilpotent_inverse_is_zero():
    elem = Element.word(Presentation.zn(4), Word.parse("pq"))
    assert triple_drazin(elem).is_zero


@pytest.mark.parametrize("alpha", ALPHAS)
@pytest.mark.parametrize("m", [2, 3])
def test_closed_form_matches_oracle(family, m, alpha):
    pres = Presentation.f(family, m)
    closed = closed_form_drazin_alpha_pq(alpha, pres)
    oracle = algebra_drazin(alpha_p_plus_q(alpha, pres))
    assert closed.verified
    assert closed.inverse == oracle.inverse
    assert closed.index <= (3 if alpha == -1 else 2)


@pytest.mark.oracle
@pytest.mark.parametrize("alpha", ALPHAS)
def test_closed_form_in_matrix_model(family, alpha):
    pair = build_family_pair(family, 2)
    closed = closed_form_drazin_alpha_pq(alpha, pair)
    assert closed.inverse == matrix_drazin(alpha_p_plus_q(alpha, pair)).inverse


@pytest.mark.parametrize("alpha", [Fraction(1), Fraction(3), Fraction(-1, 2)])
def test_witnesses_rebuild_the_inverse(family, alpha):
    pres = Presentation.f(family, 3)
    A, A_prime = alpha_pq_witnesses(alpha, pres)
    a = alpha_p_plus_q(alpha, pres)
    assert A * a**3 == a**2
    assert a**3 * A_prime == a**2
    assert closed_form_via_witnesses(alpha, pres).inverse == algebra_drazin(a).inverse


def test_witnesses_need_alpha_other_than_minus_one():
    with pytest.raises(ParameterError):
        alpha_pq_witnesses(-1, Presentation.f(Family.F1, 2))


def test_closed_form_in_zn_picks_the_power():
    pres = Presentation.zn(5)
    assert normal_form(Word.pq_power(2), pres) == normal_form(Word.pq_power(3), pres)
    closed = closed_form_drazin_alpha_pq(2, pres)
    assert closed.inverse == algebra_drazin(alpha_p_plus_q(Fraction(2), pres)).inverse


def test_closed_form_checks_the_hypothesis():
    with pytest.raises(HypothesisViolation):
        closed_form_drazin_alpha_pq(1, Presentation.f(Family.F1, 3), m=2)


def test_closed_form_rejects_zero_alpha():
    with pytest.raises(ParameterError):
        closed_form_drazin_alpha_pq(0, Presentation.f(Family.F2, 2))


@pytest.mark.parametrize("alpha", ["1", "2", "-1"])
@pytest.mark.parametrize("lam", ["2", "-1", "1/2"])
@pytest.mark.parametrize("m", [2, 3])
def test_group_inverse_under_lambda_relation(alpha, lam, m):
    spec = LambdaSpec(m, lam)
    pair = build_lambda_pair(spec)
    closed = closed_form_group_lambda(alpha, spec, pair)
    oracle = matrix_drazin(alpha_p_plus_q(Fraction(alpha), pair))
    assert closed.verified
    assert closed.index == oracle.index == 1
    assert closed.inverse == oracle.inverse


def test_lambda_closed_form_needs_its_own_model():
    pair = build_lambda_pair(LambdaSpec(2, 2))
    with pytest.raises(PresentationMismatch):
        closed_form_group_lambda(1, LambdaSpec(3, 2), pair)


def test_lambda_coefficients_reject_one():
    with pytest.raises(ParameterError):
        ClosedFormCoefficients.for_lambda(1, 1, 2)


def test_left_right_rejects_bad_witnesses():
    pres = Presentation.f(Family.F1, 2)
    p = Element.word(pres, Word(Letter.P, 1))
    q = Element.word(pres, Word(Letter.Q, 1))
    with pytest.raises(WitnessInvalid):
        drazin_via_left_right(p, q, p, 1, 1)


def test_left_right_with_generator():
    pres = Presentation.f(Family.F3, 2)
    p = Element.word(pres, Word(Letter.P, 1))
    result = drazin_via_left_right(p, p, p, 1, 1)
    assert result.inverse == p
    assert result.index == 1


def test_phi():
    assert [phi(i) for i in range(5)] == [0, 1, 0, 1, 0]
