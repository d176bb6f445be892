from fractions import Fraction
import json

import pytest

from idemalg.core.exceptions import InputError, ParameterError, PresentationMismatch
from idemalg.core.types_ import Family, Letter
from idemalg.wordalg import (
    Element,
    P,
    Presentation,
    Q,
    Word,
    basis_words,
    build_structure_table,
    concat,
    dimension,
    internal_unit,
    left_regular_matrix,
    normal_form,
    radical_dimension,
    right_regular_matrix,
    trace_form,
    unitalize,
)

from .conftest import fake


def w(text: str) -> Word:
    return Word.parse(text)


@pytest.mark.parametrize("m", [2, 3, 4, 7])
def test_family_dimensions(family, m):
    offsets = {"F1": 3, "F2": 2, "F3": 2, "F4": 1}
    assert dimension(Presentation.f(family, m)) == 4 * m - offsets[family]


@pytest.mark.parametrize("n", range(1, 10))
def test_zn_dimension_is_n(n):
    for vanishing in Letter:
        assert dimension(Presentation.zn(n, vanishing)) == n


def test_odd_zn_keeps_the_other_word():
    assert basis_words(Presentation.zn(3, Letter.Q)) == [P, Q, w("pq")]
    assert basis_words(Presentation.zn(3, Letter.P)) == [P, Q, w("qp")]
    assert normal_form(w("qp"), Presentation.zn(3, Letter.Q)).is_zero


def test_vanishing_flag_is_ignored_for_even_n():
    assert Presentation.zn(4, Letter.P) == Presentation.zn(4, Letter.Q)


def test_concat_merges_repeated_letters():
    assert concat(P, P) == P
    assert concat(P, Q) == w("pq")
    assert concat(w("pq"), Q) == w("pq")
    assert concat(w("pq"), w("pq")) == w("pqpq")
    assert concat(w("qp"), w("pq")) == w("qpq")


def test_word_parse_rejects_garbage():
    with pytest.raises(InputError):
        Word.parse("ppq")
    with pytest.raises(InputError):
        Word.parse("pqx")
    with pytest.raises(ParameterError):
        Word(Letter.P, 0)


def test_presentation_parameters_are_checked():
    with pytest.raises(ParameterError):
        Presentation.zn(0)
    with pytest.raises(ParameterError):
        Presentation.f(Family.F1, 1)


def test_f1_boundary_word_is_replaced():
    pres = Presentation.f(Family.F1, 2)
    expected = Element(pres, {w("qp"): 1, w("pq"): 1, w("qpq"): -1})
    assert normal_form(w("pqp"), pres) == expected


@pytest.mark.parametrize("m", [2, 3, 4])
def test_pq_power_collapses(family, m):
    pres = Presentation.f(family, m)
    assert normal_form(Word.pq_power(m), pres) == normal_form(Word.pq_power(m - 1), pres)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_structure_tables_are_associative(family, m):
    table = build_structure_table(Presentation.f(family, m))
    assert len(table.basis) == dimension(table.presentation)


def test_multiplication_is_associative_on_random_elements(family):
    pres = Presentation.f(family, 3)
    for _ in range(5):
        a, b, c = fake.element(pres), fake.element(pres), fake.element(pres)
        assert (a * b) * c == a * (b * c)


def test_generators_are_idempotent(family):
    pres = Presentation.f(family, 2)
    p, q = Element.generator(pres, Letter.P), Element.generator(pres, Letter.Q)
    assert p * p == p
    assert q * q == q


def test_mixing_presentations_fails():
    a = Element.generator(Presentation.f(Family.F1, 2), Letter.P)
    b = Element.generator(Presentation.f(Family.F2, 2), Letter.P)
    with pytest.raises(PresentationMismatch):
        a * b
    with pytest.raises(PresentationMismatch):
        a + b


@pytest.mark.parametrize(
    "pres", [Presentation.zn(7, Letter.P), Presentation.f(Family.F2, 3)], ids=str
)
def test_element_json_round_trip_is_exact(pres):
    element = Element.combination(
        pres, [(Fraction(-1, 2), w("p")), (Fraction(7, 3), w("qpq")), (Fraction(5, 4), w("qp"))]
    )
    data = json.loads(json.dumps(element.as_dict()))
    assert [(c["num"], c["den"]) for c in data["coeffs"]] == [("-1", "2"), ("5", "4"), ("7", "3")]
    back = Element.from_dict(data)
    assert back == element
    assert back.as_dict() == element.as_dict()
    assert Presentation.from_dict(pres.as_dict()) == pres
    random_element = fake.element(pres)
    assert Element.from_dict(random_element.as_dict()) == random_element


def test_element_from_dict_adds_repeated_words():
    pres = Presentation.f(Family.F1, 2)
    data = pres.as_dict()
    data["coeffs"] = [
        {"start": "P", "order": 1, "num": "1", "den": "3"},
        {"start": "P", "order": 1, "num": "1", "den": "6"},
    ]
    assert Element.from_dict(data) == Element.generator(pres, Letter.P).scale(Fraction(1, 2))


@pytest.mark.parametrize(
    "data",
    [
        {"family": "F1"},
        {"family": "F1", "m": 2, "coeffs": "p"},
        {"family": "F1", "m": 2, "coeffs": [{"start": "R", "order": 1}]},
        {"family": "F1", "m": 2, "coeffs": [{"start": "P", "order": 1, "num": "1", "den": "0"}]},
    ],
)
def test_malformed_element_dicts(data):
    with pytest.raises(InputError):
        Element.from_dict(data)


@pytest.mark.parametrize("n", [3, 4])
def test_zn_internal_unit(n):
    pres = Presentation.zn(n)
    unit = internal_unit(pres)
    assert unit is not None
    for _ in range(3):
        a = fake.element(pres)
        assert unit * a == a == a * unit


def test_left_regular_matrix_is_multiplicative():
    pres = Presentation.f(Family.F3, 2)
    a, b = fake.element(pres), fake.element(pres)
    assert left_regular_matrix(a * b) == left_regular_matrix(a) * left_regular_matrix(b)


def test_right_regular_matrix_reverses_products():
    pres = Presentation.f(Family.F1, 3)
    a, b = fake.element(pres), fake.element(pres)
    assert right_regular_matrix(a * b) == right_regular_matrix(b) * right_regular_matrix(a)


def test_unitalization_round_trip():
    pres = Presentation.f(Family.F4, 2)
    unital = unitalize(pres)
    a = fake.element(pres)
    scalar, back = unital.split(unital.vector(a, Fraction(2)))
    assert scalar == 2
    assert back == a
    assert unital.dimension == dimension(pres) + 1


@pytest.mark.parametrize(
    "pres, expected",
    [
        (Presentation.zn(3), 1),
        (Presentation.zn(4), 2),
        (Presentation.zn(7, Letter.P), 5),
        (Presentation.f(Family.F1, 2), 2),
        (Presentation.f(Family.F2, 2), 3),
        (Presentation.f(Family.F3, 3), 7),
        (Presentation.f(Family.F4, 3), 8),
    ],
)
def test_radical_dimension(pres, expected):
    assert radical_dimension(pres) == expected


def test_trace_form_is_symmetric():
    gram = trace_form(Presentation.f(Family.F2, 2))
    assert gram.rows == dimension(Presentation.f(Family.F2, 2)) + 1
    assert gram.as_sympy == gram.as_sympy.T
