from fractions import Fraction

import pytest
import sympy

from idemalg.classify import (
    CoefficientProfile,
    Verdict,
    classify_zm,
    classify_zm_w3,
    classify_zm_w4,
    countzero_check,
    index_bound,
    oracle_verdict,
    quarter_bound,
    psi_bundle,
    psi_threshold,
    root_zero_multiplicity,
    spectrum_oracle,
)
from idemalg.classify.types_ import t
from idemalg.core.constants import INFINITE
from idemalg.core.exceptions import InputError, ParameterError, PreconditionViolation, WrongUsage
from idemalg.core.types_ import Letter, Rule, Summand, VerdictKind
from idemalg.linalg import RationalMatrix
from idemalg.verify import classify_case
from idemalg.wordalg import Presentation

from .conftest import fake

PGI = VerdictKind.PROPERLY_GROUP_INVERTIBLE
SHAPES = ("dense", "y1-zero", "x1-zero", "nilpotent")


def profile(x, y) -> CoefficientProfile:
    return CoefficientProfile(tuple(x), tuple(y))


def test_profile_is_padded_and_parsed():
    prof = CoefficientProfile.parse(["1", "-1/2"], ["3"])
    assert prof.x == (Fraction(1), Fraction(-1, 2))
    assert prof.y == (Fraction(3), Fraction(0))
    assert prof.xi(5) == 0
    assert CoefficientProfile.from_dict(prof.as_dict()) == prof


def test_profile_rejects_floats():
    with pytest.raises(InputError):
        CoefficientProfile.from_dict({"x": [0.5], "y": []})


def test_profile_truncation_drops_vanishing_words():
    prof = profile((1, 2, 3), (4, 5, 6))
    truncated = prof.truncated(Presentation.zn(3, Letter.Q))
    assert truncated.x == (1, 2, 0)
    assert truncated.y == (4, 0, 0)


def test_psi_of_p_plus_q():
    bundle = psi_bundle(profile((1,), (1,)))
    assert bundle.psi.all_coeffs() == [-1, 1]
    assert bundle.as_dict()["psi"] == ["1", "-1"]


def test_root_zero_multiplicity():
    assert root_zero_multiplicity(sympy.Poly(0, t, domain=sympy.QQ)) == INFINITE
    assert root_zero_multiplicity(t**3 + t**4) == 3
    assert root_zero_multiplicity(1 + t) == 0


def test_countzero_needs_y1_zero():
    with pytest.raises(PreconditionViolation):
        countzero_check(profile((1, 2), (1, 0)))


def test_countzero_on_random_profiles():
    for _ in range(40):
        drawn = fake.profile(fake.random_int(2, 9), "y1-zero")
        assert countzero_check(drawn)


def test_quarter_bound():
    assert quarter_bound(5, 0) == 1
    assert quarter_bound(5, 1) == 2
    assert quarter_bound(8, 0) == 2
    assert quarter_bound(9, 0) == 2


def test_psi_threshold_counts_words():
    assert psi_threshold(5, 1, 0) == quarter_bound(5, 0)
    assert psi_threshold(6, 1, 0) == 2
    assert psi_threshold(6, 0, 1) == 2
    with pytest.raises(WrongUsage):
        psi_threshold(6, 1, 1)
    with pytest.raises(WrongUsage):
        psi_threshold(6, 0, 0)


@pytest.mark.parametrize(
    "m, nilpotent, expected",
    [(4, True, 2), (5, True, 3), (6, True, 3), (7, True, 4), (5, False, 2), (8, False, 2)],
)
def test_index_bound(m, nilpotent, expected):
    assert index_bound(m, nilpotent) == expected


def test_verdict_index_is_required_for_drazin_only():
    with pytest.raises(WrongUsage):
        Verdict(VerdictKind.DRAZIN_ONLY, {Fraction(0)}, Rule.ORACLE)
    with pytest.raises(WrongUsage):
        Verdict(VerdictKind.ZERO, {Fraction(0)}, Rule.ZERO, index=1)


def test_zero_element():
    verdict = classify_zm(CoefficientProfile.zero(3), 5, True)
    assert verdict.kind is VerdictKind.ZERO
    assert verdict.group_invertible


def test_words_beyond_the_algebra_vanish():
    verdict = classify_zm(profile((0, 0, 0, 5), (0, 0, 0, 0)), 4, True)
    assert verdict.kind is VerdictKind.ZERO


def test_unit_case():
    verdict = classify_zm(profile((1,), (1,)), 4, True)
    assert verdict.kind is VerdictKind.INVERTIBLE
    assert verdict.rule is Rule.UNIT_SPECTRUM
    assert verdict.spectrum == {Fraction(1)}


def test_no_unit_case_adds_zero_to_the_spectrum():
    verdict = classify_zm(profile((1,), (2,)), 4, False)
    assert verdict.kind is PGI
    assert verdict.rule is Rule.NO_UNIT_INVERTIBLE_PART
    assert verdict.spectrum == {Fraction(0), Fraction(1), Fraction(2)}


def test_idempotent_passes_psi_test():
    verdict = classify_zm(profile((1,), (0,)), 6, True)
    assert verdict.kind is PGI
    assert verdict.rule is Rule.UNIT_PSI
    assert verdict.details["psi_multiplicity"] == "infinite"


def test_psi_test_failure_gives_index():
    # (p + qpq)^2 = p in Z_6
    verdict = classify_zm(profile((1, 0, 0), (0, 0, 1)), 6, True)
    assert verdict.kind is VerdictKind.DRAZIN_ONLY
    assert verdict.index == 2
    assert verdict.details == {"psi_multiplicity": 1, "threshold": 2}


def test_nilpotent_word():
    verdict = classify_zm(profile((0, 1), (0, 0)), 4, False)
    assert verdict.kind is VerdictKind.NILPOTENT
    assert verdict.rule is Rule.NILPOTENT
    assert verdict.index == 2


def test_w3_nonzero_trace():
    verdict = classify_zm_w3(profile((1,), (1,)), 2)
    assert verdict.kind is PGI
    assert verdict.rule is Rule.W3_NONZERO_TRACE
    assert verdict.spectrum == {Fraction(0), Fraction(1), Fraction(2)}


def test_w3_zero_trace_fails():
    verdict = classify_zm_w3(profile((1,), (-1,)), 2)
    assert verdict.kind is VerdictKind.DRAZIN_ONLY
    assert verdict.rule is Rule.W3_FAILS
    assert verdict.index >= 2


def test_w4_zero_summand():
    verdict = classify_zm_w4(profile((1, 0, -1), (0, 0, 0)), 2)
    assert verdict.kind is PGI
    assert verdict.rule is Rule.W4_ZERO_SUMMAND


def test_w4_nonzero_trace():
    verdict = classify_zm_w4(profile((2,), (0,)), 3)
    assert verdict.kind is PGI
    assert verdict.rule is Rule.W4_NONZERO_TRACE
    assert verdict.decided_by_theorem


def test_w4_falls_back_to_the_model():
    verdict = classify_zm_w4(profile((1,), (1,)), 2)
    assert verdict.rule is Rule.ORACLE
    assert not verdict.decided_by_theorem


def test_direct_sums_need_m_at_least_two():
    with pytest.raises(ParameterError):
        classify_zm_w3(profile((1,), (1,)), 1)


@pytest.mark.oracle
@pytest.mark.parametrize("m", [3, 4, 5, 6, 7])
@pytest.mark.parametrize("setting", ["unit", "no-unit", Summand.W3.value, Summand.W4.value])
def test_theorems_agree_with_rank_oracle(m, setting):
    for i in range(8):
        prof = fake.profile(m, SHAPES[i % len(SHAPES)])
        verdict, M = classify_case(m, setting, prof, Letter.Q)
        oracle = oracle_verdict(M)
        assert (verdict.kind, verdict.index) == (oracle.kind, oracle.index), prof.as_dict()
        if verdict.decided_by_theorem:
            assert verdict.spectrum == oracle.spectrum, prof.as_dict()


def test_oracle_verdicts():
    assert oracle_verdict(RationalMatrix.identity(2)).kind is VerdictKind.INVERTIBLE
    assert oracle_verdict(RationalMatrix.zeros(2)).kind is VerdictKind.ZERO
    nilpotent = oracle_verdict(RationalMatrix.from_rows([[0, 1], [0, 0]]))
    assert nilpotent.kind is VerdictKind.NILPOTENT
    assert nilpotent.index == 2


def test_spectrum_oracle_counts_irrational_factors():
    spectrum = spectrum_oracle(RationalMatrix.from_rows([[0, 2, 0], [1, 0, 0], [0, 0, 3]]))
    assert spectrum.values == {Fraction(3)}
    assert spectrum.irrational_factors == 1
