"""Verification suites.

Every suite is a deterministic sweep of exact checks for a given seed and writes one
:class:`CheckResult` per presentation or setting into the shared :class:`RunReport`.
"""
from fractions import Fraction
import logging
import random
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from idemalg.classify import (
    CoefficientProfile,
    Verdict,
    classify_zm,
    classify_zm_w3,
    classify_zm_w4,
    countzero_check,
    direct_sum_matrix,
    index_bound,
    oracle_verdict,
    profile_matrix,
    psi_threshold,
    quarter_bound,
    spectrum_oracle,
    zn_model,
)
from idemalg.core.exceptions import IdemAlgError
from idemalg.core.types_ import CouplingCase, Family, Letter, Suite, Summand, VerdictKind
from idemalg.core.utils import to_fraction
from idemalg.drazin import (
    algebra_drazin,
    alpha_p_plus_q,
    closed_form_drazin_alpha_pq,
    closed_form_group_lambda,
    closed_form_via_witnesses,
    matrix_drazin,
)
from idemalg.linalg import RationalMatrix
from idemalg.models import (
    LambdaSpec,
    basis_rank,
    build_example_z3,
    build_family_pair,
    build_lambda_pair,
    contains_identity,
    represent,
)
from idemalg.reports import RunReport, canonical_json
from idemalg.sampling import SHAPES, random_element, random_profile
from idemalg.settings_type import IdemAlgSettings
from idemalg.wordalg import (
    Element,
    Presentation,
    build_structure_table,
    dimension,
    internal_unit,
    radical_dimension,
    tightly_coupled_witness,
)

log = logging.getLogger(__name__)

SuiteRunner = Callable[[RunReport, IdemAlgSettings, random.Random], None]

FAMILIES = (Family.F1, Family.F2, Family.F3, Family.F4)
#: dim alg(p,q) = 4m - offset
DIMENSION_OFFSETS = {Family.F1: 3, Family.F2: 2, Family.F3: 2, Family.F4: 1}
#: dim of the nilpotent radical = 4m - offset
RADICAL_OFFSETS = {Family.F1: 6, Family.F2: 5, Family.F3: 5, Family.F4: 4}
ALPHAS = ("1", "2", "-2", "1/3", "-1")
DRAZIN_MS = (2, 3, 4)
LAMBDAS = ("2", "-1", "1/2", "3")
LAMBDA_ALPHAS = ("1", "-1", "2")
LAMBDA_MS = (2, 3)
CLASSIFIER_SETTINGS = ("unit", "no-unit", Summand.W3.value, Summand.W4.value)


def _inclusive(bounds: Tuple[int, int]) -> range:
    return range(bounds[0], bounds[1] + 1)


def _guarded(report: RunReport, name: str, check: Callable[[], Tuple[bool, Optional[str]]]):
    try:
        passed, residual = check()
    except IdemAlgError as exc:
        passed, residual = False, f"{type(exc).__name__}: {exc}"
    report.check(name, passed, residual)


def suite_dims(report: RunReport, settings: IdemAlgSettings, rng: random.Random) -> None:
    for family in FAMILIES:
        for m in _inclusive(settings.FAMILY_RANGE):
            pres = Presentation.f(family, m)
            expected = 4 * m - DIMENSION_OFFSETS[family]

            def table_check(pres=pres, expected=expected):
                table = build_structure_table(pres)
                size = len(table.basis)
                return size == expected, None if size == expected else f"dimension {size}"

            _guarded(report, f"dim {pres} = {expected}, table associative", table_check)

        for m in _inclusive(settings.MODEL_RANGE):
            expected = 4 * m - DIMENSION_OFFSETS[family]

            def model_check(family=family, m=m, expected=expected):
                rank = basis_rank(build_family_pair(family, m))
                return rank == expected, None if rank == expected else f"rank {rank}"

            _guarded(report, f"model rank {family.value}({m}) = {expected}", model_check)

    for n in _inclusive(settings.ZN_RANGE):
        pres = Presentation.zn(n, settings.ZN_ODD_VANISHING)
        size = dimension(pres)
        report.check(f"dim {pres} = {n}", size == n, None if size == n else f"dimension {size}")


def suite_radical(report: RunReport, settings: IdemAlgSettings, rng: random.Random) -> None:
    cases: List[Tuple[Presentation, int]] = []
    for family in FAMILIES:
        for m in _inclusive(settings.MODEL_RANGE):
            cases.append((Presentation.f(family, m), 4 * m - RADICAL_OFFSETS[family]))
    for n in _inclusive(settings.ZN_RANGE):
        cases.append((Presentation.zn(n, settings.ZN_ODD_VANISHING), n - 2))

    for pres, expected in cases:
        actual = radical_dimension(pres)
        report.check(
            f"dim N({pres}) = {expected}",
            actual == expected,
            None if actual == expected else f"radical dimension {actual}",
        )


def triple_drazin(elem: Element) -> Element:
    """``((a^D)^D)^D``, which equals ``a^D`` for every element."""
    once = algebra_drazin(elem).inverse
    return algebra_drazin(algebra_drazin(once).inverse).inverse


def suite_drazin(report: RunReport, settings: IdemAlgSettings, rng: random.Random) -> None:
    for family in FAMILIES:
        for m in DRAZIN_MS:
            pres = Presentation.f(family, m)
            for alpha in ALPHAS:
                a = to_fraction(alpha)

                def closed_form_check(pres=pres, a=a):
                    oracle = algebra_drazin(alpha_p_plus_q(a, pres))
                    closed = closed_form_drazin_alpha_pq(a, pres)
                    bound = 3 if a == -1 else 2
                    problems = []
                    if closed.inverse != oracle.inverse:
                        problems.append(f"closed form {closed.inverse} != oracle {oracle.inverse}")
                    if not closed.verified or closed.index > bound:
                        problems.append(f"index {closed.index}, verified {closed.verified}")
                    if a != -1:
                        witnessed = closed_form_via_witnesses(a, pres)
                        if witnessed.inverse != oracle.inverse:
                            problems.append("one sided witnesses disagree")
                    return not problems, "; ".join(problems) or None

                _guarded(report, f"closed form alpha={alpha} in {pres}", closed_form_check)

        for m in DRAZIN_MS:
            pair = build_family_pair(family, m)
            for alpha in ALPHAS:
                a = to_fraction(alpha)

                def model_check(pair=pair, a=a):
                    closed = closed_form_drazin_alpha_pq(a, pair)
                    oracle = matrix_drazin(alpha_p_plus_q(a, pair))
                    return closed.inverse == oracle.inverse, None

                _guarded(report, f"closed form alpha={alpha} on {pair}", model_check)

            def oracle_check(pair=pair):
                pres = pair.intended
                for i in range(settings.ORACLE_SAMPLES):
                    elem = random_element(rng, pres, settings.COEFFICIENT_RANGE)
                    inverse = algebra_drazin(elem).inverse
                    if represent(inverse, pair) != matrix_drazin(represent(elem, pair)).inverse:
                        return False, f"sample {i}: oracles differ on {elem}"
                    if triple_drazin(elem) != inverse:
                        return False, f"sample {i}: ((a^D)^D)^D != a^D for {elem}"
                return True, None

            name = f"oracles agree and ((a^D)^D)^D = a^D on {pair}"
            _guarded(report, name, oracle_check)


def suite_lambda(report: RunReport, settings: IdemAlgSettings, rng: random.Random) -> None:
    for m in LAMBDA_MS:
        for lam in LAMBDAS:
            spec = LambdaSpec(m, to_fraction(lam))
            pair = build_lambda_pair(spec)
            for alpha in LAMBDA_ALPHAS:

                def group_check(spec=spec, pair=pair, alpha=alpha):
                    closed = closed_form_group_lambda(to_fraction(alpha), spec, pair)
                    oracle = matrix_drazin(alpha_p_plus_q(to_fraction(alpha), pair))
                    passed = (
                        closed.verified
                        and closed.index == 1
                        and oracle.index == 1
                        and closed.inverse == oracle.inverse
                    )
                    residual = None if passed else f"index {closed.index}, oracle {oracle.index}"
                    return passed, residual

                _guarded(report, f"group inverse alpha={alpha} in {spec}", group_check)


def classify_case(
    m: int, setting: str, profile: CoefficientProfile, vanishing: Letter
) -> Tuple[Verdict, RationalMatrix]:
    """The theorem verdict together with the matrix it is checked against."""
    if setting in ("unit", "no-unit"):
        unit = setting == "unit"
        verdict = classify_zm(profile, m, unit, vanishing)
        return verdict, profile_matrix(profile, zn_model(m, unit, vanishing))
    summand = Summand(setting)
    classifier = classify_zm_w3 if summand is Summand.W3 else classify_zm_w4
    return classifier(profile, m, vanishing), direct_sum_matrix(profile, m, summand, vanishing)


def classifier_cases(
    settings: IdemAlgSettings,
) -> Iterator[Tuple[int, str, List[CoefficientProfile]]]:
    rng = random.Random(settings.SEED)
    for m in _inclusive(settings.ZN_RANGE):
        for setting in CLASSIFIER_SETTINGS:
            profiles = [
                random_profile(rng, m, settings.COEFFICIENT_RANGE, SHAPES[i % len(SHAPES)])
                for i in range(settings.SAMPLES)
            ]
            yield m, setting, profiles


def _setting_label(m: int, setting: str) -> str:
    if setting in ("unit", "no-unit"):
        return f"Z_{m} ({setting})"
    return f"Z_{m} + {setting}"


def _mismatch(profile: CoefficientProfile, verdict: Verdict, oracle) -> str:
    return canonical_json(
        {"profile": profile.as_dict(), "theorem": verdict.as_dict(), "oracle": oracle}
    )


def suite_classify(report: RunReport, settings: IdemAlgSettings, rng: random.Random) -> None:
    undecided = 0
    for m, setting, profiles in classifier_cases(settings):
        mismatch = None
        for profile in profiles:
            verdict, M = classify_case(m, setting, profile, settings.ZN_ODD_VANISHING)
            if not verdict.decided_by_theorem:
                undecided += 1
                continue
            oracle = oracle_verdict(M, with_spectrum=False)
            if (oracle.kind, oracle.index) != (verdict.kind, verdict.index):
                mismatch = _mismatch(profile, verdict, oracle.as_dict())
                break
        report.check(
            f"rank oracle agrees on {len(profiles)} profiles in {_setting_label(m, setting)}",
            mismatch is None,
            mismatch,
        )
    report.results["classify_undecided"] = undecided
    report.results["psi_thresholds"] = {
        str(m): {
            "y1=0": psi_threshold(m, 1, 0, settings.ZN_ODD_VANISHING),
            "x1=0": psi_threshold(m, 0, 1, settings.ZN_ODD_VANISHING),
            "quarter": quarter_bound(m, 0),
        }
        for m in _inclusive(settings.ZN_RANGE)
    }


def suite_spectrum(report: RunReport, settings: IdemAlgSettings, rng: random.Random) -> None:
    for m, setting, profiles in classifier_cases(settings):
        mismatch = None
        for profile in profiles:
            verdict, M = classify_case(m, setting, profile, settings.ZN_ODD_VANISHING)
            if not verdict.decided_by_theorem:
                continue
            spectrum = spectrum_oracle(M)
            if spectrum.values != verdict.spectrum or spectrum.irrational_factors:
                mismatch = _mismatch(profile, verdict, spectrum.as_dict())
                break
        report.check(
            f"spectrum claims hold on {len(profiles)} profiles in {_setting_label(m, setting)}",
            mismatch is None,
            mismatch,
        )


def suite_index(report: RunReport, settings: IdemAlgSettings, rng: random.Random) -> None:
    vanishing = settings.ZN_ODD_VANISHING
    largest: Dict[int, int] = {}
    for m in _inclusive(settings.ZN_RANGE):
        pres = Presentation.zn(m, vanishing)
        pair = zn_model(m, False, vanishing)
        profiles = [CoefficientProfile((0, 1), (0,))]  # pq
        profiles += [
            random_profile(rng, m, settings.COEFFICIENT_RANGE, SHAPES[i % len(SHAPES)])
            for i in range(settings.SAMPLES)
        ]
        violation = None
        for profile in profiles:
            truncated = profile.truncated(pres)
            nilpotent = truncated.x1 == 0 and truncated.y1 == 0
            index = matrix_drazin(profile_matrix(truncated, pair)).index
            largest[m % 4] = max(largest.get(m % 4, 0), index)
            bound = index_bound(m, nilpotent)
            if index > bound:
                violation = f"{profile.as_dict()} has index {index} > {bound}"
                break
        report.check(f"Drazin indices in {pres} within bounds", violation is None, violation)

    for residue in sorted(largest):
        report.check(
            f"some element with m = {residue} mod 4 has index > 1",
            largest[residue] > 1,
            f"largest index {largest[residue]}",
        )


def suite_countzero(report: RunReport, settings: IdemAlgSettings, rng: random.Random) -> None:
    counterexample = None
    for i in range(settings.COUNTZERO_SAMPLES):
        length = rng.randint(2, 12)
        shape = "dense" if i % 2 else "y1-zero"
        drawn = random_profile(rng, length, settings.COEFFICIENT_RANGE, shape)
        profile = CoefficientProfile(drawn.x, (Fraction(0),) + drawn.y[1:])
        if not countzero_check(profile):
            counterexample = canonical_json(profile.as_dict())
            break
    report.check(
        f"psi1 and psi2 vanish to the order of psi on {settings.COUNTZERO_SAMPLES} profiles",
        counterexample is None,
        counterexample,
    )


def suite_example(report: RunReport, settings: IdemAlgSettings, rng: random.Random) -> None:
    pair = build_example_z3()
    P, Q = pair.P, pair.Q
    A = P + Q
    report.check("Q1 P1 = 0", (Q * P).is_zero)
    report.check("rank(P1 + Q1) = 2", A.rank() == 2, f"rank {A.rank()}")
    report.check("rank((P1 + Q1)^2) = 2", (A * A).rank() == 2, f"rank {(A * A).rank()}")
    report.check("identity outside alg(P1, Q1)", not contains_identity(pair))

    unit = internal_unit(pair.intended)
    expected = RationalMatrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 0]])
    report.check(
        "internal unit is diag(1, 1, 0)",
        unit is not None and represent(unit, pair) == expected,
        None if unit is None else str(represent(unit, pair).as_json()),
    )

    verdict = classify_zm(CoefficientProfile((1,), (1,)), 3, False)
    spectrum = spectrum_oracle(A)
    report.check(
        "P1 + Q1 is properly group invertible with spectrum {0, 1}",
        verdict.kind is VerdictKind.PROPERLY_GROUP_INVERTIBLE
        and verdict.spectrum == spectrum.values == {Fraction(0), Fraction(1)},
        canonical_json(verdict.as_dict()),
    )


def suite_coupling(report: RunReport, settings: IdemAlgSettings, rng: random.Random) -> None:
    for m in _inclusive(settings.MODEL_RANGE):
        for k in range(1, m):
            for case in CouplingCase:

                def coupling_check(case=case, m=m, k=k):
                    witness = tightly_coupled_witness(case, m, k)
                    return witness.verify(), None

                _guarded(report, f"tight coupling case {case.value}, m={m}, k={k}", coupling_check)


SUITES: Dict[Suite, SuiteRunner] = {
    Suite.DIMS: suite_dims,
    Suite.RADICAL: suite_radical,
    Suite.DRAZIN: suite_drazin,
    Suite.LAMBDA: suite_lambda,
    Suite.CLASSIFY: suite_classify,
    Suite.SPECTRUM: suite_spectrum,
    Suite.INDEX: suite_index,
    Suite.COUNTZERO: suite_countzero,
    Suite.EXAMPLE: suite_example,
    Suite.COUPLING: suite_coupling,
}


def run_verification(
    suite: Suite, settings: IdemAlgSettings, report: Optional[RunReport] = None
) -> RunReport:
    suite = Suite(suite)
    report = report or RunReport("verify")
    report.inputs.update(
        {
            "suite": suite.value,
            "seed": settings.SEED,
            "samples": settings.SAMPLES,
            "vanishing": settings.ZN_ODD_VANISHING.value,
        }
    )
    selected = list(SUITES) if suite is Suite.ALL else [suite]
    for name in selected:
        start = len(report.checks)
        log.info("Running suite %s.", name.value)
        with report.timed(name.value):
            SUITES[name](report, settings, random.Random(settings.SEED))
        checks = report.checks[start:]
        report.results[name.value] = {
            "passed": sum(c.passed for c in checks),
            "failed": sum(not c.passed for c in checks),
        }
    return report
