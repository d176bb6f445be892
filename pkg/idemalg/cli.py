"""Command line entry point.

Every command prints one deterministic JSON report on stdout. Exit codes: 0 success, 1 a check
failed, 2 bad input, 3 the algebra violates a closed form hypothesis.
"""
from contextlib import contextmanager
import dataclasses
import json
import logging
from pathlib import Path
import random
from typing import Iterator, Optional, Tuple

import typer

from idemalg.classify import CoefficientProfile, Verdict, oracle_verdict
from idemalg.core.constants import ExitCode
from idemalg.core.exceptions import (
    HypothesisViolation,
    IdemAlgError,
    InputError,
    ParameterError,
    PresentationMismatch,
)
from idemalg.core.types_ import Family, Letter, Method, Suite, Summand
from idemalg.core.utils import parse_rationals, to_fraction
from idemalg.drazin import (
    algebra_drazin,
    alpha_p_plus_q,
    closed_form_drazin_alpha_pq,
    closed_form_group_lambda,
    matrix_drazin,
)
from idemalg.models import (
    LambdaSpec,
    ModelPair,
    build_example_z3,
    build_family_pair,
    build_lambda_pair,
    build_zn_pair,
    family_decomposition,
    verify_relations,
    w3_pair,
    w4_pair,
)
from idemalg.reports import RunReport
from idemalg.sampling import random_profile
from idemalg.settings import idemalg_settings as app_settings
from idemalg.verify import classify_case, run_verification
from idemalg.wordalg import Element, Presentation, internal_unit, structure_table

log = logging.getLogger(__name__)

app = typer.Typer(
    name="idemalg",
    help="Exact algebra of two idempotents: tables, models, Drazin inverses and classifiers.",
    no_args_is_help=True,
    add_completion=False,
)


@dataclasses.dataclass
class Options:
    pretty: bool = False
    timing: bool = False


@app.callback()
def main(
    ctx: typer.Context,
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log debug output to stderr."),
    pretty: bool = typer.Option(False, "--pretty", help="Indent the JSON report."),
    timing: bool = typer.Option(False, "--timing", help="Include wall clock timing."),
):
    if verbose:
        logging.basicConfig(level=logging.DEBUG, format="%(levelname)s %(name)s: %(message)s")
    ctx.obj = Options(pretty, timing)


@contextmanager
def _exit_codes() -> Iterator[None]:
    try:
        yield
    except (InputError, ParameterError, PresentationMismatch) as exc:
        typer.echo(f"Error: {exc}", err=True)
        raise typer.Exit(ExitCode.INPUT_ERROR)
    except HypothesisViolation as exc:
        typer.echo(f"Error: {exc}", err=True)
        raise typer.Exit(ExitCode.HYPOTHESIS_VIOLATION)
    except IdemAlgError as exc:
        typer.echo(f"Error: {exc}", err=True)
        raise typer.Exit(ExitCode.CHECK_FAILED)


def _emit(ctx: typer.Context, report: RunReport) -> None:
    options: Options = ctx.obj or Options()
    directory = app_settings.REPORT_DIR.value
    if directory:
        report.write(directory)
    typer.echo(report.to_json(options.pretty, options.timing))
    if not report.passed:
        raise typer.Exit(ExitCode.CHECK_FAILED)


def _presentation(
    family: Family, n: Optional[int], m: Optional[int], vanishing: Letter
) -> Presentation:
    if family is Family.ZN:
        if n is None:
            raise InputError("Zn needs --n.")
        return Presentation.zn(n, vanishing)
    if m is None:
        raise InputError(f"{family.value} needs --m.")
    return Presentation.f(family, m)


def _rationals(text: Optional[str]) -> Tuple:
    if not text:
        return ()
    return tuple(parse_rationals(part for part in text.split(",") if part.strip()))


def _profile(
    x: Optional[str],
    y: Optional[str],
    profile_file: Optional[Path],
    zero: bool,
    seed: Optional[int],
    length: int,
) -> CoefficientProfile:
    if zero:
        return CoefficientProfile.zero()
    if profile_file is not None:
        try:
            data = json.loads(profile_file.read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError(f"Could not read a profile from {profile_file}: {exc}") from exc
        if not isinstance(data, dict):
            raise InputError("A profile file holds an object with lists x and y.")
        return CoefficientProfile.from_dict(data)
    if seed is not None:
        rng = random.Random(seed)
        return random_profile(rng, length, app_settings.COEFFICIENT_RANGE)
    if not x and not y:
        raise InputError("Give the profile with --x/--y, --profile, --zero or --seed.")
    return CoefficientProfile(_rationals(x), _rationals(y))


def _element(
    path: Path, family: Family, n: Optional[int], m: Optional[int], vanishing: Letter
) -> Element:
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"Could not read an element from {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise InputError("An element file holds an object with the presentation and coeffs.")
    element = Element.from_dict(data)
    if n is not None or m is not None:
        requested = _presentation(family, n, m, vanishing)
        if requested != element.presentation:
            raise PresentationMismatch(
                f"The element lives in {element.presentation}, not in {requested}."
            )
    return element


def _classification_target(
    family: Family,
    n: Optional[int],
    m: Optional[int],
    vanishing: Letter,
    ambient_unit: bool,
    summand: Optional[Summand],
) -> Tuple[int, str, Letter]:
    """``(m, setting, vanishing)`` for :func:`idemalg.verify.classify_case`."""
    if family is Family.ZN:
        pres = _presentation(family, n, m, vanishing)
        if summand is not None:
            return pres.n, summand.value, pres.vanishing
        return pres.n, "unit" if ambient_unit else "no-unit", pres.vanishing
    if m is None:
        raise InputError(f"{family.value} needs --m.")
    size, z_vanishing, w_summand = family_decomposition(family, m)
    return size, w_summand.value, z_vanishing


@app.command()
def classify(
    ctx: typer.Context,
    family: Family = typer.Option(Family.ZN, "--family", case_sensitive=False),
    n: Optional[int] = typer.Option(None, "--n", help="Parameter of Zn."),
    m: Optional[int] = typer.Option(None, "--m", help="Parameter of F1..F4."),
    vanishing: Letter = typer.Option(Letter.Q, "--vanishing", case_sensitive=False),
    ambient_unit: bool = typer.Option(
        False, "--ambient-unit/--no-ambient-unit", help="The identity lies in alg(p,q)."
    ),
    summand: Optional[Summand] = typer.Option(None, "--summand", help="Classify in Zn + W3/W4."),
    x: Optional[str] = typer.Option(None, "--x", help="Comma separated x1,x2,..."),
    y: Optional[str] = typer.Option(None, "--y", help="Comma separated y1,y2,..."),
    profile_file: Optional[Path] = typer.Option(None, "--profile", help="JSON with lists x, y."),
    zero: bool = typer.Option(False, "--zero", help="Classify the zero element."),
    seed: Optional[int] = typer.Option(None, "--seed", help="Draw a random profile."),
    length: Optional[int] = typer.Option(None, "--length", help="Length of a random profile."),
    oracle: bool = typer.Option(False, "--oracle", help="Cross check with the rank oracle."),
):
    """Classify ``x1 p + y1 q + x2 pq + y2 qp + ...`` by the coefficient theorems."""
    report = RunReport("classify")
    with _exit_codes(), report.timed("classify"):
        size, setting, z_vanishing = _classification_target(
            family, n, m, vanishing, ambient_unit, summand
        )
        profile = _profile(x, y, profile_file, zero, seed, length or size)
        report.inputs.update(
            {
                "family": family.value,
                "n": n,
                "m": m,
                "setting": setting,
                "zm": size,
                "vanishing": z_vanishing.value,
                "profile": profile.as_dict(),
                "seed": seed,
            }
        )
        verdict, M = classify_case(size, setting, profile, z_vanishing)
        report.results["verdict"] = verdict.as_dict()
        if oracle or not verdict.decided_by_theorem:
            _oracle_check(report, verdict, oracle_verdict(M, with_spectrum=False))
    _emit(ctx, report)


def _oracle_check(report: RunReport, verdict: Verdict, oracle: Verdict) -> None:
    report.results["oracle"] = oracle.as_dict()
    agree = (oracle.kind, oracle.index) == (verdict.kind, verdict.index)
    report.check("theorem agrees with rank oracle", agree, None if agree else oracle.kind.value)


def _drazin_checks(report: RunReport, results) -> None:
    for name, result in results.items():
        report.results[name] = result.as_dict()
        report.check(f"{name} result satisfies the Drazin identities", result.verified)
    if len(results) == 2:
        first, second = results.values()
        same = first.inverse == second.inverse and first.index == second.index
        report.check("oracle and closed form agree", same)


@app.command()
def drazin(
    ctx: typer.Context,
    family: Family = typer.Option(Family.F1, "--family", case_sensitive=False),
    n: Optional[int] = typer.Option(None, "--n"),
    m: Optional[int] = typer.Option(None, "--m"),
    vanishing: Letter = typer.Option(Letter.Q, "--vanishing", case_sensitive=False),
    alpha: Optional[str] = typer.Option(None, "--alpha", help="Invert alpha p + q."),
    lam: Optional[str] = typer.Option(None, "--lambda", help="Use the lambda model."),
    x: Optional[str] = typer.Option(None, "--x"),
    y: Optional[str] = typer.Option(None, "--y"),
    element_file: Optional[Path] = typer.Option(
        None, "--element", help="JSON file holding the element to invert."
    ),
    method: Method = typer.Option(Method.ORACLE, "--method", case_sensitive=False),
    power: Optional[int] = typer.Option(
        None, "--power", help="The m of (pq)^(m-1) = (pq)^m assumed by the closed form."
    ),
):
    """Drazin inverse of ``alpha p + q``, of a coefficient profile or of an element file."""
    report = RunReport("drazin")
    with _exit_codes(), report.timed("drazin"):
        report.inputs.update(
            {
                "family": family.value,
                "n": n,
                "m": m,
                "alpha": alpha,
                "lambda": lam,
                "method": method.value,
                "power": power,
            }
        )
        wants_oracle = method in (Method.ORACLE, Method.BOTH)
        wants_closed = method in (Method.CLOSED_FORM, Method.BOTH)
        results = {}

        if lam is not None:
            if alpha is None or m is None:
                raise InputError("The lambda model needs --alpha and --m.")
            spec = LambdaSpec(m, to_fraction(lam))
            pair = build_lambda_pair(spec)
            a = to_fraction(alpha)
            report.inputs["model"] = str(pair)
            if wants_oracle:
                results["oracle"] = matrix_drazin(alpha_p_plus_q(a, pair))
            if wants_closed:
                results["closed-form"] = closed_form_group_lambda(a, spec, pair)
        elif element_file is not None:
            if alpha is not None or x or y:
                raise InputError("--element replaces --alpha and --x/--y.")
            if wants_closed:
                raise InputError("The closed form needs --alpha.")
            element = _element(element_file, family, n, m, vanishing)
            report.inputs["presentation"] = element.presentation.as_dict()
            report.inputs["element"] = str(element)
            results["oracle"] = algebra_drazin(element)
        else:
            pres = _presentation(family, n, m, vanishing)
            report.inputs["presentation"] = pres.as_dict()
            if alpha is not None:
                element = alpha_p_plus_q(to_fraction(alpha), pres)
            elif wants_closed:
                raise InputError("The closed form needs --alpha.")
            elif x or y:
                element = CoefficientProfile(_rationals(x), _rationals(y)).element(pres)
            else:
                raise InputError("Give --alpha, --element or a profile with --x/--y.")
            report.inputs["element"] = str(element)
            if wants_oracle:
                results["oracle"] = algebra_drazin(element)
            if wants_closed:
                results["closed-form"] = closed_form_drazin_alpha_pq(
                    to_fraction(alpha), pres, power
                )
        _drazin_checks(report, results)
    _emit(ctx, report)


@app.command()
def table(
    ctx: typer.Context,
    family: Family = typer.Option(..., "--family", case_sensitive=False),
    n: Optional[int] = typer.Option(None, "--n"),
    m: Optional[int] = typer.Option(None, "--m"),
    vanishing: Letter = typer.Option(Letter.Q, "--vanishing", case_sensitive=False),
):
    """Basis and multiplication table of ``alg(p,q)``."""
    report = RunReport("table")
    with _exit_codes(), report.timed("table"):
        pres = _presentation(family, n, m, vanishing)
        report.inputs.update(pres.as_dict())
        built = structure_table(pres)
        unit = internal_unit(pres)
        report.results.update(
            {
                "dimension": len(built.basis),
                "table": built.as_dict(),
                "internal_unit": None if unit is None else str(unit),
            }
        )
    _emit(ctx, report)


def _model(
    family: Optional[Family],
    n: Optional[int],
    m: Optional[int],
    vanishing: Letter,
    ambient_unit: bool,
    example: bool,
    lam: Optional[str],
    summand: Optional[Summand],
) -> ModelPair:
    if example:
        return build_example_z3()
    if lam is not None:
        if m is None:
            raise InputError("The lambda model needs --m.")
        return build_lambda_pair(LambdaSpec(m, to_fraction(lam)))
    if family is None:
        if summand is None:
            raise InputError("Give --family, --summand, --lambda or --example.")
        return w3_pair() if summand is Summand.W3 else w4_pair()
    pres = _presentation(family, n, m, vanishing)
    if pres.family is Family.ZN:
        return build_zn_pair(pres.n, ambient_unit, pres.vanishing)
    return build_family_pair(pres.family, pres.m)


@app.command()
def models(
    ctx: typer.Context,
    family: Optional[Family] = typer.Option(None, "--family", case_sensitive=False),
    n: Optional[int] = typer.Option(None, "--n"),
    m: Optional[int] = typer.Option(None, "--m"),
    vanishing: Letter = typer.Option(Letter.Q, "--vanishing", case_sensitive=False),
    ambient_unit: bool = typer.Option(False, "--ambient-unit/--no-ambient-unit"),
    example: bool = typer.Option(False, "--example", help="The pinned 3x3 pair with qp = 0."),
    lam: Optional[str] = typer.Option(None, "--lambda"),
    summand: Optional[Summand] = typer.Option(None, "--summand"),
):
    """Idempotent matrix pairs, with their relations checked."""
    report = RunReport("models")
    with _exit_codes(), report.timed("models"):
        pair = _model(family, n, m, vanishing, ambient_unit, example, lam, summand)
        report.inputs.update(
            {
                "family": None if family is None else family.value,
                "n": n,
                "m": m,
                "example": example,
                "lambda": lam,
                "summand": None if summand is None else summand.value,
            }
        )
        report.results["model"] = pair.as_dict()
        for relation in verify_relations(pair).checks:
            report.check(relation.name, relation.passed)
    _emit(ctx, report)


@app.command()
def verify(
    ctx: typer.Context,
    suite: Suite = typer.Option(Suite.ALL, "--suite", case_sensitive=False),
    seed: Optional[int] = typer.Option(None, "--seed"),
    samples: Optional[int] = typer.Option(None, "--samples", help="Profiles per setting."),
):
    """Run the verification suites and report pass counts."""
    report = RunReport("verify")
    with _exit_codes():
        overrides = {}
        if seed is not None:
            overrides["SEED"] = seed
        if samples is not None:
            overrides["SAMPLES"] = samples
        settings = dataclasses.replace(app_settings, **overrides)
        run_verification(suite, settings, report)
    _emit(ctx, report)

