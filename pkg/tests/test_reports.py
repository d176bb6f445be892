import json
import random

from idemalg.core.types_ import Family
from idemalg.reports import RunReport, canonical_json
from idemalg.sampling import SHAPES, random_element, random_profile, random_scalar
from idemalg.wordalg import Presentation


def test_canonical_json_sorts_keys():
    assert canonical_json({"b": 1, "a": [1, 2]}) == '{"a":[1,2],"b":1}'
    assert json.loads(canonical_json({"b": 1}, pretty=True)) == {"b": 1}


def test_report_summary_and_failures():
    report = RunReport("demo")
    assert report.check("fine", True)
    assert not report.check("broken", False, "residual 1")
    assert not report.passed
    assert [c.name for c in report.failures] == ["broken"]
    assert report.summary() == {"passed": 1, "failed": 1, "total": 2}
    data = report.as_dict()
    assert data["checks"][1] == {"name": "broken", "passed": False, "residual": "residual 1"}


def test_timing_is_opt_in():
    report = RunReport("demo")
    with report.timed("step"):
        pass
    assert "timing" not in report.as_dict()
    assert "step" in report.as_dict(include_timing=True)["timing"]


def test_random_profiles_have_their_shape():
    rng = random.Random(4)
    for shape in SHAPES:
        for _ in range(10):
            prof = random_profile(rng, 5, 3, shape)
            assert len(prof) == 5
            if shape == "y1-zero":
                assert prof.x1 != 0 and prof.y1 == 0
            elif shape == "x1-zero":
                assert prof.x1 == 0 and prof.y1 != 0
            elif shape == "nilpotent":
                assert prof.x1 == prof.y1 == 0


def test_random_draws_follow_the_seed():
    pres = Presentation.zn(6)
    first = random_element(random.Random(9), pres, 2)
    second = random_element(random.Random(9), pres, 2)
    assert first == second
    assert random_scalar(random.Random(1), 1, nonzero=True) != 0


def test_random_scalars_include_halves():
    rng = random.Random(2)
    drawn = [random_scalar(rng, 3) for _ in range(60)]
    assert {x.denominator for x in drawn} == {1, 2}
    assert all(abs(x) <= 3 for x in drawn)
    pres = Presentation.f(Family.F1, 3)
    elements = [random_element(random.Random(seed), pres, 3) for seed in range(10)]
    assert any(v.denominator == 2 for e in elements for v in e.coeffs.values())
