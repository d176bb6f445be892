import importlib

import pytest

from idemalg import settings as settings_module
from idemalg.core.constants import REPORT_DIR_ENV, SETTINGS_MODULE_ENV
from idemalg.core.exceptions import ParameterError, WrongUsage
from idemalg.core.types_ import Letter
from idemalg.settings_type import EnvSetting, IdemAlgSettings


@pytest.fixture()
def default_app_settings() -> IdemAlgSettings:
    return IdemAlgSettings()


def test_defaults(default_app_settings):
    assert default_app_settings.SEED == 0
    assert default_app_settings.ZN_ODD_VANISHING is Letter.Q
    assert default_app_settings.ZN_RANGE == (3, 12)


def test_report_dir_is_read_from_the_environment(monkeypatch, default_app_settings):
    monkeypatch.delenv(REPORT_DIR_ENV, raising=False)
    assert default_app_settings.REPORT_DIR.value is None
    monkeypatch.setenv(REPORT_DIR_ENV, "/tmp/idemalg-reports")
    assert default_app_settings.REPORT_DIR.value == "/tmp/idemalg-reports"


def test_env_setting_override(monkeypatch):
    monkeypatch.setenv(REPORT_DIR_ENV, "/ignored")
    settings = IdemAlgSettings(REPORT_DIR=EnvSetting.override("/reports"))
    assert settings.REPORT_DIR.value == "/reports"


@pytest.mark.parametrize(
    "kwargs",
    [{"SAMPLES": 0}, {"COEFFICIENT_RANGE": -1}, {"ZN_RANGE": (5, 3)}, {"FAMILY_RANGE": (1, 4)}],
)
def test_invalid_settings(kwargs):
    with pytest.raises(ParameterError):
        IdemAlgSettings(**kwargs)


def test_override_setting(app_settings, override_idemalg):
    with override_idemalg(name="SAMPLES", replace=2):
        assert app_settings.SAMPLES == 2
    assert app_settings.SAMPLES == 500


def test_load_user_settings_module(monkeypatch):
    monkeypatch.setenv(SETTINGS_MODULE_ENV, "tests.custom_settings")
    try:
        reloaded = importlib.reload(settings_module)
        assert reloaded.idemalg_settings.SEED == 7
        assert reloaded.idemalg_settings.ZN_ODD_VANISHING is Letter.P
    finally:
        monkeypatch.delenv(SETTINGS_MODULE_ENV)
        with pytest.warns(UserWarning):
            importlib.reload(settings_module)


def test_settings_module_must_define_settings(monkeypatch):
    monkeypatch.setenv(SETTINGS_MODULE_ENV, "tests.conftest")
    with pytest.raises(WrongUsage):
        importlib.reload(settings_module)
    monkeypatch.delenv(SETTINGS_MODULE_ENV)
    with pytest.warns(UserWarning):
        importlib.reload(settings_module)
