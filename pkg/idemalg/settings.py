import importlib
import os
import warnings

from idemalg.core.constants import SETTINGS_MODULE_ENV
from idemalg.core.exceptions import WrongUsage
from idemalg.settings_type import IdemAlgSettings

idemalg_settings: IdemAlgSettings

if module_name := os.environ.get(SETTINGS_MODULE_ENV):
    user_settings = getattr(importlib.import_module(module_name), "IDEMALG", None)
    if isinstance(user_settings, IdemAlgSettings):
        idemalg_settings = user_settings

    else:
        raise WrongUsage(
            f"IDEMALG settings should be of type "
            f"{IdemAlgSettings}, but you provided {type(user_settings)}"
        )

else:  # pragma: no cover
    warnings.warn("You have not provided any custom idemalg settings falling back to defaults")
    idemalg_settings = IdemAlgSettings()
