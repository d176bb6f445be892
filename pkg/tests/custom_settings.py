from idemalg.core.types_ import Letter
from idemalg.settings_type import IdemAlgSettings

IDEMALG = IdemAlgSettings(SEED=7, SAMPLES=3, ZN_ODD_VANISHING=Letter.P)
