import math

#: multiplicity of 0 as a root of the zero polynomial, compares above any threshold.
INFINITE = math.inf

SETTINGS_MODULE_ENV = "IDEMALG_SETTINGS_MODULE"
REPORT_DIR_ENV = "IDEMALG_REPORT_DIR"


class ExitCode:
    SUCCESS = 0
    CHECK_FAILED = 1
    INPUT_ERROR = 2
    HYPOTHESIS_VIOLATION = 3
