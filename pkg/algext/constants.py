"""
algext.constants
~~~~~~~~~~~~~~~~
Pinned constants, default budgets and tolerances.

Every report carries :func:`pinned_constants` so results stay comparable
across runs.
"""
from typing import Any, Dict

# Characteristic threshold exponent: large_char iff p > (d/eps)^C_STAR
C_STAR: int = 4
# Field-size floor multiplier: q >= C0 * d^5 / eps^2
C0: int = 32
# Absolute constant of the mod-M error bound
MOD_M_C: int = 4
# Constant-fraction extractor: n >= CONST_FRACTION_C
CONST_FRACTION_C: int = 8

# Default budgets
ENUMERATION_BUDGET: int = 2 ** 30
DFT_BUDGET: int = 2 ** 24
SAMPLE_BUDGET: int = 10 ** 5

CLOSURE_CAP: int = 2 ** 20
MINOR_EXHAUSTIVE_LIMIT: int = 10 ** 6
MINOR_SAMPLES: int = 10 ** 4
COMBINATION_EXHAUSTIVE_LIMIT: int = 2 ** 20
COMBINATION_SAMPLES: int = 10 ** 5
PRIME_LIMIT: int = 10 ** 6
CHARACTER_SAMPLES: int = 32

MAX_FIELD_BITS: int = 64

# Tolerances
BIAS_TOL: float = 1e-9
NORM_TOL: float = 1e-7
DISTANCE_TOL: float = 1e-6

SATURATED_LOG: float = 1e18

ARTIFACT_FORMAT: str = "algext-artifact"
ARTIFACT_VERSION: int = 1
REPORT_VERSION: int = 1


def pinned_constants() -> Dict[str, Any]:
    """Returns the block of pinned constants echoed into every report.

    :rtype: dict
    """
    return {
        "c_star": C_STAR,
        "c0": C0,
        "mod_m_c": MOD_M_C,
        "constant_fraction_c": CONST_FRACTION_C,
        "bias_tol": BIAS_TOL,
        "norm_tol": NORM_TOL,
        "distance_tol": DISTANCE_TOL,
        "closure_cap": CLOSURE_CAP,
        "artifact_version": ARTIFACT_VERSION,
    }
