"""Small numeric helpers shared by services."""
import math

from config.constants import OracleConfig


def values_close(a: float, b: float, rel: float = OracleConfig.RELATIVE_TOLERANCE) -> bool:
    """Relative comparison with an absolute floor for values near zero."""
    return math.isclose(a, b, rel_tol=rel, abs_tol=rel)


def dbm_to_watts(dbm):
    """P[W] = 10^((dBm - 30) / 10); accepts scalars or numpy arrays."""
    return 10.0 ** ((dbm - 30.0) / 10.0)


def format_float(value: float) -> str:
    """Shortest text that round-trips to the same float."""
    return repr(float(value))
