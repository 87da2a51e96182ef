"""
Application Constants

Centralized configuration constants for the routing toolkit.
Avoids magic numbers and provides single source of truth.
"""
import math


class RadioDefaults:
    """Radio link parameters used by the objective coefficients"""
    PATH_LOSS_EXPONENT = 2.7
    TRANSMIT_POWER_W = 50.0
    CARRIER_WAVELENGTH_M = 1.2
    MODULATION_ORDER = 4  # QPSK


class NoiseDefaults:
    """Per-node noise distribution, sampled in dBm"""
    MEAN_DBM = -90.0
    STDDEV_DBM = 10.0


class GeneratorDefaults:
    """Random instance generation constants"""
    AREA_SIDE_M = 1000.0
    MAX_RETRIES = 100

    # Average number of directed edges per node count
    TABLE_EDGE_TARGETS = {10: 30, 20: 125, 30: 280, 40: 420, 50: 700, 60: 1000}

    # Fraction of ordered pairs connected when the node count is not tabulated
    FALLBACK_PAIR_DENSITY = 1.0 / 3.0


class CimDefaults:
    """Coherent Ising machine simulation constants"""
    ITERATIONS = 1000
    TIME_STEP = 0.01
    PUMP_MAX = 2.0
    PUMP_RATE = 0.005
    RECURSIVE_RATE = 0.0005
    INIT_AMPLITUDE = 0.1
    NOISE_AMPLITUDE = 0.0
    AMPLITUDE_CLAMP = 10.0
    RESTARTS = 50
    STABLE_STEP_FRACTION = 0.5


class RoutingCimDefaults:
    """CIM calibration for penalized routing models"""
    ITERATIONS = 40_000
    PUMP_MAX = 2.0
    PUMP_RATE = 0.0005
    NOISE_AMPLITUDE = 0.1
    AMPLITUDE_CLAMP = 1.0
    # coupling scale x mean edge cost
    COST_GAIN = 4.0


class OracleConfig:
    """Exact oracle limits and comparison tolerances"""
    MAX_PATHS = 1_000_000
    BRUTE_FORCE_MAX_DIMENSION = 24
    BRUTE_FORCE_BLOCK_BITS = 16
    RELATIVE_TOLERANCE = 1e-9
    SCATTER_TOP_K = 250


class PenaltyDefaults:
    """Penalty coefficient derivation"""
    COST_MULTIPLIER = 2.0
    BALANCE_MULTIPLIER = 2.0
    MIN_PENALTY = 1.0


class ExperimentDefaults:
    """Experiment protocol constants"""
    NODE_COUNTS = [10, 20, 30, 40, 50, 60]
    SAMPLES_PER_SIZE = 40
    RUNS_PER_SAMPLE = 50
    SWEEP_STEP = 0.1


class WeightConfig:
    """Scalarization weight validation"""
    SUM_TOLERANCE = 1e-12


class LogConfig:
    """Logging configuration constants"""
    MAX_LOG_SIZE_BYTES = 10 * 1024 * 1024  # 10 MB
    LOG_BACKUP_COUNT = 5
    DEFAULT_LOG_LEVEL = 'INFO'


class ErrorMessages:
    """Centralized error message templates"""
    UNKNOWN_NODE = "unknown node id {node_id} on line {line}: {content!r}"
    DUPLICATE_EDGE = "duplicate edge ({tail}, {head}) on line {line}: {content!r}"
    MALFORMED_LINE = "malformed record on line {line}: {content!r}"
    UNREACHABLE = "destination unreachable: node {destination} cannot be reached from node {source}"
    ORACLE_OVERFLOW = "oracle infeasible at this scale: more than {limit} simple paths"
    FRONTIER_OVERFLOW = "oracle infeasible at this scale: more than {limit} frontier labels"
    BRUTE_FORCE_CAP = "oracle infeasible at this scale: dimension {dimension} exceeds cap {cap}"
    DIMENSION_MISMATCH = "dimension mismatch: expected {expected}, got {actual}"
    DIVERGENCE = "non-finite amplitude at step {step} for spin {spin}"


FOUR_PI = 4.0 * math.pi
