"""
Centralized Enums Module

Contains all shared enumeration types used across models and schemas.
"""
from enum import Enum


class Objective(str, Enum):
    """Routing objectives, in the order of the scalarization weights"""
    LOSS = "loss"
    BER = "ber"
    HOPS = "hops"


class NormalizationMode(str, Enum):
    """How objective coefficients are scaled before scalarization"""
    MAX = "max"
    NONE = "none"


class PumpSchedule(str, Enum):
    """Pump parameter schedule of the amplitude dynamics"""
    TANH_RAMP = "tanh_ramp"
    RECURSIVE = "paper_recursive"

    @classmethod
    def _missing_(cls, value):
        if value == "recursive":
            return cls.RECURSIVE
        return None


class Classification(str, Enum):
    """Decoded route classification"""
    INFEASIBLE = "infeasible"
    FEASIBLE_FLOW_WITH_CYCLES = "feasible_flow_with_cycles"
    SIMPLE_PATH = "simple_path"


class ExportFormat(str, Enum):
    """Model export formats"""
    QUBO = "qubo"
    ISING = "ising"


OBJECTIVE_ORDER = (Objective.LOSS, Objective.BER, Objective.HOPS)
