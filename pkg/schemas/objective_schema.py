"""Radio parameters and scalarization weights."""
from typing import List, Sequence

from pydantic import Field, field_validator, model_validator

from config.constants import RadioDefaults, WeightConfig
from models.enums import OBJECTIVE_ORDER, Objective
from schemas.base_schema import BaseSchema


class RadioConfig(BaseSchema):
    """Link budget parameters shared by every edge."""

    path_loss_exponent: float = Field(RadioDefaults.PATH_LOSS_EXPONENT, gt=0, description="Path loss exponent alpha")
    transmit_power: float = Field(RadioDefaults.TRANSMIT_POWER_W, gt=0, description="Transmit power P_T in watts")
    carrier_wavelength: float = Field(RadioDefaults.CARRIER_WAVELENGTH_M, gt=0, description="Carrier wavelength in meters")
    modulation_order: int = Field(RadioDefaults.MODULATION_ORDER, ge=2, description="M-ary modulation order")

    @field_validator("modulation_order")
    @classmethod
    def power_of_two(cls, value: int) -> int:
        if value & (value - 1):
            raise ValueError(f"modulation order must be a power of two, got {value}")
        return value


class ScalarWeights(BaseSchema):
    """Convex combination of the loss, BER and hop objectives."""

    v1: float = Field(..., ge=0, le=1, description="Path loss weight")
    v2: float = Field(..., ge=0, le=1, description="Bit error weight")
    v3: float = Field(..., ge=0, le=1, description="Hop weight")

    @model_validator(mode="after")
    def sums_to_one(self):
        total = self.v1 + self.v2 + self.v3
        if abs(total - 1.0) > WeightConfig.SUM_TOLERANCE:
            raise ValueError(f"weights must sum to 1, got {total!r}")
        return self

    @classmethod
    def parse(cls, text: str) -> "ScalarWeights":
        """Build from "a,b,c" (two values are taken as loss,ber)."""
        parts = [float(part) for part in text.split(",") if part.strip()]
        if len(parts) == 2:
            parts.append(0.0)
        if len(parts) != 3:
            raise ValueError(f"expected two or three comma-separated weights, got {text!r}")
        return cls(v1=parts[0], v2=parts[1], v3=parts[2])

    @classmethod
    def single(cls, objective: Objective) -> "ScalarWeights":
        values = [1.0 if candidate == objective else 0.0 for candidate in OBJECTIVE_ORDER]
        return cls(v1=values[0], v2=values[1], v3=values[2])

    def as_tuple(self):
        return self.v1, self.v2, self.v3

    def active_objectives(self) -> List[Objective]:
        """Objectives carrying a positive weight."""
        return [objective for objective, weight in zip(OBJECTIVE_ORDER, self.as_tuple()) if weight > 0]

    def label(self) -> str:
        return ",".join(repr(weight) for weight in self.as_tuple())


def parse_objectives(text: str) -> List[Objective]:
    """Parse "loss,ber" into objectives in canonical order."""
    names = {part.strip().lower() for part in text.split(",") if part.strip()}
    unknown = names - {objective.value for objective in Objective}
    if unknown:
        raise ValueError(f"unknown objectives: {sorted(unknown)}")
    if not names:
        raise ValueError("at least one objective is required")
    return [objective for objective in OBJECTIVE_ORDER if objective.value in names]


def canonical_objectives(objectives: Sequence[Objective]) -> List[Objective]:
    wanted = set(objectives)
    return [objective for objective in OBJECTIVE_ORDER if objective in wanted]
