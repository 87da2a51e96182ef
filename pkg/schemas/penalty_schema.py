"""Penalty coefficients of the constrained-to-unconstrained reformulation."""
from pydantic import Field

from schemas.base_schema import BaseSchema


class PenaltyConfig(BaseSchema):
    """Weights of the source, destination and node-balance penalty terms."""

    p1: float = Field(..., ge=0, description="Source out-degree penalty")
    p2: float = Field(..., ge=0, description="Destination in-degree penalty")
    p3: float = Field(..., ge=0, description="Intermediate node balance penalty")

    @property
    def balance_dominates(self) -> bool:
        """True when p3 is at least p1 and p2, as default construction guarantees."""
        return self.p3 >= self.p1 and self.p3 >= self.p2

    @classmethod
    def parse(cls, text: str) -> "PenaltyConfig":
        parts = [float(part) for part in text.split(",")]
        if len(parts) != 3:
            raise ValueError(f"expected p1,p2,p3, got {text!r}")
        return cls(p1=parts[0], p2=parts[1], p3=parts[2])
