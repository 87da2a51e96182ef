"""Decoded routes and Pareto sets."""
from typing import List, Optional, Tuple

from pydantic import Field, model_validator

from models.enums import Classification, Objective
from schemas.base_schema import BaseSchema


class ObjectiveValues(BaseSchema):
    """Totals of the three objectives over a set of edges."""

    loss: float
    ber: float
    hops: float

    def select(self, objectives: List[Objective]) -> Tuple[float, ...]:
        return tuple(getattr(self, objective.value) for objective in objectives)


class RouteSolution(BaseSchema):
    """Set of selected edges with its feasibility verdict and objective totals."""

    edges: Tuple[int, ...] = Field(..., description="Selected edge indices, ascending")
    path_edges: Tuple[int, ...] = Field(
        default=(), description="Edges in S-to-D order when the selection is a simple path"
    )
    is_feasible_flow: bool
    is_simple_path: bool
    objective_values: Optional[ObjectiveValues] = None
    scalar_value: Optional[float] = None

    @model_validator(mode="after")
    def simple_implies_feasible(self):
        if self.is_simple_path and not self.is_feasible_flow:
            raise ValueError("a simple path must satisfy the flow constraints")
        return self

    @property
    def classification(self) -> Classification:
        if self.is_simple_path:
            return Classification.SIMPLE_PATH
        if self.is_feasible_flow:
            return Classification.FEASIBLE_FLOW_WITH_CYCLES
        return Classification.INFEASIBLE

    @property
    def hop_count(self) -> int:
        return len(self.edges)


class ParetoSet(BaseSchema):
    """Mutually non-dominated simple paths in the active objective dimensions."""

    objectives: List[Objective]
    members: List[RouteSolution] = Field(default_factory=list)

    def points(self) -> List[Tuple[float, ...]]:
        return [member.objective_values.select(self.objectives) for member in self.members]
