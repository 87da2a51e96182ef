"""
Routing problem bundle.

This module defines RoutingProblem, everything derived from one instance and one
scalarization setting: the edge objectives, the weighted costs, the penalties and
the QUBO and Ising models built from them. RoutingRun pairs a problem with one
solve of it.
"""
from dataclasses import dataclass
from typing import Dict

import numpy as np

from models.edge_objectives import EdgeObjectives
from models.ising_model import IsingModel
from models.qubo_model import QuboModel
from models.variable_map import VariableMap
from schemas.cim_schema import CimSolution
from schemas.network_schema import NetworkInstance
from schemas.objective_schema import ScalarWeights
from schemas.penalty_schema import PenaltyConfig
from schemas.route_schema import RouteSolution


@dataclass(frozen=True, eq=False)
class RoutingProblem:
    instance: NetworkInstance
    variable_map: VariableMap
    objectives: EdgeObjectives
    weights: ScalarWeights
    costs: np.ndarray
    penalties: PenaltyConfig
    qubo: QuboModel
    ising: IsingModel

    @property
    def dimension(self) -> int:
        return len(self.variable_map)


@dataclass(frozen=True, eq=False)
class RoutingRun:
    """One CIM solve of a routing problem: restarts, decoded routes and the exact optimum."""

    problem: RoutingProblem
    optimum: RouteSolution
    solution: CimSolution
    routes: Dict[int, RouteSolution]
