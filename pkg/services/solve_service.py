"""Solve service: one instance file, one weight setting, every CIM restart decoded."""
import math
import time
from pathlib import Path
from typing import List, Optional, Tuple

from models.routing_problem import RoutingRun
from repositories.instance_repository import InstanceRepository
from schemas.cim_schema import CimConfig
from schemas.network_schema import NetworkInstance
from schemas.objective_schema import ScalarWeights
from schemas.penalty_schema import PenaltyConfig
from services.base_service import BaseServiceImpl
from services.harness_service import prepare_problem, solve_routing
from services.oracle_service import bellman_ford_distance, scalar_optimum
from utils.logging_utils import get_context_logger
from utils.numeric import values_close

logger = get_context_logger(__name__)

SOLUTION_COLUMNS = [
    "restart", "energy", "classification", "optimal", "edges", "path_edges",
    "loss", "ber", "hops", "scalar_value", "diverged",
]
TRACE_COLUMNS = ["restart", "step", "pump", "energy"]


class SolveService(BaseServiceImpl):
    """Service behind the solve command."""

    def __init__(self, repository: Optional[InstanceRepository] = None):
        super().__init__(repository or InstanceRepository())

    def load(self, path: Path) -> NetworkInstance:
        return self.repository.load(path)

    def solve(self, instance: NetworkInstance, weights: ScalarWeights, cim: CimConfig, restarts: int,
              penalties: Optional[PenaltyConfig] = None, workers: Optional[int] = None) -> RoutingRun:
        """
        Build the routing problem, find its exact optimum and run the CIM restarts.

        Raises:
            UnreachableDestinationError: If D cannot be reached from S
        """
        problem = prepare_problem(instance, weights, penalties=penalties)
        optimum = scalar_optimum(instance, problem.costs, problem.objectives)
        solution, routes = solve_routing(problem, cim, restarts, workers)
        feasible = sum(route.is_feasible_flow for route in routes.values())
        logger.info(f"{feasible}/{restarts} restarts flow-feasible on {instance.edge_count} edges")
        return RoutingRun(problem=problem, optimum=optimum, solution=solution, routes=routes)

    @staticmethod
    def solution_rows(run: RoutingRun) -> List[list]:
        """Rows of solutions.csv in energy order, diverged restarts last."""
        rows = []
        for sample in run.solution.samples:
            route = run.routes[sample.restart]
            values = route.objective_values
            optimal = route.is_feasible_flow and values_close(route.scalar_value, run.optimum.scalar_value)
            rows.append([sample.restart, sample.energy, route.classification, optimal, route.edges,
                         route.path_edges, values.loss, values.ber, values.hops, route.scalar_value, False])
        for failure in run.solution.failures:
            rows.append([failure.restart, math.nan, "infeasible", False, (), (),
                         math.nan, math.nan, math.nan, math.nan, True])
        return rows

    @staticmethod
    def trace_rows(run: RoutingRun) -> list:
        return sorted((row for sample in run.solution.samples for row in sample.trace),
                      key=lambda row: (row.restart, row.step))

    @staticmethod
    def baseline(run: RoutingRun) -> Tuple[float, float, float]:
        """
        Time the classical shortest-path solvers on the run's costs.

        Returns:
            (label-setting seconds, Bellman-Ford distance, Bellman-Ford seconds)
        """
        instance, costs = run.problem.instance, run.problem.costs
        started = time.perf_counter()
        scalar_optimum(instance, costs)
        label_seconds = time.perf_counter() - started
        started = time.perf_counter()
        distance = bellman_ford_distance(instance, costs)
        return label_seconds, distance, time.perf_counter() - started
