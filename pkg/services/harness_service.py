"""
Experiment harness.

Samples instances, solves them with the CIM, decodes and classifies every restart
against the exact oracles, and aggregates feasibility, optimality and Pareto
statistics per node count and weight setting.
"""
import itertools
import math
import time
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from config.constants import ErrorMessages, ExperimentDefaults, RoutingCimDefaults
from config.settings import settings
from models.enums import OBJECTIVE_ORDER, Classification, NormalizationMode, Objective
from models.routing_problem import RoutingProblem
from models.variable_map import VariableMap
from schemas.cim_schema import CimConfig, CimSolution
from schemas.experiment_schema import (
    ExperimentConfig, ExperimentResult, RunRecord, ScatterRow, SummaryRow, TimingRow
)
from schemas.network_schema import GeneratorConfig, NetworkInstance
from schemas.objective_schema import RadioConfig, ScalarWeights
from schemas.penalty_schema import PenaltyConfig
from schemas.route_schema import ParetoSet, RouteSolution
from services.cim_service import solve, stable_time_step
from services.ising_service import qubo_to_ising
from services.network_service import generate_instance
from services.objective_service import compute_edge_objectives, scalarize
from services.oracle_service import (
    build_route_solution, frontier_gap, pareto_frontier, pareto_member, scalar_optimum
)
from services.qubo_service import build_qubo, default_penalties
from utils.exceptions import ConfigurationError, DimensionMismatchError, OracleOverflowError
from utils.logging_utils import get_context_logger, log_error_with_id
from utils.numeric import values_close
from utils.seeding import derive_seed

logger = get_context_logger(__name__)


def decode(spins, variable_map: VariableMap, instance: NetworkInstance, problem: Optional[RoutingProblem] = None) -> RouteSolution:
    """
    Turn a spin vector into a classified route.

    x_k = (s_k + 1) / 2 selects edge k. Infeasible selections are classified, not
    rejected.

    Args:
        spins: Spin vector in variable order
        variable_map: Edge/variable bijection of the instance
        instance: Network instance
        problem: Routing problem supplying objective totals and costs (optional)

    Raises:
        DimensionMismatchError: If the vector or the map does not match the instance
    """
    spins = np.asarray(spins)
    if spins.shape != (len(variable_map),) or spins.shape != (instance.edge_count,):
        raise DimensionMismatchError(
            ErrorMessages.DIMENSION_MISMATCH.format(expected=instance.edge_count, actual=spins.shape)
        )
    if variable_map.edges != tuple(edge.as_tuple() for edge in instance.edges):
        raise DimensionMismatchError("variable map does not belong to this instance")
    selected = np.flatnonzero(spins == 1).tolist()
    if problem is None:
        return build_route_solution(instance, selected)
    return build_route_solution(instance, selected, problem.objectives, problem.costs)


def weight_sweep(active: Sequence[Objective], step: float = ExperimentDefaults.SWEEP_STEP) -> List[ScalarWeights]:
    """
    Every weight vector over the active objectives with components that are
    multiples of step, each at least step, summing to one.
    """
    active = [objective for objective in OBJECTIVE_ORDER if objective in set(active)]
    if not active:
        raise ConfigurationError("a weight sweep needs at least one active objective")
    divisions = round(1.0 / step)
    if divisions < 1 or not math.isclose(divisions * step, 1.0, rel_tol=1e-9):
        raise ConfigurationError(f"sweep step {step} does not divide 1")

    sweep = []
    for parts in itertools.product(range(1, divisions + 1), repeat=len(active)):
        if sum(parts) != divisions:
            continue
        share = dict(zip(active, parts))
        values = [share.get(objective, 0) / divisions for objective in OBJECTIVE_ORDER]
        sweep.append(ScalarWeights(v1=values[0], v2=values[1], v3=values[2]))
    return sweep


def prepare_problem(instance: NetworkInstance, weights: ScalarWeights, radio: Optional[RadioConfig] = None,
                    penalties: Optional[PenaltyConfig] = None,
                    normalization: NormalizationMode = NormalizationMode.MAX) -> RoutingProblem:
    """Objectives, costs, penalties, QUBO and Ising model of one instance and weight setting."""
    objectives = compute_edge_objectives(instance, radio or RadioConfig())
    costs = scalarize(objectives, weights, normalization)
    penalties = penalties or default_penalties(costs)
    variable_map = VariableMap.from_instance(instance)
    qubo = build_qubo(instance, costs, penalties, variable_map)
    return RoutingProblem(
        instance=instance,
        variable_map=variable_map,
        objectives=objectives,
        weights=weights,
        costs=costs,
        penalties=penalties,
        qubo=qubo,
        ising=qubo_to_ising(qubo),
    )


def calibrate_cim(problem: RoutingProblem, cim: CimConfig) -> CimConfig:
    """
    Fix the coupling scale and step of a routing solve.

    Without an explicit coupling scale the couplings are scaled so that the mean edge
    cost exerts a force of COST_GAIN / 2 on an amplitude, and the step is capped at
    the stable step of the scaled model. An explicit scale is used as given.
    """
    if cim.coupling_scale is not None:
        return cim
    positive = problem.costs[problem.costs > 0]
    reference = float(positive.mean()) if positive.size else 1.0
    scale = RoutingCimDefaults.COST_GAIN / reference
    stable = stable_time_step(problem.ising, cim, scale)
    time_step = stable if cim.time_step is None else min(cim.time_step, stable)
    return cim.model_copy(update={"coupling_scale": scale, "time_step": time_step})


def solve_routing(problem: RoutingProblem, cim: CimConfig, restarts: int,
                  workers: Optional[int] = None) -> Tuple[CimSolution, Dict[int, RouteSolution]]:
    """Run the calibrated CIM on a routing problem and decode every surviving restart."""
    solution = solve(problem.ising, calibrate_cim(problem, cim), restarts, workers)
    routes = {
        sample.restart: decode(sample.spins, problem.variable_map, problem.instance, problem)
        for sample in solution.samples
    }
    return solution, routes


def _record(size: int, sample: int, weight_id: int, run: int, route: Optional[RouteSolution], energy: float,
            optimum: RouteSolution, frontier: Optional[ParetoSet], wall_time: float) -> RunRecord:
    if route is None:
        return RunRecord(
            size=size, sample=sample, weight_id=weight_id, run=run,
            classification=Classification.INFEASIBLE, optimal=False,
            pareto_optimal=None if frontier is None else False,
            energy=math.nan, loss=math.nan, ber=math.nan, hops=math.nan,
            scalar_value=math.nan, optimum_value=optimum.scalar_value, diverged=True, wall_time=wall_time,
        )
    optimal = route.is_feasible_flow and values_close(route.scalar_value, optimum.scalar_value)
    pareto = None
    gap = None
    if frontier is not None:
        pareto = pareto_member(route, frontier)
        if route.is_simple_path and not pareto:
            gap = frontier_gap(route, frontier)
    values = route.objective_values
    return RunRecord(
        size=size, sample=sample, weight_id=weight_id, run=run,
        classification=route.classification, optimal=optimal, pareto_optimal=pareto,
        energy=energy, edges=route.edges, loss=values.loss, ber=values.ber, hops=values.hops,
        scalar_value=route.scalar_value, optimum_value=optimum.scalar_value,
        frontier_gap=gap, wall_time=wall_time,
    )


def _scatter(size: int, sample: int, weight_id: int, problem: RoutingProblem, records: List[RunRecord],
             routes: Dict[int, RouteSolution], frontier: ParetoSet, top_k: int) -> List[ScatterRow]:
    distinct: Dict[Tuple[int, ...], Tuple[RouteSolution, bool]] = {}
    for record in records:
        route = routes.get(record.run)
        if route is not None and route.is_simple_path and route.edges not in distinct:
            distinct[route.edges] = (route, bool(record.pareto_optimal))
    found = sorted(distinct.values(), key=lambda item: (item[0].scalar_value, item[0].path_edges))[:top_k]

    rows = []
    for route, pareto in found:
        values = route.objective_values
        rows.append(ScatterRow(size=size, sample=sample, weight_id=weight_id, kind="cim", path_edges=route.path_edges,
                               loss=values.loss, ber=values.ber, hops=values.hops,
                               scalar_value=route.scalar_value, pareto=pareto))
    for member in frontier.members:
        values = member.objective_values
        rows.append(ScatterRow(size=size, sample=sample, weight_id=weight_id, kind="frontier",
                               path_edges=member.path_edges, loss=values.loss, ber=values.ber, hops=values.hops,
                               scalar_value=float(problem.costs[list(member.edges)].sum()), pareto=True))
    return rows


def _run_sample(config: ExperimentConfig, size: int, sample: int):
    """Generate one instance and run every weight setting on it."""
    log = logger.bind(size=size, sample=sample)
    instance = generate_instance(GeneratorConfig(
        node_count=size, area_side=config.area_side, seed=derive_seed(config.seed, size, sample)
    ))

    started = time.perf_counter()
    objectives = compute_edge_objectives(instance, config.radio)
    frontier = None
    try:
        frontier = pareto_frontier(instance, objectives, config.active_objectives(), config.max_paths)
    except OracleOverflowError as exc:
        log_error_with_id(log.logger, f"Pareto oracle unavailable for size {size} sample {sample}", exc)
    frontier_seconds = time.perf_counter() - started

    records: List[RunRecord] = []
    scatter: List[ScatterRow] = []
    timings: List[TimingRow] = []
    for weight_id, weights in enumerate(config.weights):
        problem = prepare_problem(instance, weights, config.radio, config.penalties, config.normalization)
        started = time.perf_counter()
        optimum = scalar_optimum(instance, problem.costs, problem.objectives)
        oracle_seconds = frontier_seconds + time.perf_counter() - started

        cim = config.cim.model_copy(update={"seed": derive_seed(config.seed, size, sample, weight_id)})
        started = time.perf_counter()
        solution, routes = solve_routing(problem, cim, config.runs_per_sample, workers=1)
        solve_seconds = time.perf_counter() - started

        energies = {item.restart: item.energy for item in solution.samples}
        block = [
            _record(size, sample, weight_id, run, routes.get(run), energies.get(run, math.nan),
                    optimum, frontier, solve_seconds)
            for run in range(config.runs_per_sample)
        ]
        records.extend(block)
        timings.append(TimingRow(size=size, sample=sample, weight_id=weight_id,
                                 solve_seconds=solve_seconds, oracle_seconds=oracle_seconds))
        if sample == 0 and frontier is not None and config.scatter_top_k > 0:
            scatter.extend(_scatter(size, sample, weight_id, problem, block, routes, frontier, config.scatter_top_k))

        feasible = sum(record.is_feasible for record in block)
        log.debug(f"weights {weights.label()}: {feasible}/{len(block)} feasible")
    return records, scatter, timings


def _fraction(count: int, total: int) -> float:
    return count / total if total else 0.0


def summarize(records: Sequence[RunRecord], config: ExperimentConfig) -> List[SummaryRow]:
    """Per (size, weight setting) probabilities as exact fractions of record counts."""
    groups: Dict[Tuple[int, int], List[RunRecord]] = defaultdict(list)
    for record in records:
        groups[(record.size, record.weight_id)].append(record)

    rows = []
    for (size, weight_id), group in sorted(groups.items()):
        by_sample: Dict[int, List[RunRecord]] = defaultdict(list)
        for record in group:
            by_sample[record.sample].append(record)
        evaluated = [record for record in group if record.pareto_optimal is not None]
        gaps = [record.frontier_gap for record in group if record.frontier_gap is not None]
        samples = len(by_sample)
        rows.append(SummaryRow(
            size=size,
            weight_id=weight_id,
            weights=config.weights[weight_id].label(),
            samples=samples,
            records=len(group),
            feasible=sum(record.is_feasible for record in group),
            simple_path=sum(record.classification == Classification.SIMPLE_PATH for record in group),
            optimal=sum(record.optimal for record in group),
            pareto_evaluated=len(evaluated),
            pareto_optimal=sum(bool(record.pareto_optimal) for record in evaluated),
            p_feasible=_fraction(sum(record.is_feasible for record in group), len(group)),
            p_simple_path=_fraction(
                sum(record.classification == Classification.SIMPLE_PATH for record in group), len(group)
            ),
            p_optimal=_fraction(sum(record.optimal for record in group), len(group)),
            p_pareto_optimal=(
                _fraction(sum(bool(record.pareto_optimal) for record in evaluated), len(evaluated))
                if evaluated else None
            ),
            best_p_feasible=_fraction(
                sum(any(record.is_feasible for record in runs) for runs in by_sample.values()), samples
            ),
            best_p_optimal=_fraction(
                sum(any(record.optimal for record in runs) for runs in by_sample.values()), samples
            ),
            mean_frontier_gap=float(np.mean(gaps)) if gaps else None,
            oracle_unavailable=len(group) - len(evaluated),
            diverged=sum(record.diverged for record in group),
        ))
    return rows


def run_experiment(config: ExperimentConfig) -> ExperimentResult:
    """
    Run the full protocol: every node count x sample x weight setting x run.

    Samples fan out to a worker pool; outputs are sorted by (size, sample, weight, run)
    so results depend only on config.seed.

    Args:
        config: Experiment protocol

    Returns:
        ExperimentResult with records, summary rows, scatter rows and timings
    """
    tasks = [(size, sample) for size in config.node_counts for sample in range(config.samples_per_size)]
    workers = min(settings.resolve_workers(config.workers), len(tasks))
    logger.info(f"experiment: {len(tasks)} instances x {len(config.weights)} weight settings x "
                f"{config.runs_per_sample} runs on {workers} workers")

    if workers == 1:
        results = [_run_sample(config, size, sample) for size, sample in tasks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda task: _run_sample(config, *task), tasks))

    records = sorted((record for block, _, _ in results for record in block), key=lambda record: record.sort_key)
    scatter = [row for _, rows, _ in results for row in rows]
    scatter.sort(key=lambda row: (row.size, row.sample, row.weight_id, row.kind, row.scalar_value, row.path_edges))
    timings = sorted((row for _, _, rows in results for row in rows),
                     key=lambda row: (row.size, row.sample, row.weight_id))
    summary = summarize(records, config)
    for row in summary:
        logger.info(f"✅ size={row.size} weights={row.weights}: p_feasible={row.p_feasible:.3f} "
                    f"p_optimal={row.p_optimal:.3f}")
    return ExperimentResult(records=records, summary=summary, scatter=scatter, timings=timings)
