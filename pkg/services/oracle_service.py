"""
Exact classical baselines.

Simple-path enumeration, scalarized shortest paths, Pareto frontiers and exhaustive
QUBO minimization. These are the ground truth behind the feasibility, optimality and
Pareto statistics of the experiment harness.
"""
import heapq
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Iterator, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from config.constants import ErrorMessages, OracleConfig
from config.settings import settings
from models.edge_objectives import EdgeObjectives
from models.enums import Objective
from models.qubo_model import QuboModel
from schemas.network_schema import NetworkInstance
from schemas.route_schema import ObjectiveValues, ParetoSet, RouteSolution
from services.objective_service import route_totals
from services.qubo_service import energies
from utils.exceptions import ObjectiveDomainError, OracleOverflowError, UnreachableDestinationError
from utils.logging_utils import get_context_logger
from utils.numeric import values_close

logger = get_context_logger(__name__)


def _degrees(instance: NetworkInstance, edges: Sequence[int]) -> Tuple[np.ndarray, np.ndarray]:
    out_degree = np.zeros(instance.node_count, dtype=int)
    in_degree = np.zeros(instance.node_count, dtype=int)
    for index in edges:
        edge = instance.edges[index]
        out_degree[edge.tail] += 1
        in_degree[edge.head] += 1
    return out_degree, in_degree


def is_feasible_flow(instance: NetworkInstance, edges: Sequence[int]) -> bool:
    """Unit out-degree at S, unit in-degree at D, balance at every other node."""
    out_degree, in_degree = _degrees(instance, edges)
    if out_degree[instance.source] != 1 or in_degree[instance.destination] != 1:
        return False
    interior = np.ones(instance.node_count, dtype=bool)
    interior[[instance.source, instance.destination]] = False
    return bool(np.all(out_degree[interior] == in_degree[interior]))


def walk_simple_path(instance: NetworkInstance, edges: Sequence[int]) -> Optional[Tuple[int, ...]]:
    """
    Follow the selected edges from S.

    Returns:
        The edges in S-to-D order when they form exactly one simple path and nothing
        else, otherwise None
    """
    selected = set(edges)
    outgoing = {}
    for index in selected:
        outgoing.setdefault(instance.edges[index].tail, []).append(index)

    node = instance.source
    visited = {node}
    order: List[int] = []
    while node != instance.destination:
        leaving = outgoing.get(node, [])
        if len(leaving) != 1:
            return None
        order.append(leaving[0])
        node = instance.edges[leaving[0]].head
        if node in visited:
            return None
        visited.add(node)
    if len(order) != len(selected):
        return None
    return tuple(order)


def build_route_solution(instance: NetworkInstance, edges: Sequence[int],
                         objectives: Optional[EdgeObjectives] = None,
                         costs: Optional[np.ndarray] = None) -> RouteSolution:
    """
    Classify a set of selected edges and attach its objective totals.

    Args:
        instance: Network instance
        edges: Selected edge indices (any order)
        objectives: Per-edge objectives for the totals (optional)
        costs: Scalarized per-edge costs for scalar_value (optional)
    """
    chosen = tuple(sorted(set(int(index) for index in edges)))
    path = walk_simple_path(instance, chosen)
    values = None
    if objectives is not None:
        loss, ber, hops = route_totals(objectives, chosen)
        values = ObjectiveValues(loss=loss, ber=ber, hops=hops)
    scalar = float(np.asarray(costs, dtype=float)[list(chosen)].sum()) if costs is not None else None
    return RouteSolution(
        edges=chosen,
        path_edges=path or (),
        is_feasible_flow=path is not None or is_feasible_flow(instance, chosen),
        is_simple_path=path is not None,
        objective_values=values,
        scalar_value=scalar,
    )


def iter_simple_paths(instance: NetworkInstance, max_paths: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """
    Depth-first generator of simple S-to-D paths as edge-index tuples.

    Out-edges are explored in ascending index order, so paths come out in
    lexicographic order of their edge sequences.

    Raises:
        OracleOverflowError: When more than max_paths paths exist
    """
    limit = settings.oracle_max_paths if max_paths is None else max_paths
    out_edges = instance.out_edges()
    heads = [edge.head for edge in instance.edges]
    on_path = [False] * instance.node_count
    on_path[instance.source] = True
    path: List[int] = []
    stack = [iter(out_edges[instance.source])]
    found = 0

    while stack:
        index = next(stack[-1], None)
        if index is None:
            stack.pop()
            if path:
                on_path[heads[path.pop()]] = False
            continue
        head = heads[index]
        if on_path[head]:
            continue
        if head == instance.destination:
            found += 1
            if found > limit:
                raise OracleOverflowError(ErrorMessages.ORACLE_OVERFLOW.format(limit=limit))
            yield tuple(path) + (index,)
            continue
        on_path[head] = True
        path.append(index)
        stack.append(iter(out_edges[head]))


def enumerate_paths(instance: NetworkInstance, max_paths: Optional[int] = None,
                    objectives: Optional[EdgeObjectives] = None,
                    costs: Optional[np.ndarray] = None) -> List[RouteSolution]:
    """
    All simple S-to-D paths.

    Args:
        instance: Network instance
        max_paths: Abort beyond this many paths (default: settings, 10^6)
        objectives: Per-edge objectives for the totals (optional)
        costs: Scalarized per-edge costs (optional)

    Returns:
        One RouteSolution per path, each with is_simple_path = True

    Raises:
        OracleOverflowError: If the path count exceeds max_paths
    """
    paths = list(iter_simple_paths(instance, max_paths))
    logger.debug(f"enumerated {len(paths)} simple paths on {instance.node_count} nodes")
    cost_array = np.asarray(costs, dtype=float) if costs is not None else None
    routes = []
    for path in paths:
        chosen = tuple(sorted(path))
        values = None
        if objectives is not None:
            loss, ber, hops = route_totals(objectives, chosen)
            values = ObjectiveValues(loss=loss, ber=ber, hops=hops)
        routes.append(RouteSolution(
            edges=chosen,
            path_edges=path,
            is_feasible_flow=True,
            is_simple_path=True,
            objective_values=values,
            scalar_value=float(cost_array[list(path)].sum()) if cost_array is not None else None,
        ))
    return routes


def scalar_optimum(instance: NetworkInstance, costs, objectives: Optional[EdgeObjectives] = None) -> RouteSolution:
    """
    Shortest S-to-D path under non-negative scalarized edge costs.

    Label-setting search over labels (cost, hops, edge sequence): ties on cost go
    to fewer hops, then to the lexicographically smallest edge-index sequence.

    Args:
        instance: Network instance
        costs: Weighted per-edge costs (output of scalarize)
        objectives: Per-edge objectives for the totals (optional)

    Raises:
        ObjectiveDomainError: If a cost is negative
        UnreachableDestinationError: If D cannot be reached from S
    """
    costs = np.asarray(costs, dtype=float)
    if costs.shape != (instance.edge_count,):
        raise ObjectiveDomainError(f"expected {instance.edge_count} costs, got shape {costs.shape}")
    if np.any(costs < 0):
        raise ObjectiveDomainError("scalar_optimum needs non-negative edge costs")

    out_edges = instance.out_edges()
    settled = set()
    heap = [(0.0, 0, (), instance.source)]
    while heap:
        cost, hops, sequence, node = heapq.heappop(heap)
        if node in settled:
            continue
        settled.add(node)
        if node == instance.destination:
            return build_route_solution(instance, sequence, objectives, costs)
        for index in out_edges[node]:
            head = instance.edges[index].head
            if head not in settled:
                heapq.heappush(heap, (cost + float(costs[index]), hops + 1, sequence + (index,), head))

    raise UnreachableDestinationError(
        ErrorMessages.UNREACHABLE.format(source=instance.source, destination=instance.destination)
    )


def bellman_ford_distance(instance: NetworkInstance, costs) -> float:
    """Bellman-Ford S-to-D distance, an independent check of scalar_optimum."""
    graph = instance.to_digraph()
    for edge, cost in zip(instance.edges, np.asarray(costs, dtype=float)):
        graph[edge.tail][edge.head]["cost"] = float(cost)
    try:
        return float(nx.bellman_ford_path_length(graph, instance.source, instance.destination, weight="cost"))
    except nx.NetworkXNoPath as exc:
        raise UnreachableDestinationError(
            ErrorMessages.UNREACHABLE.format(source=instance.source, destination=instance.destination)
        ) from exc


def dominates(a: Sequence[float], b: Sequence[float]) -> bool:
    """a <= b everywhere and a < b somewhere."""
    return all(x <= y for x, y in zip(a, b)) and any(x < y for x, y in zip(a, b))


def non_dominated(points: np.ndarray) -> List[int]:
    """
    Indices of the non-dominated rows of a (P, K) array, in input order.

    Rows are visited in lexicographic order, so a row can only be dominated by a
    frontier row already kept; equal rows are all kept.
    """
    points = np.asarray(points, dtype=float)
    if points.shape[0] == 0:
        return []
    order = np.lexsort(points.T[::-1])
    kept: List[int] = []
    frontier = np.empty((0, points.shape[1]))
    for index in order:
        point = points[index]
        if frontier.shape[0]:
            no_worse = np.all(frontier <= point, axis=1)
            better = np.any(frontier < point, axis=1)
            if np.any(no_worse & better):
                continue
        kept.append(int(index))
        frontier = np.vstack([frontier, point])
    return sorted(kept)


def pareto_paths(instance: NetworkInstance, values: np.ndarray, max_labels: Optional[int] = None) -> List[Tuple[int, ...]]:
    """
    Simple S-to-D paths whose summed edge values no other simple path strictly dominates.

    Multi-objective label-setting search: labels (point, edge sequence) leave the queue
    in lexicographic order of their points, and a label strictly dominated by a settled
    label at the same node is discarded. With non-negative edge values a discarded
    prefix never completes a non-dominated simple path, so the result equals the
    non-dominated filter over every simple path, ties included.

    Args:
        instance: Network instance
        values: (E, K) non-negative per-edge values
        max_labels: Abort beyond this many settled labels (default: settings, 10^6)

    Returns:
        Edge sequences in S-to-D order, sorted lexicographically

    Raises:
        ObjectiveDomainError: If a value is negative
        OracleOverflowError: If more than max_labels labels are settled
    """
    values = np.asarray(values, dtype=float)
    if np.any(values < 0):
        raise ObjectiveDomainError("pareto_paths needs non-negative edge values")
    limit = settings.oracle_max_paths if max_labels is None else max_labels
    rows = [tuple(float(v) for v in row) for row in values]
    heads = [edge.head for edge in instance.edges]
    out_edges = instance.out_edges()
    settled: List[List[Tuple[float, ...]]] = [[] for _ in range(instance.node_count)]
    heap = [((0.0,) * values.shape[1], (), instance.source)]
    paths: List[Tuple[int, ...]] = []
    count = 0

    while heap:
        point, sequence, node = heapq.heappop(heap)
        if any(dominates(other, point) for other in settled[node]):
            continue
        settled[node].append(point)
        count += 1
        if count > limit:
            raise OracleOverflowError(ErrorMessages.FRONTIER_OVERFLOW.format(limit=limit))
        if node == instance.destination:
            paths.append(sequence)
            continue
        visited = {instance.source, *(heads[index] for index in sequence)}
        for index in out_edges[node]:
            head = heads[index]
            if head in visited:
                continue
            following = tuple(a + b for a, b in zip(point, rows[index]))
            if not any(dominates(other, following) for other in settled[head]):
                heapq.heappush(heap, (following, sequence + (index,), head))

    logger.debug(f"{len(paths)} non-dominated paths from {count} settled labels")
    return sorted(paths)


def pareto_frontier(instance: NetworkInstance, objectives: EdgeObjectives, active: Sequence[Objective],
                    max_paths: Optional[int] = None, costs: Optional[np.ndarray] = None) -> ParetoSet:
    """
    Non-dominated simple paths in the active objective dimensions.

    Members come from pareto_paths and are re-filtered on their route totals, so a
    member's values are summed exactly like any other RouteSolution's.

    Args:
        instance: Network instance
        objectives: Per-edge objectives
        active: Objectives spanning the comparison space
        max_paths: Label limit of the search
        costs: Scalarized costs to attach to the members (optional)

    Raises:
        OracleOverflowError: If the search settles more than max_paths labels
    """
    active = [objective for objective in (Objective.LOSS, Objective.BER, Objective.HOPS) if objective in set(active)]
    if not active:
        raise ObjectiveDomainError("at least one active objective is required")
    values = np.column_stack([objectives.values(objective) for objective in active])
    cost_array = np.asarray(costs, dtype=float) if costs is not None else None
    routes = []
    for path in pareto_paths(instance, values, max_paths):
        chosen = tuple(sorted(path))
        loss, ber, hops = route_totals(objectives, chosen)
        routes.append(RouteSolution(
            edges=chosen,
            path_edges=path,
            is_feasible_flow=True,
            is_simple_path=True,
            objective_values=ObjectiveValues(loss=loss, ber=ber, hops=hops),
            scalar_value=float(cost_array[list(path)].sum()) if cost_array is not None else None,
        ))
    points = np.array([route.objective_values.select(active) for route in routes], dtype=float).reshape(-1, len(active))
    members = [routes[index] for index in non_dominated(points)]
    logger.debug(f"frontier of {len(members)} members")
    return ParetoSet(objectives=active, members=members)


def pareto_member(route: RouteSolution, frontier: ParetoSet,
                  rel: float = OracleConfig.RELATIVE_TOLERANCE) -> bool:
    """
    True when a simple path is on the frontier.

    Membership is by edge set or by objective values equal to a member within the
    relative tolerance.
    """
    if not route.is_simple_path or route.objective_values is None:
        return False
    point = route.objective_values.select(frontier.objectives)
    for member in frontier.members:
        if member.edges == route.edges:
            return True
        if all(values_close(a, b, rel) for a, b in zip(point, member.objective_values.select(frontier.objectives))):
            return True
    return False


def frontier_gap(route: RouteSolution, frontier: ParetoSet) -> float:
    """Distance from a route to the nearest frontier point, per objective normalized by the frontier maximum."""
    if not frontier.members or route.objective_values is None:
        return math.nan
    points = np.array(frontier.points(), dtype=float)
    scale = points.max(axis=0)
    scale[scale <= 0] = 1.0
    point = np.array(route.objective_values.select(frontier.objectives), dtype=float)
    return float(np.min(np.linalg.norm((points - point) / scale, axis=1)))


def _assignment_block(dimension: int, start: int, stop: int) -> np.ndarray:
    """Binary rows for the integers start..stop-1, x_0 as the most significant bit."""
    numbers = np.arange(start, stop, dtype=np.int64)
    shifts = np.arange(dimension - 1, -1, -1, dtype=np.int64)
    return ((numbers[:, None] >> shifts[None, :]) & 1).astype(np.int8)


def _block_minimum(model: QuboModel, start: int, stop: int) -> Tuple[float, int]:
    values = energies(model, _assignment_block(model.dimension, start, stop))
    position = int(np.argmin(values))
    return float(values[position]), start + position


def brute_force_qubo(model: QuboModel, workers: Optional[int] = None) -> Tuple[np.ndarray, float]:
    """
    Exhaustive QUBO minimum over all 2^N assignments.

    Assignments are scanned in lexicographic order, so ties go to the smallest vector.

    Args:
        model: QUBO with dimension <= 24
        workers: Threads scanning assignment blocks (default: settings)

    Returns:
        (minimizing binary vector, its energy)

    Raises:
        OracleOverflowError: If the dimension exceeds the cap
    """
    n = model.dimension
    if n > OracleConfig.BRUTE_FORCE_MAX_DIMENSION:
        raise OracleOverflowError(
            ErrorMessages.BRUTE_FORCE_CAP.format(dimension=n, cap=OracleConfig.BRUTE_FORCE_MAX_DIMENSION)
        )
    if n == 0:
        return np.zeros(0, dtype=int), model.offset

    total = 1 << n
    block = 1 << OracleConfig.BRUTE_FORCE_BLOCK_BITS
    bounds = [(start, min(start + block, total)) for start in range(0, total, block)]
    worker_count = min(settings.resolve_workers(workers), len(bounds))
    if worker_count == 1:
        minima = [_block_minimum(model, start, stop) for start, stop in bounds]
    else:
        with ThreadPoolExecutor(max_workers=worker_count) as pool:
            minima = list(pool.map(lambda bound: _block_minimum(model, *bound), bounds))

    best_energy, best_index = minima[0]
    for value, index in minima[1:]:
        if value < best_energy:
            best_energy, best_index = value, index
    vector = _assignment_block(n, best_index, best_index + 1)[0].astype(int)
    return vector, best_energy
