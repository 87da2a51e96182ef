"""Random geometric instance generation."""
import math
from typing import List, Optional

import numpy as np

from config.constants import ErrorMessages, GeneratorDefaults
from schemas.network_schema import EdgeRecord, GeneratorConfig, NetworkInstance, NodeRecord
from utils.exceptions import ConfigurationError, UnreachableDestinationError
from utils.logging_utils import get_context_logger
from utils.numeric import dbm_to_watts

logger = get_context_logger(__name__)


def pair_distance_cdf(u: float) -> float:
    """
    P(|X - Y| <= u) for X, Y uniform in the unit square, valid for 0 <= u <= 1.
    """
    return math.pi * u ** 2 - 8.0 * u ** 3 / 3.0 + u ** 4 / 2.0


def target_edge_count(node_count: int) -> float:
    """Average directed edge count for a node count, from the density table."""
    if node_count in GeneratorDefaults.TABLE_EDGE_TARGETS:
        return float(GeneratorDefaults.TABLE_EDGE_TARGETS[node_count])
    return node_count * (node_count - 1) * GeneratorDefaults.FALLBACK_PAIR_DENSITY


def calibrated_radius(node_count: int, target_edges: Optional[float] = None,
                      area_side: float = GeneratorDefaults.AREA_SIDE_M) -> float:
    """
    Radio range giving `target_edges` directed edges on average.

    Solves n(n-1) * F(r / area_side) = target_edges for the square-distance CDF F.

    Args:
        node_count: Number of nodes
        target_edges: Desired mean edge count (default: density table)
        area_side: Side of the placement square in meters

    Returns:
        Connection radius in meters

    Raises:
        ConfigurationError: If the target cannot be met with a radius below area_side
    """
    if node_count < 2:
        raise ConfigurationError("at least two nodes are required")
    target = target_edge_count(node_count) if target_edges is None else float(target_edges)
    density = target / (node_count * (node_count - 1))
    if not 0.0 < density <= pair_distance_cdf(1.0):
        raise ConfigurationError(f"edge target {target} is not reachable with {node_count} nodes")
    # F(u) - density as a polynomial in u, highest power first
    roots = np.roots([0.5, -8.0 / 3.0, math.pi, 0.0, -density])
    real = [root.real for root in roots if abs(root.imag) < 1e-12 and 0.0 < root.real <= 1.0 + 1e-12]
    return float(min(real)) * area_side


def select_endpoints(node_count: int, edges: List[tuple], config: GeneratorConfig):
    """Smallest id with an out-edge as S, largest id with an in-edge as D, unless overridden."""
    tails = {tail for tail, _ in edges}
    heads = {head for _, head in edges}
    source = config.source
    destination = config.destination
    if source is None:
        source = next((node for node in range(node_count) if node in tails), None)
    if destination is None:
        destination = next((node for node in reversed(range(node_count)) if node in heads), None)
    return source, destination


def draw_topology(config: GeneratorConfig, radius: float, rng: np.random.Generator):
    """One draw of positions, noise powers (watts) and the edges within radius, in (tail, head) order."""
    positions = rng.uniform(0.0, config.area_side, size=(config.node_count, 2))
    noise_dbm = rng.normal(config.noise_mean_dbm, config.noise_stddev_dbm, size=config.node_count)
    deltas = positions[:, None, :] - positions[None, :, :]
    distances = np.sqrt((deltas ** 2).sum(axis=2))
    adjacency = distances <= radius
    np.fill_diagonal(adjacency, False)
    tails, heads = np.nonzero(adjacency)
    edges = list(zip(tails.tolist(), heads.tolist()))
    return positions, dbm_to_watts(noise_dbm), edges


def generate_instance(config: GeneratorConfig) -> NetworkInstance:
    """
    Generate a random geometric digraph.

    Nodes are placed uniformly in [0, area_side]^2; edge (i, j) exists iff
    d_ij <= connection_radius. Draws whose destination is unreachable (or whose
    endpoints coincide) are redrawn from the same stream, up to max_retries.

    Args:
        config: Generator parameters

    Returns:
        The generated instance

    Raises:
        UnreachableDestinationError: If every attempt fails
    """
    radius = config.connection_radius or calibrated_radius(config.node_count, area_side=config.area_side)
    rng = np.random.default_rng(config.seed)
    log = logger.bind(nodes=config.node_count, seed=config.seed)

    for attempt in range(1, config.max_retries + 1):
        positions, noise, edges = draw_topology(config, radius, rng)
        source, destination = select_endpoints(config.node_count, edges, config)
        if source is None or destination is None or source == destination:
            log.debug(f"attempt {attempt}: no usable endpoints")
            continue

        instance = NetworkInstance(
            nodes=[
                NodeRecord(id=index, x=float(x), y=float(y), noise_power=float(power))
                for index, ((x, y), power) in enumerate(zip(positions, noise))
            ],
            edges=[EdgeRecord(tail=tail, head=head) for tail, head in edges],
            source=source,
            destination=destination,
        )
        if instance.is_destination_reachable():
            log.info(f"generated {instance.edge_count} edges (radius={radius:.2f} m, attempt {attempt})")
            return instance
        log.debug(f"attempt {attempt}: destination {destination} unreachable from {source}")

    raise UnreachableDestinationError(
        f"{ErrorMessages.UNREACHABLE.format(source='S', destination='D')} after {config.max_retries} attempts"
    )


def require_reachable(instance: NetworkInstance) -> NetworkInstance:
    """Return the instance, or raise if D is unreachable from S."""
    if not instance.is_destination_reachable():
        raise UnreachableDestinationError(
            ErrorMessages.UNREACHABLE.format(source=instance.source, destination=instance.destination)
        )
    return instance
