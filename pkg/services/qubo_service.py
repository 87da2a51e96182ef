"""
Penalized QUBO construction for the routing problem.

H(x) = f(x) + P1 (sum_out(S) x - 1)^2 + P2 (sum_in(D) x - 1)^2
            + P3 sum_{i not in {S, D}} (sum_out(i) x - sum_in(i) x)^2
"""
from typing import Dict, Tuple

import numpy as np

from config.constants import ErrorMessages, PenaltyDefaults
from models.qubo_model import QuboModel
from models.variable_map import VariableMap
from schemas.network_schema import NetworkInstance
from schemas.penalty_schema import PenaltyConfig
from utils.exceptions import DimensionMismatchError, ObjectiveDomainError
from utils.logging_utils import get_context_logger

logger = get_context_logger(__name__)


def default_penalties(costs) -> PenaltyConfig:
    """
    P1 = P2 = 2 * sum(c), P3 = 2 * P1, with a floor of 1.0 on P1 and P2.

    Any single unit of constraint violation then costs more than selecting every
    edge, so penalized minima are feasible.
    """
    costs = np.asarray(costs, dtype=float)
    if costs.size == 0:
        raise ObjectiveDomainError("default penalties need at least one edge cost")
    unit = max(PenaltyDefaults.COST_MULTIPLIER * float(costs.sum()), PenaltyDefaults.MIN_PENALTY)
    return PenaltyConfig(p1=unit, p2=unit, p3=PenaltyDefaults.BALANCE_MULTIPLIER * unit)


def _add_squared_constraint(matrix: np.ndarray, linear: np.ndarray, coefficients: Dict[int, float],
                            target: float, weight: float) -> float:
    """
    Accumulate weight * (sum_k a_k x_k - target)^2 into ordered-pair form.

    Returns the constant term weight * target^2.
    """
    items = sorted(coefficients.items())
    for position, (k, a_k) in enumerate(items):
        matrix[k, k] += weight * a_k * a_k
        linear[k] -= 2.0 * weight * target * a_k
        for l, a_l in items[position + 1:]:
            matrix[k, l] += 2.0 * weight * a_k * a_l
    return weight * target * target


def build_qubo(instance: NetworkInstance, costs, penalties: PenaltyConfig,
               variable_map: VariableMap = None) -> QuboModel:
    """
    Build the penalized QUBO of an instance.

    Args:
        instance: Network instance
        costs: Scalarized cost per edge, in variable order
        penalties: Penalty coefficients
        variable_map: Edge/variable bijection (default: from the instance)

    Returns:
        QuboModel whose energy equals f(x) plus the three penalty terms; its diagonal
        holds the squared-penalty coefficients of each variable

    Raises:
        DimensionMismatchError: If costs or the map do not match the edge count
    """
    variable_map = variable_map or VariableMap.from_instance(instance)
    costs = np.asarray(costs, dtype=float)
    n = len(variable_map)
    if n != instance.edge_count or costs.shape != (n,):
        raise DimensionMismatchError(
            ErrorMessages.DIMENSION_MISMATCH.format(expected=instance.edge_count, actual=costs.shape)
        )
    if not penalties.balance_dominates:
        logger.warning(f"p3={penalties.p3} is below p1={penalties.p1} or p2={penalties.p2}")

    matrix = np.zeros((n, n))
    linear = costs.copy()
    offset = 0.0

    offset += _add_squared_constraint(
        matrix, linear, {k: 1.0 for k in variable_map.indices_from(instance.source)}, 1.0, penalties.p1
    )
    offset += _add_squared_constraint(
        matrix, linear, {k: 1.0 for k in variable_map.indices_into(instance.destination)}, 1.0, penalties.p2
    )
    for node in range(instance.node_count):
        if node in (instance.source, instance.destination):
            continue
        balance = {k: 1.0 for k in variable_map.indices_from(node)}
        balance.update({k: -1.0 for k in variable_map.indices_into(node)})
        if balance:
            offset += _add_squared_constraint(matrix, linear, balance, 0.0, penalties.p3)

    model = QuboModel.from_ordered_pairs(matrix, linear, offset)
    logger.debug(f"built QUBO with {n} variables, {int(np.count_nonzero(model.quadratic))} couplings")
    return model


def _as_binary(model_dimension: int, x) -> np.ndarray:
    x = np.asarray(x)
    if x.shape != (model_dimension,):
        raise DimensionMismatchError(ErrorMessages.DIMENSION_MISMATCH.format(expected=model_dimension, actual=x.shape))
    if not np.all((x == 0) | (x == 1)):
        raise DimensionMismatchError("assignment entries must be 0 or 1")
    return x.astype(float)


def energy(model: QuboModel, x) -> float:
    """
    sum_{k<l} Q_kl x_k x_l + sum_k q_k x_k + offset.

    Raises:
        DimensionMismatchError: On length mismatch or non-binary entries
    """
    x = _as_binary(model.dimension, x)
    return float(x @ model.quadratic @ x + model.linear @ x + model.offset)


def energies(model: QuboModel, assignments: np.ndarray) -> np.ndarray:
    """Energies of a (B, N) block of binary assignments."""
    block = np.asarray(assignments, dtype=float)
    return np.einsum("bi,ij,bj->b", block, model.quadratic, block) + block @ model.linear + model.offset


def penalty_terms(instance: NetworkInstance, x, variable_map: VariableMap = None) -> Tuple[float, float, float]:
    """
    Raw squared violations (source, destination, balance) of an assignment.

    Computed directly from degrees, independently of the QUBO coefficients.
    """
    variable_map = variable_map or VariableMap.from_instance(instance)
    x = np.asarray(x)
    out_degree = np.zeros(instance.node_count)
    in_degree = np.zeros(instance.node_count)
    for k, (tail, head) in enumerate(variable_map):
        out_degree[tail] += x[k]
        in_degree[head] += x[k]
    source_term = (out_degree[instance.source] - 1.0) ** 2
    destination_term = (in_degree[instance.destination] - 1.0) ** 2
    interior = [node for node in range(instance.node_count) if node not in (instance.source, instance.destination)]
    balance_term = float(((out_degree[interior] - in_degree[interior]) ** 2).sum())
    return float(source_term), float(destination_term), balance_term
