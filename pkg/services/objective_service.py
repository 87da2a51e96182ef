"""
Objective coefficients of the routing problem.

Path loss, bit error probability and hop weight per edge, and their scalarization
into one non-negative cost per edge.
"""
import math

import numpy as np

from config.constants import FOUR_PI
from models.edge_objectives import EdgeObjectives
from models.enums import NormalizationMode
from schemas.network_schema import NetworkInstance
from schemas.objective_schema import RadioConfig, ScalarWeights
from utils.exceptions import ObjectiveDomainError
from utils.logging_utils import get_context_logger

logger = get_context_logger(__name__)


def path_loss(d, radio: RadioConfig):
    """
    Free-space style loss (4 pi d / lambda_c) ^ alpha.

    Args:
        d: Distance in meters (scalar or array), strictly positive
        radio: Link parameters

    Returns:
        Dimensionless loss, same shape as d

    Raises:
        ObjectiveDomainError: If any distance is not positive
    """
    distances = np.asarray(d, dtype=float)
    if np.any(distances <= 0) or np.any(~np.isfinite(distances)):
        raise ObjectiveDomainError(f"path loss needs positive finite distances, got {d!r}")
    # relative to the reference distance lambda_c / 4pi, where the loss is exactly 1
    loss = (distances / (radio.carrier_wavelength / FOUR_PI)) ** radio.path_loss_exponent
    return float(loss) if np.ndim(d) == 0 else loss


def ber_from_snr(snr):
    """
    p = (1 - sqrt(R / (R + 1))) / 2, evaluated without cancellation.

    The algebraically equal form 1 / (2 (R + 1) (1 + sqrt(R / (R + 1)))) keeps p
    strictly positive for large R.
    """
    r = np.asarray(snr, dtype=float)
    p = 0.5 / ((r + 1.0) * (1.0 + np.sqrt(r / (r + 1.0))))
    return float(p) if np.ndim(snr) == 0 else p


def _link_budget(distances: np.ndarray, noise_tail: np.ndarray, noise_head: np.ndarray, radio: RadioConfig):
    if np.any(noise_tail <= 0) or np.any(noise_head <= 0):
        raise ObjectiveDomainError("noise power must be positive")
    loss = np.asarray(path_loss(distances, radio), dtype=float)
    received = radio.transmit_power / loss
    mean_noise = 0.5 * (noise_tail + noise_head)
    snr = received / (math.log2(radio.modulation_order) * mean_noise)
    return loss, received, mean_noise, snr


def bit_error(edge: int, instance: NetworkInstance, radio: RadioConfig) -> float:
    """
    Bit error probability of one edge.

    Args:
        edge: Edge index in instance.edges
        instance: Network instance
        radio: Link parameters

    Returns:
        Probability strictly inside (0, 0.5) for finite positive SNR

    Raises:
        ObjectiveDomainError: For a non-positive noise power or zero-length edge
        IndexError: If the edge index does not exist
    """
    record = instance.edges[edge]
    tail = instance.nodes[record.tail]
    head = instance.nodes[record.head]
    distance = math.hypot(tail.x - head.x, tail.y - head.y)
    _, _, _, snr = _link_budget(
        np.array([distance]), np.array([tail.noise_power]), np.array([head.noise_power]), radio
    )
    return float(ber_from_snr(snr)[0])


def compute_edge_objectives(instance: NetworkInstance, radio: RadioConfig) -> EdgeObjectives:
    """
    Loss, bit error and hop weight for every edge, in edge order.
    """
    pairs = instance.edge_array()
    noise = instance.noise_powers()
    loss, received, mean_noise, snr = _link_budget(
        instance.edge_lengths(), noise[pairs[:, 0]], noise[pairs[:, 1]], radio
    )
    return EdgeObjectives(
        loss=loss,
        ber=np.asarray(ber_from_snr(snr), dtype=float),
        hop=np.ones(instance.edge_count),
        received_power=received,
        snr=snr,
        mean_noise=mean_noise,
    )


def normalize(values: np.ndarray, mode: NormalizationMode) -> np.ndarray:
    """Divide by the maximum over all edges (mode max) or return a copy."""
    values = np.asarray(values, dtype=float)
    if mode == NormalizationMode.NONE:
        return values.copy()
    peak = float(values.max())
    return values / peak if peak > 0 else values.copy()


def scalarize(objs: EdgeObjectives, w: ScalarWeights,
              normalization: NormalizationMode = NormalizationMode.MAX) -> np.ndarray:
    """
    Per-edge cost c_e = v1 * L_e + v2 * p_e + v3 * h_e on normalized objectives.

    Args:
        objs: Edge objectives
        w: Scalarization weights
        normalization: max (default) or none

    Returns:
        Non-negative cost per edge

    Raises:
        ObjectiveDomainError: If the instance has no edges
    """
    if objs.edge_count == 0:
        raise ObjectiveDomainError("cannot scalarize an empty edge set")
    costs = (
        w.v1 * normalize(objs.loss, normalization)
        + w.v2 * normalize(objs.ber, normalization)
        + w.v3 * normalize(objs.hop, normalization)
    )
    logger.debug(f"scalarized {objs.edge_count} edges with weights {w.label()} ({normalization.value})")
    return costs


def route_totals(objs: EdgeObjectives, edges) -> tuple:
    """Sum of (loss, ber, hops) over the selected edge indices."""
    selected = np.fromiter(edges, dtype=int)
    if selected.size == 0:
        return 0.0, 0.0, 0.0
    return float(objs.loss[selected].sum()), float(objs.ber[selected].sum()), float(objs.hop[selected].sum())
