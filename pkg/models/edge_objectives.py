"""
Per-edge objective coefficients.

This module defines EdgeObjectives, the loss, bit error and hop weight of every edge
of an instance, indexed like the instance's edge list.
"""
from dataclasses import dataclass

import numpy as np

from models.enums import Objective


@dataclass(frozen=True, eq=False)
class EdgeObjectives:
    """
    Loss L_ij, bit error p_ij and hop weight h_ij per edge.

    Intermediates of the link budget (received power, SNR and mean noise) are kept
    for inspection and export.
    """

    loss: np.ndarray
    ber: np.ndarray
    hop: np.ndarray
    received_power: np.ndarray
    snr: np.ndarray
    mean_noise: np.ndarray

    def __post_init__(self):
        sizes = {array.shape for array in (self.loss, self.ber, self.hop, self.received_power, self.snr, self.mean_noise)}
        if len(sizes) != 1:
            raise ValueError(f"objective arrays must share one shape, got {sorted(sizes)}")

    @property
    def edge_count(self) -> int:
        return int(self.loss.shape[0])

    def values(self, objective: Objective) -> np.ndarray:
        if objective == Objective.LOSS:
            return self.loss
        if objective == Objective.BER:
            return self.ber
        return self.hop

    def stacked(self) -> np.ndarray:
        """(E, 3) matrix with columns loss, ber, hops."""
        return np.column_stack([self.loss, self.ber, self.hop])
