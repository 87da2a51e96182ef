"""Amplitude state of the simulated oscillator network."""
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, eq=False)
class CimState:
    """In-phase c, quadrature s, current pump value and step index."""

    in_phase: np.ndarray
    quadrature: np.ndarray
    pump: float
    step: int = 0

    def __post_init__(self):
        if self.in_phase.shape != self.quadrature.shape:
            raise ValueError("in-phase and quadrature vectors must have equal length")

    @property
    def dimension(self) -> int:
        return int(self.in_phase.shape[0])

    def is_finite(self) -> bool:
        return bool(np.all(np.isfinite(self.in_phase)) and np.all(np.isfinite(self.quadrature)))
