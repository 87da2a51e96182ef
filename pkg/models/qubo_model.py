"""
Quadratic unconstrained binary model.

Energy convention: E(x) = sum_{k<l} Q_kl x_k x_l + sum_k q_k x_k + offset, with Q stored
as a strictly upper-triangular matrix holding the folded ordered-pair sum Q_kl + Q_lk.

diagonal keeps the x_k^2 coefficients that were folded into q. Binary energies never
read it; continuous relaxations use it to restore the unfolded quadratic form.
"""
from dataclasses import dataclass
from typing import Optional

import numpy as np


@dataclass(frozen=True, eq=False)
class QuboModel:
    quadratic: np.ndarray
    linear: np.ndarray
    offset: float = 0.0
    diagonal: Optional[np.ndarray] = None

    def __post_init__(self):
        quadratic = np.asarray(self.quadratic, dtype=float)
        linear = np.asarray(self.linear, dtype=float)
        n = linear.shape[0]
        if linear.ndim != 1 or quadratic.shape != (n, n):
            raise ValueError(f"quadratic must be ({n}, {n}), got {quadratic.shape}")
        if np.any(np.tril(quadratic) != 0.0):
            raise ValueError("quadratic must be strictly upper triangular (zero diagonal)")
        diagonal = np.zeros(n) if self.diagonal is None else np.asarray(self.diagonal, dtype=float)
        if diagonal.shape != (n,):
            raise ValueError(f"diagonal must have length {n}, got {diagonal.shape}")
        object.__setattr__(self, "quadratic", quadratic)
        object.__setattr__(self, "linear", linear)
        object.__setattr__(self, "offset", float(self.offset))
        object.__setattr__(self, "diagonal", diagonal)

    @property
    def dimension(self) -> int:
        return int(self.linear.shape[0])

    @classmethod
    def zeros(cls, dimension: int) -> "QuboModel":
        return cls(np.zeros((dimension, dimension)), np.zeros(dimension), 0.0)

    @classmethod
    def from_ordered_pairs(cls, matrix: np.ndarray, linear: np.ndarray, offset: float = 0.0) -> "QuboModel":
        """
        Fold a full matrix of ordered-pair coefficients into the stored convention.

        Diagonal entries are moved to the linear terms (x_k^2 = x_k) and remembered
        in diagonal.
        """
        matrix = np.asarray(matrix, dtype=float)
        folded = np.triu(matrix + matrix.T, k=1)
        squares = np.diag(matrix).copy()
        return cls(folded, np.asarray(linear, dtype=float) + squares, offset, squares)

    def symmetric(self) -> np.ndarray:
        """Q-tilde mirrored to both triangles (zero diagonal)."""
        return self.quadratic + self.quadratic.T
