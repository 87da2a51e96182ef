"""
Ising spin model.

Energy convention: E(s) = -sum_{k<l} J_kl s_k s_l - sum_k h_k s_k + offset, with J stored
strictly upper triangular.

diagonal (u_k >= 0 for models converted from penalized QUBOs) defines the relaxed
energy of real amplitudes, E(c) + sum_k u_k (c_k^2 - 1). It vanishes at every spin
vector, so spin energies never read it.
"""
from dataclasses import dataclass
from typing import Optional

import numpy as np
import scipy.sparse


@dataclass(frozen=True, eq=False)
class IsingModel:
    coupling: np.ndarray
    field: np.ndarray
    offset: float = 0.0
    diagonal: Optional[np.ndarray] = None

    def __post_init__(self):
        coupling = np.asarray(self.coupling, dtype=float)
        field = np.asarray(self.field, dtype=float)
        n = field.shape[0]
        if field.ndim != 1 or coupling.shape != (n, n):
            raise ValueError(f"coupling must be ({n}, {n}), got {coupling.shape}")
        if np.any(np.tril(coupling) != 0.0):
            raise ValueError("coupling must be strictly upper triangular (zero diagonal)")
        diagonal = np.zeros(n) if self.diagonal is None else np.asarray(self.diagonal, dtype=float)
        if diagonal.shape != (n,):
            raise ValueError(f"diagonal must have length {n}, got {diagonal.shape}")
        object.__setattr__(self, "coupling", coupling)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "offset", float(self.offset))
        object.__setattr__(self, "diagonal", diagonal)

    @property
    def dimension(self) -> int:
        return int(self.field.shape[0])

    @classmethod
    def zeros(cls, dimension: int) -> "IsingModel":
        return cls(np.zeros((dimension, dimension)), np.zeros(dimension), 0.0)

    def symmetric(self) -> np.ndarray:
        """J mirrored to both triangles, so row i holds every J_ij with j != i."""
        return self.coupling + self.coupling.T

    def sparse_symmetric(self) -> scipy.sparse.csr_matrix:
        """CSR form of the mirrored couplings; a sweep costs O(nnz)."""
        upper = scipy.sparse.coo_matrix(self.coupling)
        return (upper + upper.T).tocsr()
