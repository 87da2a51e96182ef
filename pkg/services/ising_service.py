"""Exact QUBO to Ising conversion under s = 2x - 1."""
import numpy as np

from config.constants import ErrorMessages
from models.ising_model import IsingModel
from models.qubo_model import QuboModel
from utils.exceptions import DimensionMismatchError, SpinDomainError


def qubo_to_ising(model: QuboModel) -> IsingModel:
    """
    Convert a QUBO to the Ising model with the same energy at s = 2x - 1.

    J_kl = -Q_kl / 4
    h_k = -q_k / 2 - sum_l Q_kl / 4      (Q mirrored, sum over l != k)
    offset = sum q / 2 + sum_{k<l} Q_kl / 4 + QUBO offset
    u_k = d_k / 4                        (d: folded x_k^2 coefficients)
    """
    upper = model.quadratic
    coupling = -upper / 4.0
    row_sums = model.symmetric().sum(axis=1)
    field = -model.linear / 2.0 - row_sums / 4.0
    offset = float(model.linear.sum() / 2.0 + upper.sum() / 4.0 + model.offset)
    return IsingModel(coupling, field, offset, model.diagonal / 4.0)


def _as_spins(dimension: int, spins) -> np.ndarray:
    spins = np.asarray(spins)
    if spins.shape != (dimension,):
        raise DimensionMismatchError(ErrorMessages.DIMENSION_MISMATCH.format(expected=dimension, actual=spins.shape))
    if not np.all((spins == 1) | (spins == -1)):
        raise SpinDomainError("spins must be -1 or +1")
    return spins.astype(float)


def ising_energy(model: IsingModel, spins) -> float:
    """
    -sum_{k<l} J_kl s_k s_l - sum_k h_k s_k + offset.

    Minimizing this energy minimizes the source QUBO.

    Raises:
        SpinDomainError: If an entry is not -1 or +1
        DimensionMismatchError: On length mismatch
    """
    s = _as_spins(model.dimension, spins)
    return float(-(s @ model.coupling @ s) - model.field @ s + model.offset)


def ising_energies(model: IsingModel, spin_block: np.ndarray) -> np.ndarray:
    """Energies of a (B, N) block of spin vectors."""
    block = np.asarray(spin_block, dtype=float)
    return -np.einsum("bi,ij,bj->b", block, model.coupling, block) - block @ model.field + model.offset


def spins_from_binary(x) -> np.ndarray:
    return 2 * np.asarray(x, dtype=int) - 1


def binary_from_spins(spins) -> np.ndarray:
    return (np.asarray(spins, dtype=int) + 1) // 2
