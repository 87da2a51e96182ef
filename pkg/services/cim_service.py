"""
Coherent Ising machine simulator.

Integrates the in-phase (c) and quadrature (s) amplitudes of the oscillator network
with explicit Euler steps:

    dc_i/dt = (-1 + p - (c_i^2 + s_i^2)) c_i + sum_j J_ij c_j + h_i - 2 u_i c_i
    ds_i/dt = (-1 - p - (c_i^2 + s_i^2)) s_i + sum_j J_ij s_j + h_i - 2 u_i s_i

J, h and u are the Ising couplings, fields and diagonal multiplied by the coupling
scale. The field enters with the sign of the negative energy gradient, so the drive
moves each spin toward lower ising_energy. The u term is the gradient of the relaxed
energy's diagonal and is zero for plain Ising models. Spins are read out as the sign
of c.
"""
import math
import time
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence, Tuple

import numpy as np

from config.constants import CimDefaults, ErrorMessages
from config.settings import settings
from models.cim_state import CimState
from models.enums import PumpSchedule
from models.ising_model import IsingModel
from schemas.cim_schema import CimConfig, CimFailure, CimSample, CimSolution, TraceRow
from services.ising_service import ising_energy
from utils.exceptions import CimDivergenceError, ConfigurationError
from utils.logging_utils import get_context_logger, log_solver_error
from utils.seeding import spawn_generators

logger = get_context_logger(__name__)

NOISE_BLOCK_STEPS = 256


def initial_pump(config: CimConfig) -> float:
    """p(0): zero for the ramp, p_max for the recursive schedule."""
    if config.pump_schedule == PumpSchedule.RECURSIVE:
        return config.pump_max
    return 0.0


def pump_update(p: float, t: int, config: CimConfig) -> float:
    """
    Pump value at step t.

    tanh_ramp:        p(t) = p_max * tanh(rate * t)
    paper_recursive:  p(t) = p(t - 1) * tanh(0.0005 * t)
    """
    if config.pump_schedule == PumpSchedule.RECURSIVE:
        if t < 1:
            raise ConfigurationError("the recursive pump schedule starts at t = 1")
        return p * math.tanh(CimDefaults.RECURSIVE_RATE * t)
    return config.pump_max * math.tanh(config.pump_rate * t)


def _row_strength(model: IsingModel) -> np.ndarray:
    return np.abs(model.symmetric()).sum(axis=1) + 2.0 * np.abs(model.diagonal)


def automatic_coupling_scale(model: IsingModel) -> float:
    """1 / max_i (sum_j |J_ij| + 2 |u_i| + |h_i|); 1.0 for an all-zero model."""
    strength = _row_strength(model) + np.abs(model.field)
    peak = float(strength.max()) if strength.size else 0.0
    return 1.0 / peak if peak > 0 else 1.0


def stable_time_step(model: IsingModel, config: CimConfig, scale: float) -> float:
    """
    Largest Euler step kept well inside the stability bound of the scaled model.

    The linearized drive is bounded by scale * max_i (sum_j |J_ij| + 2 |u_i|) plus the
    on-site gain range for pump values up to p_max and amplitudes up to the clamp.
    """
    coupling = scale * float(_row_strength(model).max()) if model.dimension else 0.0
    on_site = config.pump_max + 1.0 + 4.0 * config.amplitude_clamp ** 2
    return CimDefaults.STABLE_STEP_FRACTION / (coupling + on_site)


def readout(state: CimState) -> np.ndarray:
    """s_i = -1 where c_i < 0, else +1 (c_i = 0 reads as +1)."""
    return np.where(state.in_phase < 0, -1, 1).astype(int)


class NoiseStream:
    """Gaussian draws of one restart, fetched from its generator a block of steps at a time."""

    def __init__(self, rng: np.random.Generator, dimension: int, block_steps: int = NOISE_BLOCK_STEPS):
        self.rng = rng
        self.dimension = dimension
        self.block_steps = block_steps
        self._block = np.empty((0, dimension))
        self._cursor = 0

    def draw(self) -> np.ndarray:
        if self._cursor == self._block.shape[0]:
            self._block = self.rng.standard_normal((self.block_steps, self.dimension))
            self._cursor = 0
        row = self._block[self._cursor]
        self._cursor += 1
        return row


class AmplitudeDynamics:
    """
    Euler integrator bound to one model and configuration.

    Works on vectors of shape (N,) or batches of shape (N, B), one column per restart.
    """

    def __init__(self, model: IsingModel, config: CimConfig):
        self.model = model
        self.config = config
        self.coupling_scale = config.coupling_scale or automatic_coupling_scale(model)
        self.time_step = config.time_step or stable_time_step(model, config, self.coupling_scale)
        self.coupling = model.sparse_symmetric() * self.coupling_scale
        self.field = model.field * self.coupling_scale
        self.self_feedback = 2.0 * model.diagonal * self.coupling_scale
        self.noise_scale = config.noise_amplitude * math.sqrt(self.time_step)

    def _drive(self, amplitudes: np.ndarray) -> np.ndarray:
        if amplitudes.ndim == 1:
            return self.coupling @ amplitudes + self.field - self.self_feedback * amplitudes
        return self.coupling @ amplitudes + self.field[:, None] - self.self_feedback[:, None] * amplitudes

    def advance(self, c: np.ndarray, s: np.ndarray, p: float, t: int,
                noise: Optional[np.ndarray] = None) -> Tuple[np.ndarray, np.ndarray, float]:
        """
        One Euler step from step index t to t + 1.

        Args:
            noise: Standard normal draws shaped like c; required when noise_amplitude > 0

        Returns:
            (c, s, p) after the step, amplitudes not yet clamped or checked
        """
        dt = self.time_step
        intensity = c * c + s * s
        c_next = c + dt * ((-1.0 + p - intensity) * c + self._drive(c))
        s_next = s + dt * ((-1.0 - p - intensity) * s + self._drive(s))
        if self.noise_scale > 0.0:
            if noise is None:
                raise ConfigurationError("a random generator is required when noise_amplitude > 0")
            c_next = c_next + self.noise_scale * noise
        return c_next, s_next, pump_update(p, t + 1, self.config)

    def clamp(self, amplitudes: np.ndarray) -> np.ndarray:
        bound = self.config.amplitude_clamp
        return np.clip(amplitudes, -bound, bound)

    def step(self, state: CimState, rng: Optional[np.random.Generator] = None) -> CimState:
        """Advance a single-restart state by one step, aborting on non-finite values."""
        noise = None
        if self.noise_scale > 0.0 and rng is not None:
            noise = rng.standard_normal(state.dimension)
        c, s, p = self.advance(state.in_phase, state.quadrature, state.pump, state.step, noise)
        bad = np.flatnonzero(~(np.isfinite(c) & np.isfinite(s)))
        if bad.size:
            spin = int(bad[0])
            raise CimDivergenceError(ErrorMessages.DIVERGENCE.format(step=state.step + 1, spin=spin),
                                     step=state.step + 1, spin=spin)
        return CimState(self.clamp(c), self.clamp(s), p, state.step + 1)


def step(state: CimState, model: IsingModel, config: CimConfig,
         rng: Optional[np.random.Generator] = None) -> CimState:
    """
    One explicit Euler step of the amplitude equations.

    Args:
        state: Current amplitudes, pump value and step index
        model: Ising model (dimension must match the state)
        config: Integration parameters
        rng: Generator for the noise term (needed only when noise_amplitude > 0)

    Returns:
        The next state, amplitudes clamped to the configured bound

    Raises:
        CimDivergenceError: If an amplitude becomes NaN or infinite
    """
    if state.dimension != model.dimension:
        raise ConfigurationError(f"state has {state.dimension} spins, model has {model.dimension}")
    return AmplitudeDynamics(model, config).step(state, rng)


def initial_state(dimension: int, config: CimConfig, rng: np.random.Generator) -> CimState:
    """Amplitudes uniform in [-a0, a0]; c drawn before s."""
    a0 = config.init_amplitude
    c = rng.uniform(-a0, a0, size=dimension)
    s = rng.uniform(-a0, a0, size=dimension)
    return CimState(c, s, initial_pump(config), 0)


def _energies(model: IsingModel, c: np.ndarray) -> List[float]:
    """Readout energy of every column, each evaluated on its own."""
    spins = np.where(c < 0, -1, 1)
    return [ising_energy(model, spins[:, column]) for column in range(spins.shape[1])]


def _integrate_batch(dynamics: AmplitudeDynamics, restarts: List[int],
                     rngs: List[np.random.Generator]) -> Tuple[List[CimSample], List[CimFailure]]:
    """Integrate a block of restarts together; each column belongs to one restart."""
    config = dynamics.config
    model = dynamics.model
    states = [initial_state(model.dimension, config, rng) for rng in rngs]
    streams = [NoiseStream(rng, model.dimension) for rng in rngs]
    active = list(range(len(restarts)))
    c = np.column_stack([state.in_phase for state in states]) if states else np.zeros((model.dimension, 0))
    s = np.column_stack([state.quadrature for state in states]) if states else np.zeros((model.dimension, 0))
    p = initial_pump(config)
    traces = {restart: [] for restart in restarts}
    failures: List[CimFailure] = []

    for t in range(config.iterations):
        noise = None
        if dynamics.noise_scale > 0.0 and active:
            noise = np.column_stack([streams[column].draw() for column in active])
        c, s, p = dynamics.advance(c, s, p, t, noise)
        finite = np.isfinite(c) & np.isfinite(s)
        broken = np.flatnonzero(~finite.all(axis=0))
        if broken.size:
            for column in broken:
                restart = restarts[active[column]]
                spin = int(np.flatnonzero(~finite[:, column])[0])
                error = CimDivergenceError(ErrorMessages.DIVERGENCE.format(step=t + 1, spin=spin), step=t + 1, spin=spin)
                error_id = log_solver_error(logger.logger, "integrate", "cim restart", restart, error)
                failures.append(CimFailure(restart=restart, step=t + 1, spin=spin, error_id=error_id, message=str(error)))
            keep = np.flatnonzero(finite.all(axis=0))
            active = [active[column] for column in keep]
            c, s = c[:, keep], s[:, keep]
        c, s = dynamics.clamp(c), dynamics.clamp(s)

        if config.trace_every and (t + 1) % config.trace_every == 0 and active:
            for column, value in zip(active, _energies(model, c)):
                traces[restarts[column]].append(
                    TraceRow(restart=restarts[column], step=t + 1, pump=p, energy=value)
                )

    samples: List[CimSample] = []
    if active:
        spins = np.where(c < 0, -1, 1).astype(int)
        for column, value in enumerate(_energies(model, c)):
            restart = restarts[active[column]]
            samples.append(CimSample(restart=restart, spins=spins[:, column].tolist(), energy=value,
                                     trace=traces[restart]))
    return samples, failures


def solve(model: IsingModel, config: CimConfig, restarts: int = 1, workers: Optional[int] = None) -> CimSolution:
    """
    Run independent restarts and read out one spin vector per restart.

    Each restart draws its initial amplitudes (and noise) from its own generator,
    spawned from config.seed, so results do not depend on how restarts are split
    across workers.

    Args:
        model: Ising model to minimize
        config: Integration parameters
        restarts: Number of independent restarts (>= 1)
        workers: Worker threads (default: settings)

    Returns:
        CimSolution with samples sorted by energy, then restart index, and the
        diverged restarts listed as failures
    """
    if restarts < 1:
        raise ConfigurationError("restarts must be >= 1")
    dynamics = AmplitudeDynamics(model, config)
    rngs = spawn_generators(config.seed, restarts)
    worker_count = min(settings.resolve_workers(workers), restarts)
    blocks = [list(range(restarts))[index::worker_count] for index in range(worker_count)]

    started = time.perf_counter()
    samples: List[CimSample] = []
    failures: List[CimFailure] = []
    if worker_count == 1:
        results = [_integrate_batch(dynamics, blocks[0], [rngs[r] for r in blocks[0]])]
    else:
        with ThreadPoolExecutor(max_workers=worker_count) as pool:
            futures = [pool.submit(_integrate_batch, dynamics, block, [rngs[r] for r in block]) for block in blocks]
            results = [future.result() for future in futures]
    for block_samples, block_failures in results:
        samples.extend(block_samples)
        failures.extend(block_failures)

    samples.sort(key=lambda sample: (sample.energy, sample.restart))
    failures.sort(key=lambda failure: failure.restart)
    elapsed = time.perf_counter() - started
    best = f"{samples[0].energy:.6g}" if samples else "n/a"
    logger.debug(f"{restarts} restarts on {model.dimension} spins in {elapsed:.3f}s, best energy {best}, "
                 f"{len(failures)} diverged")
    return CimSolution(samples=samples, failures=failures, coupling_scale=dynamics.coupling_scale,
                       time_step=dynamics.time_step)
