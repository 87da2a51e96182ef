"""Configuration and result schemas of the coherent Ising machine simulator."""
from typing import List, Optional

from pydantic import Field

from config.constants import CimDefaults, RoutingCimDefaults
from models.enums import PumpSchedule
from schemas.base_schema import BaseSchema


class CimConfig(BaseSchema):
    """Integration and pump parameters."""

    iterations: int = Field(CimDefaults.ITERATIONS, ge=1, description="Euler steps per restart")
    time_step: Optional[float] = Field(
        CimDefaults.TIME_STEP, gt=0, description="Euler step dt; largest stable step for the model when omitted"
    )
    pump_schedule: PumpSchedule = Field(PumpSchedule.TANH_RAMP, description="Pump schedule")
    pump_max: float = Field(CimDefaults.PUMP_MAX, gt=0, description="Ramp target p_max, also p(0) of the recursive schedule")
    pump_rate: float = Field(CimDefaults.PUMP_RATE, gt=0, description="Ramp rate epsilon of tanh_ramp")
    init_amplitude: float = Field(CimDefaults.INIT_AMPLITUDE, gt=0, description="Initial amplitudes drawn from [-a0, a0]")
    noise_amplitude: float = Field(CimDefaults.NOISE_AMPLITUDE, ge=0, description="Additive Gaussian noise xi")
    amplitude_clamp: float = Field(CimDefaults.AMPLITUDE_CLAMP, gt=0, description="Bound on |c_i| and |s_i|")
    coupling_scale: Optional[float] = Field(
        None, gt=0, description="Factor applied to J and h before integration; automatic when omitted"
    )
    seed: int = Field(0, ge=0, lt=2 ** 64, description="64-bit seed")
    trace_every: Optional[int] = Field(None, ge=1, description="Record a trace row every k steps")

    @classmethod
    def routing(cls, **updates) -> "CimConfig":
        """
        Settings for penalized routing models: amplitudes walled at 1, the pump settling
        at 2 so the wells sit on the walls, noise on, and an automatic stable step.
        """
        values = dict(
            iterations=RoutingCimDefaults.ITERATIONS,
            time_step=None,
            pump_max=RoutingCimDefaults.PUMP_MAX,
            pump_rate=RoutingCimDefaults.PUMP_RATE,
            noise_amplitude=RoutingCimDefaults.NOISE_AMPLITUDE,
            amplitude_clamp=RoutingCimDefaults.AMPLITUDE_CLAMP,
        )
        values.update(updates)
        return cls(**values)


class TraceRow(BaseSchema):
    """One convergence sample of a restart."""

    restart: int
    step: int
    pump: float
    energy: float


class CimSample(BaseSchema):
    """Spin configuration read out at the end of one restart."""

    restart: int = Field(..., ge=0)
    spins: List[int]
    energy: float
    trace: List[TraceRow] = Field(default_factory=list)


class CimFailure(BaseSchema):
    """Restart aborted because the integration diverged."""

    restart: int = Field(..., ge=0)
    step: int
    spin: int
    error_id: str
    message: str


class CimSolution(BaseSchema):
    """All restarts of one solve, samples sorted by energy then restart index."""

    samples: List[CimSample] = Field(default_factory=list)
    failures: List[CimFailure] = Field(default_factory=list)
    coupling_scale: float = Field(..., gt=0)
    time_step: float = Field(..., gt=0, description="Euler step actually used")

    @property
    def best(self) -> Optional[CimSample]:
        return self.samples[0] if self.samples else None

    @property
    def restarts(self) -> int:
        return len(self.samples) + len(self.failures)
