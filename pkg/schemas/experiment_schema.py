"""Experiment configuration, per-run records and aggregated summaries."""
from typing import List, Optional, Tuple

from pydantic import Field, field_validator, model_validator

from config.constants import ExperimentDefaults, GeneratorDefaults, OracleConfig
from models.enums import Classification, NormalizationMode, Objective
from schemas.base_schema import BaseSchema
from schemas.cim_schema import CimConfig
from schemas.objective_schema import RadioConfig, ScalarWeights, canonical_objectives
from schemas.penalty_schema import PenaltyConfig


class ExperimentConfig(BaseSchema):
    """Protocol of one experiment: sizes, samples, runs and solver settings."""

    node_counts: List[int] = Field(
        default_factory=lambda: list(ExperimentDefaults.NODE_COUNTS), min_length=1, description="Node counts to sample"
    )
    samples_per_size: int = Field(ExperimentDefaults.SAMPLES_PER_SIZE, ge=1, description="Instances per node count")
    runs_per_sample: int = Field(ExperimentDefaults.RUNS_PER_SAMPLE, ge=1, description="CIM restarts per instance")
    weights: List[ScalarWeights] = Field(..., min_length=1, description="Scalarization settings")
    objectives: Optional[List[Objective]] = Field(
        None, description="Objectives spanning the Pareto comparison; union of weighted objectives when omitted"
    )
    radio: RadioConfig = Field(default_factory=RadioConfig)
    cim: CimConfig = Field(default_factory=CimConfig.routing)
    penalties: Optional[PenaltyConfig] = Field(None, description="Fixed penalties; derived per instance when omitted")
    normalization: NormalizationMode = Field(NormalizationMode.MAX)
    area_side: float = Field(GeneratorDefaults.AREA_SIDE_M, gt=0)
    seed: int = Field(0, ge=0, lt=2 ** 64, description="Root seed of every random stream")
    max_paths: Optional[int] = Field(None, ge=1, description="Label limit of the Pareto frontier search")
    scatter_top_k: int = Field(OracleConfig.SCATTER_TOP_K, ge=0, description="CIM paths kept in the scatter export")
    workers: Optional[int] = Field(None, ge=1, description="Worker pool size")

    @field_validator("node_counts")
    @classmethod
    def valid_sizes(cls, node_counts: List[int]) -> List[int]:
        if any(count < 2 for count in node_counts):
            raise ValueError("every node count must be at least 2")
        return sorted(set(node_counts))

    @model_validator(mode="after")
    def non_empty_objectives(self):
        if self.objectives is not None and not self.objectives:
            raise ValueError("objectives must not be empty")
        return self

    def active_objectives(self) -> List[Objective]:
        if self.objectives:
            return canonical_objectives(self.objectives)
        return canonical_objectives({objective for w in self.weights for objective in w.active_objectives()})


class RunRecord(BaseSchema):
    """Outcome of one CIM restart on one instance and weight setting."""

    size: int
    sample: int
    weight_id: int
    run: int
    classification: Classification
    optimal: bool = Field(..., description="Scalar value equals the oracle optimum within tolerance")
    pareto_optimal: Optional[bool] = Field(None, description="None when the Pareto oracle was unavailable")
    energy: float
    edges: Tuple[int, ...] = ()
    loss: float
    ber: float
    hops: float
    scalar_value: float
    optimum_value: float
    frontier_gap: Optional[float] = None
    diverged: bool = False
    wall_time: float = Field(0.0, ge=0, description="Solve seconds shared by the restarts of one solve")

    @model_validator(mode="after")
    def optimal_needs_feasible(self):
        if self.optimal and self.classification == Classification.INFEASIBLE:
            raise ValueError("an infeasible record cannot be optimal")
        return self

    @property
    def is_feasible(self) -> bool:
        return self.classification != Classification.INFEASIBLE

    @property
    def sort_key(self):
        return self.size, self.sample, self.weight_id, self.run


class SummaryRow(BaseSchema):
    """Probabilities for one node count and weight setting, as exact record fractions."""

    size: int
    weight_id: int
    weights: str
    samples: int
    records: int
    feasible: int
    simple_path: int
    optimal: int
    pareto_evaluated: int
    pareto_optimal: int
    p_feasible: float
    p_simple_path: float
    p_optimal: float
    p_pareto_optimal: Optional[float] = None
    best_p_feasible: float
    best_p_optimal: float
    mean_frontier_gap: Optional[float] = None
    oracle_unavailable: int = 0
    diverged: int = 0


class ScatterRow(BaseSchema):
    """One point of the solution-space export."""

    size: int
    sample: int
    weight_id: int
    kind: str = Field(..., description="cim or frontier")
    path_edges: Tuple[int, ...]
    loss: float
    ber: float
    hops: float
    scalar_value: float
    pareto: bool


class TimingRow(BaseSchema):
    """Wall times of one instance and weight setting."""

    size: int
    sample: int
    weight_id: int
    solve_seconds: float
    oracle_seconds: float


class ExperimentResult(BaseSchema):
    """Everything run_experiment produces, sorted for byte-stable output."""

    records: List[RunRecord] = Field(default_factory=list)
    summary: List[SummaryRow] = Field(default_factory=list)
    scatter: List[ScatterRow] = Field(default_factory=list)
    timings: List[TimingRow] = Field(default_factory=list)
