"""Centralized module for importing and resolving all Pydantic schemas."""

# Import all schemas to ensure they are in the module's scope
from .cim_schema import CimConfig, CimFailure, CimSample, CimSolution, TraceRow
from .experiment_schema import ExperimentConfig, ExperimentResult, RunRecord, ScatterRow, SummaryRow, TimingRow
from .network_schema import EdgeRecord, GeneratorConfig, NetworkInstance, NodeRecord
from .objective_schema import RadioConfig, ScalarWeights
from .penalty_schema import PenaltyConfig
from .route_schema import ObjectiveValues, ParetoSet, RouteSolution

# List of all schema classes to iterate over
ALL_SCHEMAS = [
    CimConfig,
    CimFailure,
    CimSample,
    CimSolution,
    TraceRow,
    ExperimentConfig,
    ExperimentResult,
    RunRecord,
    ScatterRow,
    SummaryRow,
    TimingRow,
    EdgeRecord,
    GeneratorConfig,
    NetworkInstance,
    NodeRecord,
    RadioConfig,
    ScalarWeights,
    PenaltyConfig,
    ObjectiveValues,
    ParetoSet,
    RouteSolution,
]

# Resolve all forward references
for schema in ALL_SCHEMAS:
    schema.model_rebuild()

__all__ = [schema.__name__ for schema in ALL_SCHEMAS]
