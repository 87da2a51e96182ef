"""Experiment service: run the sampling protocol and write its tables."""
from repositories.artifact_repository import RECORD_COLUMNS, ArtifactRepository
from schemas.experiment_schema import ExperimentConfig, ExperimentResult
from services.base_service import BaseServiceImpl
from services.harness_service import run_experiment
from utils.logging_utils import get_context_logger

logger = get_context_logger(__name__)

SCATTER_COLUMNS = ["size", "sample", "weight_id", "kind", "path_edges", "loss", "ber", "hops", "scalar_value", "pareto"]


class ExperimentService(BaseServiceImpl):
    """Service behind the experiment command; writes into the repository's root."""

    def __init__(self, repository: ArtifactRepository):
        super().__init__(repository)

    def run(self, config: ExperimentConfig, timings: bool = False) -> ExperimentResult:
        """
        Run the experiment and save records.csv, summary.csv, config.json and, when
        present, scatter.csv. timings.csv is written only on request.
        """
        result = run_experiment(config)
        self.repository.ensure_root()
        self.repository.save(result.records, "records.csv", RECORD_COLUMNS)
        self.repository.save(result.summary, "summary.csv")
        self.repository.save_config(config.model_copy(update={"workers": None}), "config.json")
        if result.scatter:
            self.repository.save(result.scatter, "scatter.csv", SCATTER_COLUMNS)
        if timings:
            self.repository.save(result.timings, "timings.csv")
        logger.info(f"{len(result.records)} records written to {self.repository.root}")
        return result
