"""export: write the routing QUBO or its Ising form."""
from pathlib import Path
from typing import Optional

import typer

from controllers.base_controller import BaseController, parse_option, report_errors
from models.enums import ExportFormat
from repositories.instance_repository import InstanceRepository
from schemas.objective_schema import ScalarWeights
from schemas.penalty_schema import PenaltyConfig
from services.harness_service import prepare_problem


class ExportController(BaseController):
    name = "export"
    help = "Export the penalized QUBO or Ising model of an instance."

    def register(self, app: typer.Typer) -> None:
        @app.command(name=self.name, help=self.help)
        @report_errors
        def export(
            instance: Path = typer.Option(..., "--instance", exists=True, dir_okay=False, help="Instance file"),
            weights: str = typer.Option(..., "--weights", help="Scalarization weights a,b,c"),
            export_format: ExportFormat = typer.Option(ExportFormat.QUBO, "--format", help="qubo or ising"),
            penalties: Optional[str] = typer.Option(None, "--penalties", help="Penalties p1,p2,p3 (derived when omitted)"),
            out: Path = typer.Option(..., "--out", help="Output directory"),
        ):
            network = InstanceRepository().load(instance)
            problem = prepare_problem(
                network,
                parse_option(ScalarWeights.parse, weights, "--weights"),
                penalties=parse_option(PenaltyConfig.parse, penalties, "--penalties") if penalties else None,
            )
            artifacts = self.artifacts(out)
            if export_format == ExportFormat.ISING:
                path = artifacts.save_ising(problem.ising)
            else:
                path = artifacts.save_qubo(problem.qubo)
            typer.echo(f"{path}: {problem.dimension} variables")
