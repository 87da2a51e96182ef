"""experiment: the full sampling protocol with CSV outputs."""
from pathlib import Path
from typing import List, Optional

import typer

from config.constants import ExperimentDefaults, RoutingCimDefaults
from controllers.base_controller import BaseController, parse_option, report_errors
from models.enums import PumpSchedule
from schemas.cim_schema import CimConfig
from schemas.experiment_schema import ExperimentConfig
from schemas.objective_schema import ScalarWeights, parse_objectives
from schemas.penalty_schema import PenaltyConfig
from services.experiment_service import ExperimentService
from services.harness_service import weight_sweep


def parse_node_counts(text: str) -> List[int]:
    counts = [int(part) for part in text.split(",") if part.strip()]
    if not counts:
        raise ValueError("at least one node count is required")
    return counts


class ExperimentController(BaseController):
    name = "experiment"
    help = "Run the sampling protocol and write records, summary and scatter data."

    def register(self, app: typer.Typer) -> None:
        @app.command(name=self.name, help=self.help)
        @report_errors
        def experiment(
            nodes: str = typer.Option(",".join(map(str, ExperimentDefaults.NODE_COUNTS)), "--nodes",
                                      help="Node counts, comma separated"),
            samples: int = typer.Option(ExperimentDefaults.SAMPLES_PER_SIZE, "--samples", min=1, help="Instances per size"),
            runs: int = typer.Option(ExperimentDefaults.RUNS_PER_SAMPLE, "--runs", min=1, help="Restarts per instance"),
            weights: Optional[str] = typer.Option(None, "--weights", help="Scalarization weights a,b,c"),
            sweep: bool = typer.Option(False, "--sweep", help="Sweep the weights over the active objectives"),
            objectives: Optional[str] = typer.Option(None, "--objectives", help="Pareto objectives, e.g. loss,ber"),
            iterations: int = typer.Option(RoutingCimDefaults.ITERATIONS, "--iterations", min=1, help="Euler steps"),
            schedule: PumpSchedule = typer.Option(PumpSchedule.TANH_RAMP, "--schedule", help="Pump schedule"),
            penalties: Optional[str] = typer.Option(None, "--penalties", help="Penalties p1,p2,p3 (derived when omitted)"),
            max_paths: Optional[int] = typer.Option(None, "--max-paths", min=1, help="Label limit of the Pareto frontier search"),
            timings: bool = typer.Option(False, "--timings", help="Also write timings.csv"),
            workers: Optional[int] = typer.Option(None, "--workers", min=1, help="Worker threads"),
            seed: int = typer.Option(..., "--seed", min=0, help="Random seed"),
            out: Path = typer.Option(..., "--out", help="Output directory"),
        ):
            if (weights is None) == (not sweep):
                raise typer.BadParameter("give exactly one of --weights and --sweep", param_hint="--weights")
            active = parse_option(parse_objectives, objectives, "--objectives") if objectives else None
            if sweep:
                settings_list = weight_sweep(active or parse_objectives("loss,ber"))
            else:
                settings_list = [parse_option(ScalarWeights.parse, weights, "--weights")]

            config = ExperimentConfig(
                node_counts=parse_option(parse_node_counts, nodes, "--nodes"),
                samples_per_size=samples,
                runs_per_sample=runs,
                weights=settings_list,
                objectives=active,
                cim=CimConfig.routing(iterations=iterations, pump_schedule=schedule),
                penalties=parse_option(PenaltyConfig.parse, penalties, "--penalties") if penalties else None,
                seed=seed,
                max_paths=max_paths,
                workers=workers,
            )
            result = ExperimentService(self.artifacts(out)).run(config, timings)
            typer.echo(f"{len(result.records)} records, {len(result.summary)} summary rows written to {out}")
