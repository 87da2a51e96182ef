"""oracle: exact Pareto frontier (and scalar optimum) of one instance."""
from pathlib import Path
from typing import Optional

import typer

from controllers.base_controller import BaseController, parse_option, report_errors
from repositories.instance_repository import InstanceRepository
from schemas.objective_schema import RadioConfig, ScalarWeights, parse_objectives
from services.objective_service import compute_edge_objectives, scalarize
from services.oracle_service import pareto_frontier, scalar_optimum

FRONTIER_COLUMNS = ["path_edges", "loss", "ber", "hops", "scalar_value"]


class OracleController(BaseController):
    name = "oracle"
    help = "Compute the Pareto frontier of an instance."

    def register(self, app: typer.Typer) -> None:
        @app.command(name=self.name, help=self.help)
        @report_errors
        def oracle(
            instance: Path = typer.Option(..., "--instance", exists=True, dir_okay=False, help="Instance file"),
            objectives: str = typer.Option("loss,ber", "--objectives", help="Active objectives, e.g. loss,ber"),
            weights: Optional[str] = typer.Option(None, "--weights", help="Weights a,b,c for scalar values and the optimum"),
            max_paths: Optional[int] = typer.Option(None, "--max-paths", min=1, help="Label limit of the frontier search"),
            out: Path = typer.Option(..., "--out", help="Output directory"),
        ):
            network = InstanceRepository().load(instance)
            active = parse_option(parse_objectives, objectives, "--objectives")
            edge_objectives = compute_edge_objectives(network, RadioConfig())
            costs = None
            if weights:
                costs = scalarize(edge_objectives, parse_option(ScalarWeights.parse, weights, "--weights"))

            frontier = pareto_frontier(network, edge_objectives, active, max_paths, costs)
            members = sorted(frontier.members, key=lambda member: (member.objective_values.select(active), member.path_edges))
            rows = [
                [member.path_edges, member.objective_values.loss, member.objective_values.ber,
                 member.objective_values.hops, member.scalar_value]
                for member in members
            ]
            self.artifacts(out).write_table("frontier.csv", FRONTIER_COLUMNS, rows)
            typer.echo(f"{len(rows)} frontier paths over {','.join(o.value for o in active)}")
            if costs is not None:
                optimum = scalar_optimum(network, costs, edge_objectives)
                typer.echo(f"scalar optimum {optimum.scalar_value!r} via edges {' '.join(map(str, optimum.path_edges))}")
