"""generate: sample a random geometric instance."""
from pathlib import Path
from typing import Optional

import typer

from config.constants import GeneratorDefaults, NoiseDefaults
from controllers.base_controller import BaseController, report_errors
from repositories.instance_repository import InstanceRepository
from schemas.network_schema import GeneratorConfig
from services.network_service import generate_instance


class GenerateController(BaseController):
    name = "generate"
    help = "Generate a random geometric network instance."

    def register(self, app: typer.Typer) -> None:
        @app.command(name=self.name, help=self.help)
        @report_errors
        def generate(
            nodes: int = typer.Option(..., "--nodes", min=2, help="Number of nodes"),
            radius: Optional[float] = typer.Option(None, "--radius", help="Radio range in meters (calibrated when omitted)"),
            area: float = typer.Option(GeneratorDefaults.AREA_SIDE_M, "--area", help="Side of the square area in meters"),
            noise_mean: float = typer.Option(NoiseDefaults.MEAN_DBM, "--noise-mean", help="Mean node noise in dBm"),
            noise_std: float = typer.Option(NoiseDefaults.STDDEV_DBM, "--noise-std", help="Node noise deviation in dBm"),
            source: Optional[int] = typer.Option(None, "--source", help="Source node override"),
            dest: Optional[int] = typer.Option(None, "--dest", help="Destination node override"),
            seed: int = typer.Option(..., "--seed", min=0, help="Random seed"),
            out: Path = typer.Option(..., "--out", help="Output directory"),
        ):
            config = GeneratorConfig(
                node_count=nodes, connection_radius=radius, area_side=area, noise_mean_dbm=noise_mean,
                noise_stddev_dbm=noise_std, seed=seed, source=source, destination=dest,
            )
            instance = generate_instance(config)
            out.mkdir(parents=True, exist_ok=True)
            path = InstanceRepository(out).save(instance, "instance.txt")
            self.artifacts(out).save_config(config, "generator.json")
            typer.echo(f"{path}: {instance.node_count} nodes, {instance.edge_count} edges, "
                       f"S={instance.source} D={instance.destination}")
