"""solve: run the CIM on one instance and decode every restart."""
from pathlib import Path
from typing import Optional

import typer

from config.constants import CimDefaults, RoutingCimDefaults
from controllers.base_controller import BaseController, parse_option, report_errors
from models.enums import PumpSchedule
from schemas.cim_schema import CimConfig
from schemas.objective_schema import ScalarWeights
from schemas.penalty_schema import PenaltyConfig
from services.solve_service import SOLUTION_COLUMNS, TRACE_COLUMNS, SolveService


class SolveController(BaseController):
    name = "solve"
    help = "Solve one instance with the coherent Ising machine."

    def register(self, app: typer.Typer) -> None:
        @app.command(name=self.name, help=self.help)
        @report_errors
        def solve(
            instance: Path = typer.Option(..., "--instance", exists=True, dir_okay=False, help="Instance file"),
            weights: str = typer.Option(..., "--weights", help="Scalarization weights a,b,c"),
            restarts: int = typer.Option(CimDefaults.RESTARTS, "--restarts", min=1, help="Independent restarts"),
            iterations: int = typer.Option(RoutingCimDefaults.ITERATIONS, "--iterations", min=1, help="Euler steps"),
            dt: Optional[float] = typer.Option(None, "--dt", help="Euler step size (largest stable step when omitted)"),
            schedule: PumpSchedule = typer.Option(PumpSchedule.TANH_RAMP, "--schedule", help="Pump schedule"),
            noise: float = typer.Option(RoutingCimDefaults.NOISE_AMPLITUDE, "--noise", min=0.0, help="Noise amplitude"),
            penalties: Optional[str] = typer.Option(None, "--penalties", help="Penalties p1,p2,p3 (derived when omitted)"),
            trace: Optional[int] = typer.Option(None, "--trace", min=1, help="Write a trace row every K steps"),
            baseline: bool = typer.Option(False, "--baseline", help="Also time the classical shortest-path baselines"),
            workers: Optional[int] = typer.Option(None, "--workers", min=1, help="Worker threads"),
            seed: int = typer.Option(..., "--seed", min=0, help="Random seed"),
            out: Path = typer.Option(..., "--out", help="Output directory"),
        ):
            service = SolveService()
            network = service.load(instance)
            scalar_weights = parse_option(ScalarWeights.parse, weights, "--weights")
            penalty_config = parse_option(PenaltyConfig.parse, penalties, "--penalties") if penalties else None
            cim = CimConfig.routing(iterations=iterations, time_step=dt, pump_schedule=schedule,
                                    noise_amplitude=noise, seed=seed, trace_every=trace)
            run = service.solve(network, scalar_weights, cim, restarts, penalty_config, workers)
            solution, optimum = run.solution, run.optimum

            artifacts = self.artifacts(out)
            artifacts.write_table("solutions.csv", SOLUTION_COLUMNS, service.solution_rows(run))
            if trace:
                artifacts.save(service.trace_rows(run), "trace.csv", TRACE_COLUMNS)
            artifacts.save_config(cim, "config.json", weights=scalar_weights.label(), restarts=restarts,
                                  penalties=run.problem.penalties.model_dump(),
                                  coupling_scale=solution.coupling_scale, time_step_used=solution.time_step,
                                  optimum_value=optimum.scalar_value)

            best = solution.best
            summary = f"best energy {best.energy!r} " if best else "all restarts diverged "
            feasible = sum(route.is_feasible_flow for route in run.routes.values())
            typer.echo(f"{summary}({feasible}/{restarts} flow-feasible, optimum {optimum.scalar_value!r})")

            if baseline:
                label_seconds, distance, bellman_seconds = service.baseline(run)
                typer.echo(f"baseline: label-setting {optimum.scalar_value!r} in {label_seconds:.6f}s, "
                           f"bellman-ford {distance!r} in {bellman_seconds:.6f}s")
