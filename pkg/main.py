"""
Main application module for the routing toolkit CLI.

This module builds the typer application, registers one controller per subcommand
and maps errors to exit codes.
"""
import logging
import sys
from typing import List, Optional

import click
import typer

from config.logging_config import setup_logging
from controllers.experiment_controller import ExperimentController
from controllers.export_controller import ExportController
from controllers.generate_controller import GenerateController
from controllers.oracle_controller import OracleController
from controllers.solve_controller import SolveController

logger = logging.getLogger(__name__)

CONTROLLERS = (GenerateController, SolveController, ExperimentController, OracleController, ExportController)


def create_cli_app() -> typer.Typer:
    """
    Create and configure the CLI application.

    Returns:
        typer.Typer: Application with every subcommand registered
    """
    app = typer.Typer(
        name="routing",
        help="Multi-objective wireless routing on a simulated coherent Ising machine.",
        add_completion=False,
        no_args_is_help=True,
    )
    for controller in CONTROLLERS:
        controller().register(app)
    return app


def run_cli(argv: Optional[List[str]] = None) -> int:
    """
    Run the CLI and return its exit code.

    0 on success, 1 on toolkit or validation errors, 2 on usage errors.
    """
    command = typer.main.get_command(create_cli_app())
    try:
        code = command.main(args=argv, prog_name="main.py", standalone_mode=False)
    except click.UsageError as exc:
        exc.show()
        return 2
    except click.ClickException as exc:
        exc.show()
        return 1
    except click.Abort:
        typer.echo("Aborted!", err=True)
        return 1
    # typer.Exit comes back as a return value outside standalone mode
    return code if isinstance(code, int) else 0


if __name__ == "__main__":
    setup_logging()
    logger.info("🚀 Starting routing toolkit")
    sys.exit(run_cli())
