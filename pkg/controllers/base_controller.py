"""
Module for the abstract base controller class.

Each controller owns one CLI subcommand and registers it on the typer application,
the way routers are included on a web application.
"""
import functools
import logging
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Callable, TypeVar

import typer
from pydantic import ValidationError

from repositories.artifact_repository import ArtifactRepository
from utils.exceptions import RoutingToolkitError

logger = logging.getLogger(__name__)

T = TypeVar("T")


def parse_option(parser: Callable[[str], T], text: str, name: str) -> T:
    """Run a flag parser, turning its failures into click usage errors."""
    try:
        return parser(text)
    except (ValueError, ValidationError) as exc:
        message = exc.errors()[0]["msg"] if isinstance(exc, ValidationError) else str(exc)
        raise typer.BadParameter(message, param_hint=name) from exc


def report_errors(command: Callable) -> Callable:
    """Translate toolkit and validation errors into a one-line message and exit code 1."""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except ValidationError as exc:
            first = exc.errors()[0]
            field = ".".join(map(str, first["loc"]))
            message = f"validation error: '{field}' {first['msg']}" if field else f"validation error: {first['msg']}"
            logger.error(message)
            typer.echo(message, err=True)
            raise typer.Exit(code=1)
        except RoutingToolkitError as exc:
            logger.error(f"{type(exc).__name__}: {exc}")
            typer.echo(f"error: {exc}", err=True)
            raise typer.Exit(code=1)

    return wrapper


class BaseController(ABC):
    """
    Abstract base controller class for CLI subcommands.
    """

    name: str = ""
    help: str = ""

    @abstractmethod
    def register(self, app: typer.Typer) -> None:
        """Attach the subcommand to the application."""

    @staticmethod
    def artifacts(out: Path) -> ArtifactRepository:
        repository = ArtifactRepository(out)
        repository.ensure_root()
        return repository
