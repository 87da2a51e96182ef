"""
Logging Utilities

Context-prefixed loggers and error logging with tracking ids.
"""
import uuid
import logging
import traceback
from typing import Any, Dict, Optional

logger = logging.getLogger(__name__)


def format_context(context: Optional[Dict[str, Any]]) -> str:
    """
    Render a context mapping as a log prefix

    Args:
        context: Mapping such as {"size": 10, "sample": 3}

    Returns:
        "[size=10 sample=3]", or an empty string for no context
    """
    if not context:
        return ""
    return "[" + " ".join(f"{key}={value}" for key, value in context.items()) + "]"


def get_error_id() -> str:
    """
    Generate unique error ID for tracking

    Returns:
        8-character error ID
    """
    return str(uuid.uuid4())[:8]


def log_error_with_id(
    logger_instance: logging.Logger,
    message: str,
    exception: Optional[Exception] = None,
    context: Optional[dict] = None,
    include_trace: bool = False
) -> str:
    """
    Log an error with a unique error ID

    Args:
        logger_instance: Logger to use
        message: Error message
        exception: Optional exception object
        context: Optional context dictionary
        include_trace: Whether to include full stack trace (DEBUG only)

    Returns:
        Error ID for tracking
    """
    error_id = get_error_id()

    if exception:
        exception_type = type(exception).__name__
        logger_instance.error(f"[{error_id}] {message}: {exception_type}: {exception}")
    else:
        logger_instance.error(f"[{error_id}] {message}")

    if context:
        logger_instance.debug(f"[{error_id}] Context: {context}")

    if include_trace or logger_instance.isEnabledFor(logging.DEBUG):
        if exception:
            trace = "".join(traceback.format_exception(type(exception), exception, exception.__traceback__))
            logger_instance.debug(f"[{error_id}] Full trace:\n{trace}")

    return error_id


def log_solver_error(
    logger_instance: logging.Logger,
    operation: str,
    component: str,
    index: Optional[int],
    exception: Exception
) -> str:
    """
    Log a solver failure with standardized format

    Args:
        logger_instance: Logger to use
        operation: Operation being performed (integrate, enumerate, ...)
        component: Component name (cim, oracle, ...)
        index: Restart or sample index (if applicable)
        exception: Exception that occurred

    Returns:
        Error ID for tracking
    """
    if index is not None:
        message = f"Error during {operation} in {component} #{index}"
    else:
        message = f"Error during {operation} in {component}"

    context = {
        "operation": operation,
        "component": component,
        "index": index,
    }

    return log_error_with_id(logger_instance, message, exception=exception, context=context)


class ContextLogger:
    """
    Wrapper around logging.Logger that prefixes every message with bound context
    """

    def __init__(self, logger_instance: logging.Logger, context: Optional[Dict[str, Any]] = None):
        self._logger = logger_instance
        self._context = dict(context or {})
        self._prefix = format_context(self._context)

    @property
    def logger(self) -> logging.Logger:
        """Underlying standard logger"""
        return self._logger

    def bind(self, **context) -> "ContextLogger":
        """Return a new logger with extra context"""
        merged = dict(self._context)
        merged.update(context)
        return ContextLogger(self._logger, merged)

    def _format(self, message: str) -> str:
        return f"{self._prefix} {message}" if self._prefix else message

    def debug(self, message: str, *args, **kwargs):
        """Log debug message"""
        self._logger.debug(self._format(message), *args, **kwargs)

    def info(self, message: str, *args, **kwargs):
        """Log info message"""
        self._logger.info(self._format(message), *args, **kwargs)

    def warning(self, message: str, *args, **kwargs):
        """Log warning message"""
        self._logger.warning(self._format(message), *args, **kwargs)

    def error(self, message: str, *args, **kwargs):
        """Log error message"""
        self._logger.error(self._format(message), *args, **kwargs)

    def critical(self, message: str, *args, **kwargs):
        """Log critical message"""
        self._logger.critical(self._format(message), *args, **kwargs)

    def is_enabled_for(self, level: int) -> bool:
        """Mirror of logging.Logger.isEnabledFor"""
        return self._logger.isEnabledFor(level)


def get_context_logger(name: str, **context) -> ContextLogger:
    """
    Get a context logger instance

    Args:
        name: Logger name (usually __name__)
        **context: Initial bound context

    Returns:
        ContextLogger instance
    """
    return ContextLogger(logging.getLogger(name), context)
