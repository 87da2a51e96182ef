"""
Centralized Logging Configuration

Provides consistent logging configuration across the entire toolkit.
"""
import logging
import logging.config

from config.constants import LogConfig
from config.settings import settings


def build_logging_config(log_dir=None, level=None) -> dict:
    """
    Build the dictConfig mapping for the toolkit.

    Args:
        log_dir: Directory for the rotating log files (default: settings.log_dir)
        level: Root level name (default: settings.log_level)

    Returns:
        Mapping accepted by logging.config.dictConfig
    """
    log_dir = log_dir or settings.log_dir
    level = level or settings.log_level
    return {
        'version': 1,
        'disable_existing_loggers': False,
        'formatters': {
            'default': {
                'format': '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
                'datefmt': '%Y-%m-%d %H:%M:%S',
            },
            'detailed': {
                'format': '%(asctime)s - %(name)s - %(levelname)s - %(funcName)s:%(lineno)d - %(message)s',
                'datefmt': '%Y-%m-%d %H:%M:%S',
            },
        },
        'handlers': {
            'console': {
                'class': 'logging.StreamHandler',
                'level': 'INFO',
                'formatter': 'default',
                'stream': 'ext://sys.stderr',
            },
            'file': {
                'class': 'logging.handlers.RotatingFileHandler',
                'level': 'INFO',
                'formatter': 'detailed',
                'filename': str(log_dir / 'app.log'),
                'maxBytes': LogConfig.MAX_LOG_SIZE_BYTES,
                'backupCount': LogConfig.LOG_BACKUP_COUNT,
                'encoding': 'utf-8',
            },
            'error_file': {
                'class': 'logging.handlers.RotatingFileHandler',
                'level': 'ERROR',
                'formatter': 'detailed',
                'filename': str(log_dir / 'error.log'),
                'maxBytes': LogConfig.MAX_LOG_SIZE_BYTES,
                'backupCount': LogConfig.LOG_BACKUP_COUNT,
                'encoding': 'utf-8',
            },
        },
        'root': {
            'level': level,
            'handlers': ['console', 'file', 'error_file'],
        },
        'loggers': {
            'services.cim_service': {
                'level': level,
                'handlers': ['file', 'error_file'],
                'propagate': False,  # per-restart chatter stays out of the console
            },
        },
    }


def setup_logging(log_dir=None, level=None):
    """
    Setup centralized logging configuration

    Call this function once at startup in main.py
    """
    log_dir = log_dir or settings.log_dir
    log_dir.mkdir(parents=True, exist_ok=True)
    logging.config.dictConfig(build_logging_config(log_dir, level))
    logger = logging.getLogger(__name__)
    logger.debug("Logging configured")
