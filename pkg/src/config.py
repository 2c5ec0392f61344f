"""
Configuration module for the bicomplex k-Fibonacci toolkit.
Handles environment variables for logging, audit parallelism and memoization.
None of these settings changes a computed value or a report.
"""

import logging
import os

from dotenv import load_dotenv

# Load environment variables
load_dotenv()

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def _int_env(name: str, default: int, minimum: int = 1) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == '':
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.warning(f"Ignoring malformed {name}={raw!r}, using {default}")
        return default
    if value < minimum:
        logger.warning(f"Ignoring {name}={value} (minimum {minimum}), using {default}")
        return default
    return value


def get_logging_config():
    """Get logging configuration"""
    level_name = os.getenv('LOG_LEVEL', 'WARNING').upper()
    level = getattr(logging, level_name, None)
    if not isinstance(level, int):
        level = logging.WARNING
    return {
        'level': level,
        'format': LOG_FORMAT,
    }


def get_audit_config():
    """Get identity audit configuration"""
    return {
        'workers': _int_env('AUDIT_WORKERS', 1),
        'default_format': 'table',
    }


def get_cache_config():
    """Get sequence cache configuration"""
    return {
        'enable_cache': os.getenv('SEQUENCE_CACHE', 'true').lower() == 'true',
    }
