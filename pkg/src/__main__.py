#!/usr/bin/env python3
"""
Entry point: python -m src <gen|verify|audit|list> [options]
"""

import logging
import sys

from src.cli import run
from src.config import get_logging_config

logging_config = get_logging_config()
logging.basicConfig(
    format=logging_config['format'],
    level=logging_config['level'],
    stream=sys.stderr,
)

if __name__ == "__main__":
    sys.exit(run(sys.argv[1:]))
