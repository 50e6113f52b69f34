"""
Utilities Module
Helper functions for logging, timing, vertex-list parsing and JSON files
"""

import json
import logging
import sys
from datetime import datetime
from pathlib import Path

from .config import LOG_LEVEL, LOG_FORMAT, LOG_FILE
from .errors import HypergraphFormatError


def setup_logging(log_level=LOG_LEVEL, log_file=LOG_FILE):
    """
    Setup logging configuration for the application

    Records go to stderr so that stdout only carries command results.

    Args:
        log_level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_file: Optional path to a log file

    Returns:
        Logger: module logger
    """
    numeric_level = getattr(logging, str(log_level).upper(), logging.WARNING)

    handlers = [logging.StreamHandler(sys.stderr)]
    if log_file:
        log_path = Path(log_file)
        log_path.parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(log_path, encoding='utf-8'))

    logging.basicConfig(
        level=numeric_level,
        format=LOG_FORMAT,
        handlers=handlers,
        force=True
    )

    logger = logging.getLogger(__name__)
    logger.debug(f"Logging initialized. Level: {log_level}, File: {log_file}")

    return logger


def parse_vertex_list(text):
    """
    Parse a comma-separated list of 1-based vertices, e.g. "1,2,7"

    Args:
        text: Comma-separated integers; the empty string means the empty set

    Returns:
        list: Sorted distinct vertex labels
    """
    text = text.strip()
    if not text:
        return []

    vertices = []
    for token in text.split(','):
        token = token.strip()
        try:
            vertices.append(int(token))
        except ValueError:
            raise HypergraphFormatError(f"not a vertex label: {token!r}") from None

    return sorted(set(vertices))


def format_vertices(vertices):
    """Space-separated vertex labels ("" for the empty set)."""
    return " ".join(str(v) for v in vertices)


def load_json(filepath):
    """
    Load dictionary from JSON file

    Args:
        filepath: Path to JSON file

    Returns:
        Loaded dictionary or None if file doesn't exist
    """
    filepath = Path(filepath)

    if not filepath.exists():
        return None

    with open(filepath, 'r', encoding='utf-8') as f:
        data = json.load(f)

    logger = logging.getLogger(__name__)
    logger.debug(f"JSON loaded from: {filepath}")

    return data


class Timer:
    """Context manager for timing code blocks"""

    def __init__(self, name="Operation"):
        self.name = name
        self.logger = logging.getLogger(__name__)
        self.duration = None

    def __enter__(self):
        self.start_time = datetime.now()
        self.logger.info(f"Starting: {self.name}")
        return self

    def __exit__(self, *args):
        self.end_time = datetime.now()
        self.duration = (self.end_time - self.start_time).total_seconds()
        self.logger.info(f"Completed: {self.name} in {self.duration:.2f} seconds")


def check_dependencies():
    """
    Check if all required dependencies are installed

    Returns:
        dict: Dictionary of {package: version or error}
    """
    packages = ['numpy', 'pandas', 'networkx', 'pytest']

    results = {}
    for package in packages:
        try:
            module = __import__(package)
            version = getattr(module, '__version__', 'unknown version')
            results[package] = f"ok {version}"
        except ImportError:
            results[package] = "not installed"

    return results
