"""Batch command-line front end."""

from gorenstein.cli.main import main, run

__all__ = ["main", "run"]
