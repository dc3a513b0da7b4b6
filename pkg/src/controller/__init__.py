"""
Controller module - exports the command runner.
"""

from src.controller.command_runner import CommandRunner

__all__ = ["CommandRunner"]
