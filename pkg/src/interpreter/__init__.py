"""
Interpreter module - exports argument interpreters.
"""

from src.interpreter.config_interpreter import ArgumentInterpreter

__all__ = ["ArgumentInterpreter"]
