# -*- coding: utf-8 -*-#
"""Error types raised by the model, the optimizers and the pipeline."""
from __future__ import annotations

from typing import Optional


class InvalidDimensionError(ValueError):
    """Raised when a PRI vector has a dimension outside of the supported range."""

    def __init__(self, dimension: int, lower: int, upper: int):
        super().__init__(f"dimension {dimension} outside [{lower}, {upper}]")
        self.dimension = dimension
        self.lower = lower
        self.upper = upper

    def __str__(self):
        return f"InvalidDimensionError: D={self.dimension} not in [{self.lower}, {self.upper}]"


class InvalidArgumentError(ValueError):
    """Raised when an argument violates the precondition of an operation."""


class UnsupportedDimensionError(ValueError):
    """Raised when an exact computation is requested for too many objectives."""

    def __init__(self, objectives: int, maximum: int):
        super().__init__(f"{objectives} objectives, at most {maximum} supported")
        self.objectives = objectives
        self.maximum = maximum

    def __str__(self):
        return f"UnsupportedDimensionError: M={self.objectives} > {self.maximum}"


class ConfigurationError(ValueError):
    """Raised at startup when a configuration cannot be used."""


class IncompatibleModelError(RuntimeError):
    """We raise this when point sets produced by different model configurations are combined."""

    def __init__(self, expected: str, found: str, source: Optional[str] = None):
        super().__init__("incompatible model configuration")
        self.expected = expected
        self.found = found
        self.source = source

    def __str__(self):
        return (
            f"IncompatibleModelError: expected model hash {self.expected[:12]}, "
            f"found {self.found[:12]}" + (f" in {self.source}" if self.source else "")
        )


class MalformedRecordError(ValueError):
    """Raised when a file row cannot be parsed."""

    def __init__(self, message: str, line: Optional[int] = None, path: Optional[str] = None):
        super().__init__(message)
        self.message = message
        self.line = line
        self.path = path

    def __str__(self):
        where = f"{self.path or '<input>'}"
        if self.line is not None:
            where += f":{self.line}"
        return f"MalformedRecordError at {where}: {self.message}"
