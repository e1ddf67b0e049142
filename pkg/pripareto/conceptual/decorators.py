# -*- coding: utf-8 -*-#
"""Decorator functions for instrumenting coarse-grained operations."""
import logging
from functools import wraps
from time import perf_counter

from opentelemetry import trace


def instrument_class_function(
    name: str,
    level: int = logging.INFO,
):
    """
    Decorator to instrument a function or method with logging and tracing.
    Not meant for the per-evaluation hot path.
    :param name: name of the tracer and span
    :param level: logging level to use for start/finish messages
    :return: function
    """
    t = trace.get_tracer_provider().get_tracer(name)

    def inner(func):
        @wraps(func)
        def instrumented_logging(*args, **kwargs):
            logger = logging.getLogger(func.__module__)
            with t.start_as_current_span(name) as span:
                if not logger.isEnabledFor(level):
                    return func(*args, **kwargs)
                span.add_event(f"{func.__name__} span")
                logger.log(level, f"Started {func.__name__}")
                started = perf_counter()
                result = func(*args, **kwargs)
                logger.log(
                    level,
                    f"Finished {func.__name__} in {perf_counter() - started:.3f}s",
                )
                return result

        return instrumented_logging

    return inner
