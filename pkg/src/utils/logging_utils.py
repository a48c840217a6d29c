"""Structured logging utilities with context support."""

import functools
import logging
import threading
import time
import uuid
from contextlib import contextmanager
from typing import Any, Callable, Dict, Iterator, Optional

# Thread-local storage for log context
_thread_local = threading.local()


def generate_run_id() -> str:
    """
    Generate a short id tying together the log records of one command run.

    Returns:
        12-character hex string
    """
    return uuid.uuid4().hex[:12]


class LogContext:
    """
    Context manager for adding structured fields to log records.

    Fields are stored in thread-local storage and attached to every record
    passing through a handler configured by ``configure_logging``.

    Example:
        with LogContext(operation="query", index_path="survey.k3l"):
            logger.info("Running region query")
            # Log will include operation and index_path fields
    """

    def __init__(self, **kwargs):
        self.fields = kwargs
        self.previous_context: Optional[Dict[str, Any]] = None

    def __enter__(self):
        if not hasattr(_thread_local, "context"):
            _thread_local.context = {}

        self.previous_context = _thread_local.context.copy()
        _thread_local.context.update(self.fields)
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        if self.previous_context is not None:
            _thread_local.context = self.previous_context
        else:
            _thread_local.context = {}


class _ContextFilter(logging.Filter):
    """Logging filter that adds context fields to log records."""

    def filter(self, record: logging.LogRecord) -> bool:
        if hasattr(_thread_local, "context"):
            for key, value in _thread_local.context.items():
                setattr(record, key, value)
        return True


def describe_argument(value: Any) -> str:
    """Short description of an argument; arrays and frames by shape only."""
    shape = getattr(value, "shape", None)
    if shape is not None:
        return f"{type(value).__name__}{tuple(shape)}"
    text = repr(value)
    return text if len(text) <= 80 else text[:77] + "..."


@contextmanager
def log_duration(
    logger: logging.Logger, label: str, level: int = logging.INFO
) -> Iterator[Dict[str, float]]:
    """
    Log how long a block took.

    The yielded dict receives ``seconds`` once the block finishes, so callers
    can report the same figure on the console.

    Example:
        with log_duration(logger, "Index build") as timing:
            index = build_index(points)
        print(timing["seconds"])
    """
    timing: Dict[str, float] = {}
    start = time.perf_counter()
    try:
        yield timing
    finally:
        timing["seconds"] = time.perf_counter() - start
        logger.log(level, f"{label} took {timing['seconds']:.3f}s")


def log_function_call(
    func: Optional[Callable] = None, *, include_args: bool = False, level: str = "DEBUG"
) -> Callable:
    """
    Decorator to log function entry and exit.

    Entry and exit are logged at ``level``, the exit message with the elapsed
    time. Exceptions are logged at ERROR with the traceback and re-raised.

    Args:
        func: Function to decorate (when used without arguments)
        include_args: Whether to include function arguments in logs
        level: Log level to use (DEBUG, INFO, WARNING, ERROR)

    Returns:
        Decorated function

    Example:
        @log_function_call
        def read_index(stream):
            ...

        @log_function_call(include_args=True, level="INFO")
        def build_index(points, config=None):
            ...
    """

    def decorator(f: Callable) -> Callable:
        @functools.wraps(f)
        def wrapper(*args, **kwargs):
            logger = logging.getLogger(f.__module__)
            log_level = getattr(logging, level.upper())

            if include_args:
                args_repr = [describe_argument(a) for a in args]
                kwargs_repr = [f"{k}={describe_argument(v)}" for k, v in kwargs.items()]
                signature = ", ".join(args_repr + kwargs_repr)
                logger.log(log_level, f"Entering {f.__name__} with args: {signature}")
            else:
                logger.log(log_level, f"Entering {f.__name__}")

            start = time.perf_counter()
            try:
                result = f(*args, **kwargs)
            except Exception as e:
                logger.error(
                    f"Exception in {f.__name__}: {type(e).__name__}: {e}",
                    exc_info=True,
                )
                raise

            elapsed = time.perf_counter() - start
            logger.log(log_level, f"Exiting {f.__name__} after {elapsed:.3f}s")
            return result

        return wrapper

    if func is None:
        return decorator
    return decorator(func)
