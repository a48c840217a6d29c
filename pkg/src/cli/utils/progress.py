"""Progress tracking utilities for CLI."""

import time
from contextlib import contextmanager
from typing import Dict, Iterator, List, Optional

import click


class ProgressTracker:
    """Track progress through the stages of a command.

    Attributes:
        stages: List of stage names
        total_stages: Total number of stages
        current_stage: Current stage index (0-based)
        durations: Seconds spent per finished stage
    """

    def __init__(self, stages: List[str], quiet: bool = False):
        """Initialize progress tracker with stages.

        Args:
            stages: List of stage names
            quiet: Suppress console output
        """
        self.stages = stages
        self.total_stages = len(stages)
        self.current_stage = 0
        self.quiet = quiet
        self.durations: Dict[str, float] = {}

    def advance(self, message: Optional[str] = None):
        """Advance to the next stage, optionally echoing a message."""
        if message and not self.quiet:
            click.echo(f"  {message}")
        self.current_stage += 1

    def get_current_message(self) -> str:
        """Current stage with a ``[i/n]`` prefix."""
        if self.current_stage < self.total_stages:
            stage_name = self.stages[self.current_stage]
            return f"[{self.current_stage + 1}/{self.total_stages}] {stage_name}"
        return f"[{self.total_stages}/{self.total_stages}] Complete"

    @contextmanager
    def stage(self) -> Iterator[None]:
        """Run the current stage, timing it and advancing afterwards.

        Example:
            >>> tracker = ProgressTracker(["Read", "Build"], quiet=True)
            >>> with tracker.stage():
            ...     pass
            >>> tracker.get_current_message()
            '[2/2] Build'
        """
        name = self.stages[self.current_stage]
        if not self.quiet:
            click.echo(self.get_current_message())
        start = time.perf_counter()
        yield
        self.durations[name] = time.perf_counter() - start
        self.advance()

    @property
    def total_seconds(self) -> float:
        return sum(self.durations.values())
