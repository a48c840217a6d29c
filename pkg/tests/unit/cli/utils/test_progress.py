"""Unit tests for CLI progress indicators."""

import pytest

from src.cli.utils.progress import ProgressTracker


class TestProgressTracker:
    """Test suite for ProgressTracker."""

    def test_progress_tracker_initialization(self):
        """Test that ProgressTracker initializes with stages."""
        tracker = ProgressTracker(["Read", "Build", "Write"])
        assert tracker.total_stages == 3
        assert tracker.current_stage == 0
        assert tracker.durations == {}

    def test_progress_tracker_advance(self, capsys):
        """Test advancing to next stage echoes the message."""
        tracker = ProgressTracker(["Read", "Build"])
        tracker.advance("Read complete")
        assert tracker.current_stage == 1
        assert "Read complete" in capsys.readouterr().out

    def test_get_current_message(self):
        """Test the stage prefix and the completed message."""
        tracker = ProgressTracker(["Read", "Build"])
        assert tracker.get_current_message() == "[1/2] Read"
        tracker.advance()
        tracker.advance()
        assert tracker.get_current_message() == "[2/2] Complete"
        assert tracker.current_stage == tracker.total_stages

    def test_stage_records_duration(self, capsys):
        """Test stage() times each stage and prints its header."""
        tracker = ProgressTracker(["Read", "Build"])
        with tracker.stage():
            pass
        with tracker.stage():
            pass

        out = capsys.readouterr().out
        assert "[1/2] Read" in out
        assert "[2/2] Build" in out
        assert set(tracker.durations) == {"Read", "Build"}
        assert tracker.total_seconds == pytest.approx(sum(tracker.durations.values()))
        assert tracker.current_stage == tracker.total_stages

    def test_quiet(self, capsys):
        """Test quiet trackers print nothing."""
        tracker = ProgressTracker(["Read"], quiet=True)
        with tracker.stage():
            pass
        tracker.advance("ignored")
        assert capsys.readouterr().out == ""

    def test_failed_stage_does_not_advance(self):
        """Test an exception leaves the tracker on the failing stage."""
        tracker = ProgressTracker(["Read", "Build"], quiet=True)
        with pytest.raises(RuntimeError):
            with tracker.stage():
                raise RuntimeError("boom")
        assert tracker.current_stage == 0
        assert tracker.durations == {}
