"""Tests for the LAS reader."""

import logging
import struct

import pandas as pd
import pytest

from src.calculators.synthetic import survey_cloud
from src.models.las import LasHeader
from src.models.points import normalize_points
from src.readers.las_reader import LasFormatError, LasReader, read_las, read_las_file
from src.writers.las_writer import write_las


@pytest.fixture
def survey():
    """A 1000-point survey-like dataset."""
    return survey_cloud(1000, seed=3)


@pytest.fixture
def las_bytes(survey):
    """The survey dataset encoded as LAS 1.2."""
    return write_las(survey.header, survey.points)


def patch(data: bytes, offset: int, fmt: str, value: int) -> bytes:
    buffer = bytearray(data)
    struct.pack_into(fmt, buffer, offset, value)
    return bytes(buffer)


class TestReadLas:
    """Tests for reading well-formed files."""

    def test_records_survive_write_and_read(self, survey, las_bytes):
        """Test read_las after write_las returns the same records."""
        dataset = read_las(las_bytes)
        pd.testing.assert_frame_equal(dataset.points, survey.points)

    def test_header_fields(self, survey, las_bytes):
        """Test scale, offset and counts are taken from the file."""
        header = read_las(las_bytes).header
        assert header.point_count == 1000
        assert header.scale == pytest.approx(survey.header.scale)
        assert header.offset == pytest.approx(survey.header.offset)
        assert header.version == "1.2"
        assert header.point_record_length == 20

    def test_point_block_is_stable(self, las_bytes):
        """Test re-encoding a read file gives the same point records."""
        dataset = read_las(las_bytes)
        again = write_las(dataset.header, dataset.points)
        start = dataset.header.offset_to_point_data
        assert again[start:] == las_bytes[start:]

    def test_one_point_file(self):
        """Test a file with a single record."""
        points = normalize_points(
            pd.DataFrame({"x": [100], "y": [200], "z": [300], "intensity": [7]})
        )
        dataset = read_las(write_las(LasHeader(), points))
        assert len(dataset) == 1
        assert dataset.points.iloc[0]["intensity"] == 7

    def test_las_14_file(self, survey):
        """Test a 1.4 header is parsed."""
        header = survey.header.model_copy(update={"version_minor": 4})
        dataset = read_las(write_las(header, survey.points))
        assert dataset.header.version == "1.4"
        assert len(dataset) == 1000

    def test_classification_flag_bits_kept(self):
        """Test the synthetic/key-point/withheld bits survive."""
        points = normalize_points(
            pd.DataFrame({"x": [0], "y": [0], "z": [0], "classification": [0xE2]})
        )
        dataset = read_las(write_las(LasHeader(), points))
        assert dataset.points.iloc[0]["classification"] == 0xE2

    def test_read_file(self, tmp_path, las_bytes):
        """Test reading from disk."""
        path = tmp_path / "cloud.las"
        path.write_bytes(las_bytes)
        assert len(read_las_file(path)) == 1000
        assert len(LasReader().read_file(path)) == 1000

    def test_return_mismatch_warns(self, caplog):
        """Test records with return number above returns are kept with a warning."""
        points = normalize_points(
            pd.DataFrame(
                {
                    "x": [0],
                    "y": [0],
                    "z": [0],
                    "return_number": [3],
                    "number_of_returns": [2],
                }
            )
        )
        with caplog.at_level(logging.WARNING):
            dataset = read_las(write_las(LasHeader(), points))
        assert dataset.points.iloc[0]["return_number"] == 3
        assert "number of returns" in caplog.text


class TestMalformedInput:
    """Tests for LasFormatError cases."""

    def test_bad_signature(self, las_bytes):
        """Test a file not starting with LASF."""
        with pytest.raises(LasFormatError, match="signature"):
            read_las(b"LASX" + las_bytes[4:])

    def test_not_a_las_file(self):
        """Test arbitrary text."""
        with pytest.raises(LasFormatError):
            read_las(b"x,y,z\n1,2,3\n")

    def test_truncated_header(self, las_bytes):
        """Test a header cut short."""
        with pytest.raises(LasFormatError, match="Truncated"):
            read_las(las_bytes[:100])

    def test_unsupported_point_format(self, las_bytes):
        """Test a point format other than 0."""
        with pytest.raises(LasFormatError, match="format 1"):
            read_las(patch(las_bytes, 104, "<B", 1))

    def test_short_record_length(self, las_bytes):
        """Test records shorter than 20 bytes."""
        with pytest.raises(LasFormatError, match="shorter"):
            read_las(patch(las_bytes, 105, "<H", 19))

    def test_truncated_point_data(self, las_bytes):
        """Test a file missing part of its last record."""
        with pytest.raises(LasFormatError, match="Truncated point data"):
            read_las(las_bytes[:-5])

    def test_count_larger_than_data(self, las_bytes):
        """Test a header declaring more points than present."""
        with pytest.raises(LasFormatError):
            read_las(patch(las_bytes, 107, "<I", 1001))

    def test_format_error_is_value_error(self):
        """Test callers can catch ValueError."""
        with pytest.raises(ValueError):
            read_las(b"")
