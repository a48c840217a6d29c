"""Tests for the attribute catalogue."""

import pytest

from src.models.attributes import (
    ATTRIBUTE_NAMES,
    ATTRIBUTES,
    AttributeKind,
    UnknownAttributeError,
    get_attribute,
)


class TestCatalogue:
    """Tests for the declared attributes."""

    def test_catalogue_order_matches_csv_columns(self):
        """Test attribute ids follow the output column order."""
        assert ATTRIBUTE_NAMES == (
            "intensity",
            "return_number",
            "number_of_returns",
            "scan_direction_flag",
            "edge_of_flight_line",
            "classification",
            "scan_angle_rank",
            "user_data",
            "point_source_id",
        )
        assert [spec.attribute_id for spec in ATTRIBUTES] == list(range(9))

    def test_one_bit_attributes_use_bitmaps(self):
        """Test flag attributes are stored as bitmaps."""
        bitmaps = {s.name for s in ATTRIBUTES if s.kind is AttributeKind.BITMAP}
        assert bitmaps == {"scan_direction_flag", "edge_of_flight_line"}

    def test_only_scan_angle_is_signed(self):
        """Test the signed flag."""
        assert [s.name for s in ATTRIBUTES if s.signed] == ["scan_angle_rank"]

    def test_kind_codes(self):
        """Test the numeric tags written to index files."""
        assert AttributeKind.DAC.code == 0
        assert AttributeKind.BITMAP.code == 1


class TestGetAttribute:
    """Tests for get_attribute."""

    def test_lookup_by_name(self):
        """Test lookup by catalogue name."""
        assert get_attribute("intensity").attribute_id == 0

    def test_lookup_is_lenient_about_case_and_dashes(self):
        """Test CLI-style spellings."""
        assert get_attribute("Point-Source-ID").name == "point_source_id"

    def test_lookup_by_id(self):
        """Test lookup by numeric id."""
        assert get_attribute(6).name == "scan_angle_rank"

    def test_unknown_name(self):
        """Test an unknown name raises UnknownAttributeError."""
        with pytest.raises(UnknownAttributeError) as exc_info:
            get_attribute("gps_time")
        assert "intensity" in str(exc_info.value)

    def test_unknown_id(self):
        """Test an unknown id raises UnknownAttributeError."""
        with pytest.raises(UnknownAttributeError):
            get_attribute(9)

    def test_unknown_attribute_is_a_key_error(self):
        """Test callers can catch KeyError."""
        with pytest.raises(KeyError):
            get_attribute("rgb")

    def test_contains(self):
        """Test range membership."""
        spec = get_attribute("scan_angle_rank")
        assert spec.contains(-128)
        assert not spec.contains(128)
