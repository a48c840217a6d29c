"""Writers module for exporting point clouds as LAS files."""

from src.writers.las_writer import build_las_data, write_las, write_las_file

__all__ = ["build_las_data", "write_las", "write_las_file"]
