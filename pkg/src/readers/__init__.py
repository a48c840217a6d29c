"""
Data readers for LAS point cloud files.
"""

from .las_reader import LasFormatError, LasReader, read_las, read_las_file

__all__ = ["LasFormatError", "LasReader", "read_las", "read_las_file"]
