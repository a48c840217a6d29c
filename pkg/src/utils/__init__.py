"""Utility modules for the k3-lidar tools."""
