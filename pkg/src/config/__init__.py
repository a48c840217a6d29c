"""
Configuration module for the k3-lidar tools.
"""

from .logging_config import LoggingConfig, configure_logging, reset_logging
from .settings import K3LidarSettings, get_config, load_config, reload_config

__all__ = [
    "K3LidarSettings",
    "LoggingConfig",
    "configure_logging",
    "get_config",
    "load_config",
    "reload_config",
    "reset_logging",
]
