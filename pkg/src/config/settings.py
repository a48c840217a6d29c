"""
Configuration management for the k3-lidar tools.
"""

from typing import Optional

from dotenv import load_dotenv
from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from src.models.index import DEFAULT_K, DEFAULT_L

OUTPUT_FORMATS = ("text", "csv", "las")


class K3LidarSettings(BaseSettings):
    """Configuration settings for index building and querying."""

    # Index defaults
    k: int = Field(default=DEFAULT_K, alias="K3LIDAR_K")
    l: int = Field(default=DEFAULT_L, alias="K3LIDAR_L")  # noqa: E741

    # Query output
    output_format: str = Field(default="text", alias="K3LIDAR_OUTPUT_FORMAT")

    # Application Configuration
    environment: str = Field(default="development", alias="ENVIRONMENT")
    debug: bool = Field(default=False, alias="DEBUG")
    log_level: str = Field(default="INFO", alias="LOG_LEVEL")
    log_format: str = Field(default="standard", alias="LOG_FORMAT")
    log_file: Optional[str] = Field(default=None, alias="LOG_FILE")

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        validate_default=True,
        populate_by_name=True,
    )

    @field_validator("k")
    @classmethod
    def validate_k(cls, v):
        """Ensure the branching factor can split a cube."""
        if v < 2:
            raise ValueError("K3LIDAR_K must be at least 2")
        return v

    @field_validator("l")
    @classmethod
    def validate_l(cls, v):
        """Ensure the leaf threshold is positive."""
        if v < 1:
            raise ValueError("K3LIDAR_L must be at least 1")
        return v

    @field_validator("output_format")
    @classmethod
    def validate_output_format(cls, v):
        """Ensure output format is known."""
        if v.lower() not in OUTPUT_FORMATS:
            raise ValueError(f"Output format must be one of: {list(OUTPUT_FORMATS)}")
        return v.lower()

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v):
        """Ensure log level is valid."""
        valid_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        if v.upper() not in valid_levels:
            raise ValueError(f"Log level must be one of: {valid_levels}")
        return v.upper()

    @field_validator("log_format")
    @classmethod
    def validate_log_format(cls, v):
        """Ensure log format is valid."""
        if v.lower() not in ("standard", "json"):
            raise ValueError("Log format must be 'standard' or 'json'")
        return v.lower()

    @field_validator("environment")
    @classmethod
    def validate_environment(cls, v):
        """Ensure environment is valid."""
        valid_envs = ["development", "testing", "production"]
        if v.lower() not in valid_envs:
            raise ValueError(f"Environment must be one of: {valid_envs}")
        return v.lower()


def load_config(env_file: Optional[str] = None) -> K3LidarSettings:
    """Load configuration from environment variables and .env file."""
    if env_file:
        load_dotenv(env_file, override=True)
    else:
        load_dotenv()

    return K3LidarSettings()


# Global configuration instance
_config: Optional[K3LidarSettings] = None


def get_config() -> K3LidarSettings:
    """Get the global configuration instance."""
    global _config
    if _config is None:
        _config = load_config()
    return _config


def reload_config(env_file: Optional[str] = None) -> K3LidarSettings:
    """Reload configuration (useful for testing)."""
    global _config
    _config = load_config(env_file)
    return _config
