"""Configuration management for the Schroeder Hopf toolkit."""

import logging
import os
import yaml
from pathlib import Path
from typing import Dict, Any

from dotenv import load_dotenv

logger = logging.getLogger(__name__)

# Picks up SCHROEDER_CONFIG / SCHROEDER_LOG_LEVEL from a local .env file
load_dotenv()


class Config:
    """Configuration loader and manager."""

    def __init__(self, config_path: str = None):
        """
        Initialize configuration.

        Args:
            config_path: Path to configuration YAML file. Falls back to
                $SCHROEDER_CONFIG, then to the bundled config.yaml.
        """
        if config_path is None:
            config_path = os.environ.get('SCHROEDER_CONFIG') or os.path.join(
                os.path.dirname(__file__),
                'config.yaml'
            )

        self.config_path = Path(config_path)
        self._config = self._load_config()

    def _load_config(self) -> Dict[str, Any]:
        """Load configuration from YAML file."""
        try:
            with open(self.config_path, 'r') as f:
                return yaml.safe_load(f) or {}
        except FileNotFoundError:
            logger.warning(f"Config file {self.config_path} not found, using defaults")
            return {}

    def get(self, key: str, default: Any = None) -> Any:
        """
        Get configuration value by key.

        Args:
            key: Configuration key (supports dot notation, e.g., 'enumeration.max_degree')
            default: Default value if key not found

        Returns:
            Configuration value
        """
        keys = key.split('.')
        value = self._config

        for k in keys:
            if isinstance(value, dict) and k in value:
                value = value[k]
            else:
                return default

        return value

    def set(self, key: str, value: Any):
        """
        Set configuration value.

        Args:
            key: Configuration key (supports dot notation)
            value: Value to set
        """
        keys = key.split('.')
        config = self._config

        for k in keys[:-1]:
            if k not in config:
                config[k] = {}
            config = config[k]

        config[keys[-1]] = value

    @property
    def enumeration(self) -> Dict[str, Any]:
        """Get enumeration caps."""
        return self._config.get('enumeration', {})

    @property
    def verification(self) -> Dict[str, Any]:
        """Get verification suite defaults."""
        return self._config.get('verification', {})

    @property
    def output(self) -> Dict[str, Any]:
        """Get output configuration."""
        return self._config.get('output', {})

    @property
    def logging_config(self) -> Dict[str, Any]:
        """Get logging configuration."""
        return self._config.get('logging', {})

    @property
    def log_level(self) -> int:
        """Resolve the log level, letting $SCHROEDER_LOG_LEVEL win over the file."""
        name = os.environ.get('SCHROEDER_LOG_LEVEL') or self.get('logging.level', 'INFO')
        return getattr(logging, str(name).upper(), logging.INFO)


# Global configuration instance
config = Config()
