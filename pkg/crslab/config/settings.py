# crslab/config/settings.py
"""
Configuration management for crslab
Handles enumeration caps, sampling defaults, output and logging preferences
"""

import json
import os
import logging
from pathlib import Path
from typing import Dict, Any, Optional

from .constants import (
    CONFIG_DIR_PERMISSIONS,
    CONFIG_FILE_NAME,
    CONFIG_FILE_PERMISSIONS,
    DEFAULT_CONFIG_DIR,
    DEFAULT_ENUMERATION_CAP,
    DEFAULT_GROUP_ORDER_CAP,
    DEFAULT_LOG_LEVEL,
    DEFAULT_OUTPUT_FORMAT,
    DEFAULT_SEED,
    DEFAULT_WORKERS,
    ENV_CONFIG_DIR,
    ENV_ENUMERATION_CAP,
    ENV_GROUP_ORDER_CAP,
    ENV_LOG_LEVEL,
)
from .config_schema import ConfigValidator
from ..utils.helpers import merge_dicts

logger = logging.getLogger(__name__)


class ConfigManager:
    """Manages layered configuration: defaults, config file, environment"""

    def __init__(self, config_dir: Optional[str] = None):
        """
        Initialize configuration manager

        Args:
            config_dir: Directory holding config.json (default: $CRSLAB_CONFIG_DIR or ~/.crslab)
        """
        if config_dir is None:
            config_dir = os.environ.get(ENV_CONFIG_DIR, DEFAULT_CONFIG_DIR)

        self.config_dir = Path(os.path.expanduser(str(config_dir)))
        self.config_file = self.config_dir / CONFIG_FILE_NAME

        self.config = self._load_config()
        self._apply_environment()
        self._validate_config()

    def _load_config(self) -> Dict[str, Any]:
        """Load configuration from file or fall back to defaults"""
        config = self._get_default_config()
        if not self.config_file.exists():
            logger.debug(f"No config file at {self.config_file}, using defaults")
            return config

        try:
            with open(self.config_file, 'r') as f:
                loaded = json.load(f)
            logger.info(f"Loaded configuration from {self.config_file}")
        except json.JSONDecodeError as e:
            logger.error(f"Invalid JSON in config file: {e}", exc_info=True)
            logger.warning("Using default configuration")
            return config
        except OSError as e:
            logger.error(f"Error reading config file: {e}", exc_info=True)
            return config

        if not isinstance(loaded, dict):
            logger.warning("Config file must hold a JSON object, using defaults")
            return config
        return merge_dicts(config, loaded)

    def _get_default_config(self) -> Dict[str, Any]:
        """Get default configuration settings"""
        return {
            "caps": {
                "enumeration": DEFAULT_ENUMERATION_CAP,
                "group_order": DEFAULT_GROUP_ORDER_CAP,
            },
            "sampling": {
                "seed": DEFAULT_SEED,
                "workers": DEFAULT_WORKERS,
            },
            "output": {
                "format": DEFAULT_OUTPUT_FORMAT,
            },
            "logging": {
                "level": DEFAULT_LOG_LEVEL,
                "json": False,
            },
        }

    def _apply_environment(self):
        """Environment variables override file values"""
        overrides = {
            ENV_ENUMERATION_CAP: 'caps.enumeration',
            ENV_GROUP_ORDER_CAP: 'caps.group_order',
        }
        for env_name, key in overrides.items():
            raw = os.environ.get(env_name)
            if raw is None:
                continue
            try:
                self._assign(key, int(raw))
                logger.debug(f"Config override from {env_name}: {key} = {raw}")
            except ValueError:
                logger.warning(f"Ignoring non-integer {env_name}={raw!r}")

        level = os.environ.get(ENV_LOG_LEVEL)
        if level:
            self._assign('logging.level', level.upper())

    def _validate_config(self):
        """Validate configuration against schema"""
        errors = ConfigValidator.validate_config(self.config)
        if errors:
            logger.warning("Configuration validation warnings:")
            for error in errors:
                logger.warning(f"  - {error}")

    def save_config(self):
        """Save configuration to file with proper permissions"""
        try:
            self.config_dir.mkdir(parents=True, exist_ok=True, mode=CONFIG_DIR_PERMISSIONS)
            with open(self.config_file, 'w') as f:
                json.dump(self.config, f, indent=2)
            os.chmod(self.config_file, CONFIG_FILE_PERMISSIONS)
            logger.debug(f"Saved configuration to {self.config_file}")
        except OSError as e:
            logger.error(f"Error saving configuration: {e}", exc_info=True)
            raise

    def get(self, key: str, default=None) -> Any:
        """
        Get configuration value by dot-notation key

        Args:
            key: Dot-separated key path (e.g., 'caps.enumeration')
            default: Default value if key not found

        Returns:
            Configuration value or default
        """
        value = self.config
        for k in key.split('.'):
            if isinstance(value, dict) and k in value:
                value = value[k]
            else:
                return default
        return value

    def _assign(self, key: str, value: Any):
        keys = key.split('.')
        node = self.config
        for k in keys[:-1]:
            node = node.setdefault(k, {})
        node[keys[-1]] = value

    def set(self, key: str, value: Any, persist: bool = False):
        """
        Set configuration value by dot-notation key

        Args:
            key: Dot-separated key path
            value: Value to set
            persist: Also write the configuration file
        """
        self._assign(key, value)
        if persist:
            self.save_config()
        logger.debug(f"Set config: {key} = {value}")

    @property
    def enumeration_cap(self) -> int:
        return int(self.get('caps.enumeration', DEFAULT_ENUMERATION_CAP))

    @property
    def group_order_cap(self) -> int:
        return int(self.get('caps.group_order', DEFAULT_GROUP_ORDER_CAP))


def resolve_cap(explicit: Optional[int], key: str = 'caps.enumeration') -> int:
    """Return an explicit cap if given, else the configured one"""
    if explicit is not None:
        return int(explicit)
    fallback = DEFAULT_GROUP_ORDER_CAP if key == 'caps.group_order' else DEFAULT_ENUMERATION_CAP
    return int(config.get(key, fallback))


# Global config instance
config = ConfigManager()
