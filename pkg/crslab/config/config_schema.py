# crslab/config/config_schema.py
"""
Configuration validation schema
Ensures loaded configuration meets requirements
"""

from typing import Dict, Any, List

from .constants import LOG_LEVELS, OUTPUT_FORMATS, MAX_SEED


class ConfigValidator:
    """Validates configuration against schema"""

    @staticmethod
    def validate_config(config: Dict[str, Any]) -> List[str]:
        """
        Validate configuration dictionary

        Args:
            config: Configuration to validate

        Returns:
            List of validation error messages (empty if valid)
        """
        errors = []

        if 'caps' in config:
            errors.extend(ConfigValidator._validate_caps(config['caps']))

        if 'sampling' in config:
            errors.extend(ConfigValidator._validate_sampling(config['sampling']))

        if 'output' in config:
            errors.extend(ConfigValidator._validate_output(config['output']))

        if 'logging' in config:
            errors.extend(ConfigValidator._validate_logging(config['logging']))

        return errors

    @staticmethod
    def _validate_caps(caps: Dict[str, Any]) -> List[str]:
        """Validate enumeration and group-order caps"""
        errors = []

        for key in ('enumeration', 'group_order'):
            if key in caps:
                value = caps[key]
                if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                    errors.append(f"Invalid caps.{key}: {value} (must be a positive integer)")

        return errors

    @staticmethod
    def _validate_sampling(sampling: Dict[str, Any]) -> List[str]:
        """Validate sampling defaults"""
        errors = []

        if 'seed' in sampling:
            seed = sampling['seed']
            if not isinstance(seed, int) or seed < 0 or seed > MAX_SEED:
                errors.append(f"Invalid sampling.seed: {seed} (must be an unsigned 64-bit integer)")

        if 'workers' in sampling:
            workers = sampling['workers']
            if not isinstance(workers, int) or workers < 1:
                errors.append(f"Invalid sampling.workers: {workers} (must be >= 1)")

        return errors

    @staticmethod
    def _validate_output(output: Dict[str, Any]) -> List[str]:
        """Validate output configuration"""
        errors = []

        if 'format' in output and output['format'] not in OUTPUT_FORMATS:
            errors.append(
                f"Invalid output.format: {output['format']} (must be one of {', '.join(OUTPUT_FORMATS)})"
            )

        return errors

    @staticmethod
    def _validate_logging(logging_cfg: Dict[str, Any]) -> List[str]:
        """Validate logging configuration"""
        errors = []

        level = logging_cfg.get('level')
        if level is not None and str(level).upper() not in LOG_LEVELS:
            errors.append(f"Invalid logging.level: {level}")

        if 'json' in logging_cfg and not isinstance(logging_cfg['json'], bool):
            errors.append(f"logging.json must be boolean, got {type(logging_cfg['json'])}")

        return errors
