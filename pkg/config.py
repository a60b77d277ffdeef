import os
import logging
from typing import Dict, Optional

from dotenv import load_dotenv, dotenv_values

from utils.errors import ConfigError

load_dotenv()

logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ('csv', 'jsonl', 'table')


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == '':
        return default
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}")


class Config:
    # Enumeration / oracle settings
    ORACLE_CAP = _env_int('LEHMERK_ORACLE_CAP', 1000)
    ORACLE_SCAN_LIMIT = _env_int('LEHMERK_ORACLE_SCAN_LIMIT', 60)
    FIELD_CRITERION_LIMIT = 30
    TRICHOTOMY_PRIME_LIMIT = 97
    CRT_PAIR_LIMIT = 100  # mn above this: operation tables checked on a fixed sample set

    # Scan settings
    THREADS = _env_int('LEHMERK_THREADS', 1)
    SCAN_CHUNK = _env_int('LEHMERK_SCAN_CHUNK', 2048)
    SIEVE_LIMIT = _env_int('LEHMERK_SIEVE_LIMIT', 10 ** 6)
    SCAN_CAP = _env_int('LEHMERK_SCAN_CAP', 10 ** 7)

    # Output
    OUTPUT_FORMAT = os.environ.get('LEHMERK_OUTPUT_FORMAT', 'csv')

    # Logging
    LOG_LEVEL = os.environ.get('LEHMERK_LOG_LEVEL', 'WARNING')
    LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

    # Zeta bracket used by the theorem1 chain
    ZETA_TOLERANCE = (1, 1000)
    ZETA_TERMS_CAP = _env_int('LEHMERK_ZETA_TERMS_CAP', 10 ** 4)


_TRUE_STRINGS = {'1', 'true', 'yes', 'on'}
_FALSE_STRINGS = {'0', 'false', 'no', 'off', ''}


def _parse_bool(key: str, value: str) -> bool:
    lowered = value.strip().lower()
    if lowered in _TRUE_STRINGS:
        return True
    if lowered in _FALSE_STRINGS:
        return False
    raise ConfigError(f"{key} must be a boolean, got {value!r}")


class RunConfig:
    """Settings for one CLI run.

    Values are resolved in order: defaults, environment (via Config),
    optional key=value config file, then command-line flags.
    """

    INT_KEYS = ('field', 'max', 'oracle_cap', 'threads')
    BOOL_KEYS = ('squarefree_only',)

    def __init__(self, field_m: int = -1, d_max: int = 100,
                 oracle_cap: int = None, output_format: str = None,
                 output_path: Optional[str] = None, squarefree_only: bool = False,
                 threads: int = None):
        self.field_m = field_m
        self.d_max = d_max
        self.oracle_cap = Config.ORACLE_CAP if oracle_cap is None else oracle_cap
        self.output_format = Config.OUTPUT_FORMAT if output_format is None else output_format
        self.output_path = output_path
        self.squarefree_only = squarefree_only
        self.threads = Config.THREADS if threads is None else threads
        self.validate()

    def validate(self):
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigError(f"output format must be one of {', '.join(OUTPUT_FORMATS)}")
        if self.threads < 1:
            raise ConfigError("threads must be a positive integer")
        if self.oracle_cap < 1:
            raise ConfigError("oracle cap must be a positive integer")
        if self.d_max < 1:
            raise ConfigError("max must be at least 1")

    @classmethod
    def from_dict(cls, data: Dict):
        return cls(
            field_m=data.get('field', -1),
            d_max=data.get('max', 100),
            oracle_cap=data.get('oracle_cap'),
            output_format=data.get('format'),
            output_path=data.get('output'),
            squarefree_only=data.get('squarefree_only', False),
            threads=data.get('threads'),
        )

    @classmethod
    def from_sources(cls, config_path: Optional[str] = None, **flags):
        """Merge a config file with explicit flags; None flags are unset"""
        data = load_config_file(config_path) if config_path else {}
        data.update({key: value for key, value in flags.items() if value is not None})
        return cls.from_dict(data)


def load_config_file(path: str) -> Dict:
    """Read key=value settings, coercing the known keys to their types"""
    if not os.path.exists(path):
        raise ConfigError(f"config file not found: {path}")

    raw = dotenv_values(path)
    data = {}
    for key, value in raw.items():
        key = key.strip().lower().replace('-', '_')
        if value is None:
            continue
        if key in RunConfig.INT_KEYS:
            try:
                data[key] = int(value)
            except ValueError:
                raise ConfigError(f"{key} must be an integer, got {value!r}")
        elif key in RunConfig.BOOL_KEYS:
            data[key] = _parse_bool(key, value)
        elif key in ('format', 'output'):
            data[key] = value.strip()
        else:
            logger.warning(f"Ignoring unknown config key: {key}")

    logger.info(f"Loaded {len(data)} settings from {path}")
    return data
