#!/usr/bin/env python3
"""Environment-driven configuration: size caps, worker count, output format."""

import os
import sys
from dataclasses import dataclass, fields, replace
from typing import Dict, Mapping, Optional, Tuple

from matroid_errors import ConfigError, SizeCapExceeded


# field -> (environment variable, default, hard limit)
_INT_SETTINGS: Dict[str, Tuple[str, int, Optional[int]]] = {
    'matroid_n': ('MATROID_MAX_N', 16, 16),
    'coproduct_n': ('MATROID_COPRODUCT_N', 10, 12),
    'canon_n': ('MATROID_CANON_N', 9, 12),
    'perm_n': ('MATROID_PERM_N', 9, 10),
    'census_n': ('MATROID_CENSUS_N', 5, 6),
    'submodular_n': ('MATROID_SUBMODULAR_N', 10, 16),
    'threads': ('MATROID_THREADS', 1, 64),
    'cache_size': ('MATROID_CACHE_SIZE', 2 ** 20, None),
}

OUTPUT_FORMATS = ('text', 'json', 'dot')

CAP_FIELDS = ('matroid_n', 'coproduct_n', 'canon_n', 'perm_n', 'census_n', 'submodular_n')


@dataclass(frozen=True)
class Config:
    """Process-wide settings. Caps bound the ground-set size each computation accepts."""

    matroid_n: int = 16
    coproduct_n: int = 10
    canon_n: int = 9
    perm_n: int = 9
    census_n: int = 5
    submodular_n: int = 10
    threads: int = 1
    cache_size: int = 2 ** 20
    output_format: str = 'text'
    catalogue_file: str = 'matroid_catalogue.json'

    def __post_init__(self):
        for name, (variable, _default, limit) in _INT_SETTINGS.items():
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise ConfigError(variable, f"expected an integer, got {value!r}")
            minimum = 1 if name in ('threads', 'cache_size') else 0
            if value < minimum:
                raise ConfigError(variable, f"must be at least {minimum}, got {value}")
            if limit is not None and value > limit:
                raise ConfigError(variable, f"hard limit is {limit}, got {value}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigError('MATROID_FORMAT',
                              f"must be one of {', '.join(OUTPUT_FORMATS)}, got {self.output_format!r}")

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> 'Config':
        """Build a configuration from environment variables.

        Args:
            environ: Mapping to read instead of ``os.environ``

        Returns:
            Validated Config; unset variables take their defaults
        """
        environ = os.environ if environ is None else environ
        values = {}
        for name, (variable, default, _limit) in _INT_SETTINGS.items():
            raw = environ.get(variable)
            if raw is None or raw.strip() == '':
                values[name] = default
                continue
            try:
                values[name] = int(raw)
            except ValueError:
                raise ConfigError(variable, f"must be an integer, got: {raw}")
        values['output_format'] = environ.get('MATROID_FORMAT', 'text').strip() or 'text'
        values['catalogue_file'] = environ.get('MATROID_CATALOGUE_FILE', 'matroid_catalogue.json')
        return cls(**values)

    def with_overrides(self, **overrides) -> 'Config':
        """Copy with the given fields replaced; ``None`` values are ignored."""
        changes = {k: v for k, v in overrides.items() if v is not None}
        known = {f.name for f in fields(self)}
        unknown = set(changes) - known
        if unknown:
            raise ConfigError(', '.join(sorted(unknown)), "unknown setting")
        updated = replace(self, **changes)
        for name in CAP_FIELDS:
            default = _INT_SETTINGS[name][1]
            if name in changes and changes[name] > default:
                print(f"Warning: raising {name} to {changes[name]} (default {default}); "
                      f"expect long running times", file=sys.stderr)
        return updated

    def check_cap(self, cap_name: str, requested: int) -> None:
        """Raise SizeCapExceeded if ``requested`` is beyond the named cap."""
        limit = getattr(self, cap_name)
        if requested > limit:
            raise SizeCapExceeded(cap_name, limit, requested)


_current: Optional[Config] = None


def get_config() -> Config:
    """Return the current configuration, reading the environment on first use."""
    global _current
    if _current is None:
        _current = Config.from_env()
    return _current


def set_config(config: Config) -> None:
    """Install ``config`` as the current configuration."""
    global _current
    _current = config


def check_cap(cap_name: str, requested: int) -> None:
    get_config().check_cap(cap_name, requested)
