"""
Runtime configuration.

Defaults live on the dataclass; ADTCOMP_* environment variables override them
(the package loads a .env file once at import time when python-dotenv is present).
"""

import os
from dataclasses import dataclass, fields


@dataclass
class AdtConfig:
    """Tunables for search, simulation and sweeps"""
    oracle_budget: int = 2_000_000    # max candidate tuples an exhaustive search may visit
    oracle_trials: int = 10_000       # randomized search attempts
    simulate_trials: int = 256
    max_channel_uses: int = 4         # oracle refuses larger N outright
    jobs: int = 1
    seed: int = 0
    log_level: str = "WARNING"

    @classmethod
    def from_env(cls, prefix: str = "ADTCOMP_") -> "AdtConfig":
        config = cls()
        for f in fields(cls):
            raw = os.getenv(prefix + f.name.upper())
            if raw is None:
                continue
            try:
                setattr(config, f.name, int(raw) if f.type in (int, "int") else raw)
            except ValueError as e:
                raise ValueError(f"{prefix}{f.name.upper()}={raw!r} is not a valid {f.name}") from e
        return config


__all__ = ["AdtConfig"]
