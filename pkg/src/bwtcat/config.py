"""Runtime configuration.

Settings are read from the environment each time they are requested, so there is no
module-level state to reset between calls or threads.
"""

import os
from typing import Mapping, Optional

from pydantic import BaseModel, ConfigDict, Field

from bwtcat.enums.ca_builder import CABuilder

ORACLE_ENV = "BWTCAT_ORACLE"
ORACLE_LIMIT_ENV = "BWTCAT_ORACLE_LIMIT"
FIB_K_MAX_ENV = "BWTCAT_FIB_K_MAX"
WORKERS_ENV = "BWTCAT_WORKERS"


class RuntimeConfig(BaseModel):
    """Process-wide knobs for CA construction and verification sweeps.

    Attributes:
        oracle: Force the naive rotation sort for every conjugate array
        oracle_limit: Longest word the verification harness re-checks with the oracle
        fib_k_max: Largest k for which verify_all runs the Fibonacci checks
        workers: Thread count for parallel edit scans, None for the executor default
    """

    model_config = ConfigDict(frozen=True)

    oracle: bool = Field(default=False, description="Use the naive CA builder everywhere")
    oracle_limit: int = Field(default=4096, ge=1, description="Oracle cross-check length cap")
    fib_k_max: int = Field(default=14, ge=3, description="Largest Fibonacci k in sweeps")
    workers: Optional[int] = Field(default=None, ge=1, description="Scan worker threads")

    @property
    def builder(self) -> CABuilder:
        """The conjugate array builder selected by this configuration."""
        return CABuilder.NAIVE if self.oracle else CABuilder.DOUBLING

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> "RuntimeConfig":
        """Build a configuration from environment variables.

        Args:
            environ: Mapping to read instead of ``os.environ``

        Returns:
            The configuration; unset variables keep their defaults.

        Raises:
            ValidationError: If a numeric variable is not a valid value.
        """
        env = os.environ if environ is None else environ
        values: dict = {"oracle": env.get(ORACLE_ENV, "").strip() == "1"}
        if env.get(ORACLE_LIMIT_ENV):
            values["oracle_limit"] = env[ORACLE_LIMIT_ENV]
        if env.get(FIB_K_MAX_ENV):
            values["fib_k_max"] = env[FIB_K_MAX_ENV]
        if env.get(WORKERS_ENV):
            values["workers"] = env[WORKERS_ENV]
        return cls(**values)


def resolve_builder(builder: Optional[CABuilder] = None) -> CABuilder:
    """Return ``builder`` or, when it is None, the builder the environment selects."""
    if builder is not None:
        return builder
    return RuntimeConfig.from_env().builder
