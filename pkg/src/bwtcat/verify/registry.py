"""Check registry.

Checks register themselves with ``@CheckRegistry.register(check_id, ...)``. A check is a
function ``(params, config) -> list of VerifyReport``.
"""

from dataclasses import dataclass
from typing import Callable, ClassVar, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from bwtcat.config import RuntimeConfig
from bwtcat.enums.check_id import CheckId
from bwtcat.verify.report import VerifyReport


class CheckParams(BaseModel):
    """Parameters of one check run.

    Attributes:
        k: Family parameter
        i: Index of the t-family word; when None the t-family check uses ``k`` as index
    """

    model_config = ConfigDict(frozen=True)

    k: int = Field(ge=0)
    i: Optional[int] = Field(default=None, ge=1)


CheckFunction = Callable[[CheckParams, RuntimeConfig], List[VerifyReport]]


@dataclass(frozen=True)
class RegisteredCheck:
    """A check and the sweep range it applies to.

    Attributes:
        check_id: Identifier of the check
        run: The check function
        k_min: Smallest k the check accepts
        fibonacci_sized: Word length grows like F_2k; sweeps cap k at ``fib_k_max``
    """

    check_id: CheckId
    run: CheckFunction
    k_min: int
    fibonacci_sized: bool = False

    def skip_reason(self, k: int, config: RuntimeConfig) -> Optional[str]:
        """Why a sweep should not run this check at ``k``, or None."""
        if k < self.k_min:
            return f"needs k >= {self.k_min}"
        if self.fibonacci_sized and k > config.fib_k_max:
            return f"Fibonacci words capped at k <= {config.fib_k_max}"
        return None


class CheckRegistry:
    """Registry of verification checks keyed by CheckId."""

    _checks: ClassVar[Dict[CheckId, RegisteredCheck]] = {}

    @classmethod
    def register(cls, check_id: CheckId, k_min: int, fibonacci_sized: bool = False):
        """Register a check function.

        Args:
            check_id: Identifier to register under
            k_min: Smallest supported k
            fibonacci_sized: Whether sweeps cap k by the Fibonacci limit

        Returns:
            Decorator function for the check
        """
        def decorator(func: CheckFunction) -> CheckFunction:
            cls._checks[check_id] = RegisteredCheck(check_id, func, k_min, fibonacci_sized)
            return func
        return decorator

    @classmethod
    def get(cls, check_id: CheckId) -> RegisteredCheck:
        """Look up a registered check.

        Raises:
            ValueError: If no implementation exists for the identifier
        """
        if check_id not in cls._checks:
            raise ValueError(f"No implementation for check: {check_id}")
        return cls._checks[check_id]

    @classmethod
    def registered(cls) -> List[RegisteredCheck]:
        """Registered checks in CheckId declaration order."""
        return [cls._checks[check_id] for check_id in CheckId if check_id in cls._checks]
