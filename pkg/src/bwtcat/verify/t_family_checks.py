"""Words with Θ(n^{1/k}) runs.

``t_family_word(i, k)`` has 2i runs for k >= 2 and 2i - 2 runs for k = 1, where the
BWT is also known exactly.
"""

from typing import List, Optional

from bwtcat.config import RuntimeConfig
from bwtcat.core.transform import r
from bwtcat.enums.check_id import CheckId
from bwtcat.errors import ParameterError
from bwtcat.families.t_family import t_family_word
from bwtcat.verify import closed_forms
from bwtcat.verify.harness import count_report, word_report
from bwtcat.verify.registry import CheckParams, CheckRegistry
from bwtcat.verify.report import VerifyReport

T_INDEX_MIN = 3
SWEEP_EXPONENTS = (1, 2, 3, 4)


def verify_t_family(
    i: int, k: int, config: Optional[RuntimeConfig] = None
) -> VerifyReport:
    """Check the run count of ``t_family_word(i, k)``; at k = 1 the whole BWT as well.

    Raises:
        ParameterError: If ``i < 3`` or ``k < 1``.
    """
    if i < T_INDEX_MIN or k < 1:
        raise ParameterError(f"t-family checks need i >= 3 and k >= 1, got i={i}, k={k}")
    config = config or RuntimeConfig.from_env()
    word = t_family_word(i, k)
    params = {"i": i, "k": k}
    if k == 1:
        return word_report(
            CheckId.TFAM, params, word, closed_forms.t_family_linear_bwt(i), config,
            runs=(closed_forms.t_family_runs(i, k), r(word, config.builder)),
        )
    return count_report(CheckId.TFAM, params, closed_forms.t_family_runs(i, k),
                        r(word, config.builder))


@CheckRegistry.register(CheckId.TFAM, k_min=T_INDEX_MIN)
def check_t_family(params: CheckParams, config: RuntimeConfig) -> List[VerifyReport]:
    """With ``params.i`` set, one word (i, k); otherwise index k for every sweep exponent."""
    if params.i is not None:
        return [verify_t_family(params.i, params.k, config)]
    return [verify_t_family(params.k, exponent, config) for exponent in SWEEP_EXPONENTS]
