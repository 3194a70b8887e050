"""Verification sweeps over the check registry."""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, List, Optional, Tuple, Union

from bwtcat.config import RuntimeConfig
from bwtcat.enums.check_id import CheckId
from bwtcat.errors import ParameterError
from bwtcat.verify.registry import CheckParams, CheckRegistry, RegisteredCheck
from bwtcat.verify.report import SkippedCheck, VerifyReport, VerifySummary

Task = Tuple[RegisteredCheck, int]


def run_check(
    check_id: Union[CheckId, str],
    k: int,
    i: Optional[int] = None,
    config: Optional[RuntimeConfig] = None,
) -> List[VerifyReport]:
    """Run one registered check at ``k``.

    Args:
        check_id: Identifier, as CheckId or its string value
        k: Family parameter
        i: t-family index; ignored by the other checks
        config: Runtime configuration, read from the environment when omitted

    Returns:
        The check's reports.

    Raises:
        ValueError: If the identifier is unknown
        ParameterError: If ``k`` is below the check's bound; with ``i`` given the
            check validates its own parameters
    """
    try:
        check_id = CheckId(check_id)
    except ValueError:
        raise ValueError(f"No implementation for check: {check_id}")
    registered = CheckRegistry.get(check_id)
    if i is None and k < registered.k_min:
        raise ParameterError(f"{check_id.value} needs k >= {registered.k_min}, got {k}")
    config = config or RuntimeConfig.from_env()
    logging.debug(f"Running {check_id.value} at k={k}")
    return registered.run(CheckParams(k=k, i=i), config)


def _run_task(task: Task, config: RuntimeConfig) -> List[VerifyReport]:
    registered, k = task
    logging.debug(f"Running {registered.check_id.value} at k={k}")
    try:
        return registered.run(CheckParams(k=k), config)
    except Exception as e:
        logging.error(f"Check {registered.check_id.value} crashed at k={k}: {e}")
        return [VerifyReport(
            check_id=registered.check_id,
            params={"k": k},
            expected="completed",
            observed=f"{type(e).__name__}: {e}",
            detail="check raised",
        )]


def verify_all(
    k_range: Iterable[int],
    config: Optional[RuntimeConfig] = None,
    parallel: bool = False,
) -> VerifySummary:
    """Run every registered check for each k in ``k_range`` and aggregate the outcome.

    Checks outside their parameter bounds are recorded as skipped. A check that raises
    becomes a failing report; nothing is raised to the caller.

    Args:
        k_range: Sweep values, visited in the order given
        config: Runtime configuration, read from the environment when omitted
        parallel: Run checks on a thread pool; report order is unchanged

    Returns:
        The summary with reports ordered by k, then by check identifier.
    """
    config = config or RuntimeConfig.from_env()
    tasks: List[Task] = []
    skipped: List[SkippedCheck] = []
    for k in k_range:
        for registered in CheckRegistry.registered():
            reason = registered.skip_reason(k, config)
            if reason is None:
                tasks.append((registered, k))
            else:
                skipped.append(SkippedCheck(check_id=registered.check_id, k=k, reason=reason))

    if parallel and tasks:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            results = list(pool.map(lambda task: _run_task(task, config), tasks))
    else:
        results = [_run_task(task, config) for task in tasks]

    reports = [report for batch in results for report in batch]
    summary = VerifySummary(reports=tuple(reports), skipped=tuple(skipped))
    logging.debug(
        f"Verification finished: {summary.passed}/{summary.total} passed, "
        f"{len(skipped)} skipped"
    )
    return summary
