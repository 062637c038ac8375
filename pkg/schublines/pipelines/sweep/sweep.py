"""
Exhaustive certification of all Schubert problems of lines in P^n, for
n = 2, ..., n_max.
"""
import logging
from typing import Callable, List, Optional

from schublines.galois import SweepReport
from schublines.pipelines.sweep.config import SweepPipelineConfig
from schublines.pipelines.sweep.hpc_pipeline import HPCSweepPipeline
from schublines.pipelines.sweep.pipeline import SweepPipeline
from schublines.utils import KostkaCache, PreconditionViolation

logger = logging.getLogger(__name__)

def sweep(
    n_max: int,
    workers: int=1,
    cache: Optional[KostkaCache]=None,
    on_report: Optional[Callable[[SweepReport], None]]=None,
    **kwargs
) -> List[SweepReport]:
    """
    Certify every Schubert problem of lines in P^n for 2 <= n <= n_max.

    Parameters:
    - n_max (int): the largest ambient dimension, at least 2.
    - workers (int): 1 or less runs in process with one shared memo; more
    runs as many VerifyWorker processes.
    - cache (KostkaCache, optional): persistent count cache, used by the
    in-process pipeline only.
    - on_report (Callable, optional): called with each report as soon as
    its dimension is done.
    - **kwargs: prefixed configuration, see `SweepPipelineConfig`.

    Returns:
    List[SweepReport]: one report per dimension. Failures are collected in
    the reports, never raised.

    Raises:
    - PreconditionViolation: If n_max < 2.

    Example:
    [r.problems_checked for r in sweep(5)]
    # [1, 3, 7, 15]
    """
    if n_max < 2:
        raise PreconditionViolation(f"n_max must be at least 2, got {n_max}")

    config = SweepPipelineConfig(**kwargs)
    if workers <= 1:
        run = SweepPipeline(config, cache=cache, **kwargs)
    else:
        run = HPCSweepPipeline(config, workers, **kwargs)

    reports = []
    for n in range(2, n_max + 1):
        report = run(n)
        if not report.all_certified:
            logger.warning("n=%d: %d problems not certified", n,
                           len(report.failures))
        if on_report is not None:
            on_report(report)
        reports.append(report)

    return reports
