"""
Implementation of the in-process SweepPipeline.
"""
import logging
import time
from typing import Dict, List, Optional

from schublines.galois import SweepReport, Verifier, enumerate_problems
from schublines.utils import \
    ATTRIBUTE_SEP, TASK_ID_KEY, \
    VERIFY_WORKER_PREFIX, KostkaCache, SchublinesError, get_subdictionary
from schublines.workers import \
    Verify, VerifyFailure, VerifyRequest, parseverres

logger = logging.getLogger(__name__)

def collect_report(
    n: int,
    responses: List[Dict],
    elapsed: float
) -> SweepReport:
    """
    Build the report of dimension `n` from the Verify responses, whatever
    order they arrived in.
    """
    responses = sorted(responses, key=lambda res: res[TASK_ID_KEY])
    failures = [problem \
                    for problem, _, certified in map(parseverres, responses) \
                    if not certified]
    report = SweepReport(
        n=n,
        problems_checked=len(responses),
        failures=failures,
        elapsed=elapsed
    )
    logger.info("n=%d: %d problems, %d certified in %.3f s",
                n, report.problems_checked, report.certified, elapsed)
    return report

def _verify_or_fail(request, vw_config, verifier, **kwargs):
    try:
        return next(Verify(request, vw_config, verifier=verifier, **kwargs))
    except SchublinesError as e:
        return VerifyFailure(request, e)

def SweepPipeline(
    config,
    cache: Optional[KostkaCache]=None,
    **kwargs
):
    """
    In-process Sweep Pipeline function

    Arguments:
    ----------
    - config: tuple with the verify worker configuration and the HPC
    settings (unused here), as returned by `SweepPipelineConfig`
    - cache: optional persistent count cache shared by every dimension
    - kwargs: keyword arguments of the verify worker, with the `vw` prefix

    Returns:
    --------
    - Callable taking the ambient dimension n and returning its SweepReport.
    One memoizing verifier is shared by every call.
    """
    vw_config, _ = config
    vw_kwargs = get_subdictionary(
        kwargs,
        VERIFY_WORKER_PREFIX, ATTRIBUTE_SEP
    )
    verifier = Verifier(use_memo=vw_config.vw_use_memo, cache=cache)

    def run(n):
        start = time.perf_counter()
        out = (VerifyRequest(problem, task_id=task_id) \
                    for task_id, problem in enumerate(enumerate_problems(n)))
        out = (_verify_or_fail(el, vw_config, verifier, **vw_kwargs) \
                    for el in out)

        return collect_report(n, list(out), time.perf_counter() - start)

    return run
