"""
Implementation of the HPCSweepPipeline
"""
import logging
import time
from multiprocessing import Process

from schublines.galois import enumerate_problems
from schublines.pipelines.sweep.pipeline import collect_report
from schublines.scaffolds import Sink, Ventilator
from schublines.utils import \
    ATTRIBUTE_SEP, TASK_ID_KEY, VERIFY_WORKER_PREFIX, SinkTimeout, \
    get_subdictionary
from schublines.workers import \
    VerifyFailure, VerifyRequest, VerifyWorker, build_verifier

logger = logging.getLogger(__name__)

def _stop(processes, join_timeout):
    for process in processes:
        process.join(join_timeout)
        if process.is_alive():
            logger.warning("terminating %s", process.name)
            process.terminate()
            process.join()

def _fail_missing(problems, responses, error):
    """
    Complete `responses` with a failed response for every task the Sink
    never heard back from.
    """
    answered = {res[TASK_ID_KEY] for res in responses}
    missing = [VerifyFailure(VerifyRequest(problem, task_id=task_id), error) \
                   for task_id, problem in enumerate(problems) \
                   if task_id not in answered]
    return [*responses, *missing]

def HPCSweepPipeline(
    config,
    n_vw,
    **kwargs
):
    """
    HPC Sweep Pipeline function

    Arguments:
    ----------
    - config: tuple with the verify worker configuration and the HPC
    settings, as returned by `SweepPipelineConfig`
    - n_vw: number of verify workers
    - kwargs: keyword arguments of the verify workers, with the `vw`
    prefix, and of the scaffolds, with the `__v` prefix for the ventilator
    and `__s` for the sink

    Returns:
    --------
    - Callable taking the ambient dimension n and returning its SweepReport.
    Every call starts a Ventilator process and `n_vw` VerifyWorker
    processes, and runs the Sink in the calling process.
    """
    vw_config, hpc_settings = config

    # Extract the scaffold kwargs
    __v_kwargs = get_subdictionary(kwargs, "__v", ATTRIBUTE_SEP)
    __s_kwargs = get_subdictionary(kwargs, "__s", ATTRIBUTE_SEP)

    # Extract the worker kwargs
    vw_kwargs = get_subdictionary(kwargs, VERIFY_WORKER_PREFIX, ATTRIBUTE_SEP)
    vw_kwargs = {
        **vw_kwargs,
        "launch_sleep_time": hpc_settings.hpc_launch_sleep_time,
        "on_failure": VerifyFailure,
        "get_verifier": (build_verifier, vw_config)
    }

    def run(n):
        start = time.perf_counter()
        push_port, pull_port, control_port, scaffold_port = \
            hpc_settings.ports()

        problems = list(enumerate_problems(n))

        # Create the scaffolds
        ventilator = Process(
            target=Ventilator,
            args=(problems, VerifyRequest,
                  push_port, scaffold_port),
            kwargs={
                "launch_sleep_time": hpc_settings.hpc_launch_sleep_time,
                **__v_kwargs
            }
        )

        # Create the workers
        verify_workers = [Process(
            target=VerifyWorker,
            args=(vw_config, push_port, pull_port, control_port),
            kwargs=vw_kwargs
        ) for _ in range(n_vw)]

        # Start the scaffolds and the workers
        ventilator.start()
        for worker in verify_workers:
            worker.start()

        try:
            responses = Sink(
                pull_port, control_port, scaffold_port,
                launch_sleep_time=hpc_settings.hpc_launch_sleep_time,
                timeout=hpc_settings.hpc_timeout,
                **__s_kwargs
            )
        except SinkTimeout as e:
            logger.error("n=%d: %s", n, e)
            responses = _fail_missing(problems, e.responses, e)
        finally:
            _stop([ventilator, *verify_workers],
                  hpc_settings.hpc_join_timeout)

        return collect_report(n, responses, time.perf_counter() - start)

    return run
