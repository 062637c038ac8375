"""
Verify Worker: worker.py

This module defines the Verify Worker functionality, including the main
worker function and the worker function decorated with the PullPushWorker
decorator.

Worker Functions:
- Verify: Main Verify Worker function, certifying one problem per request.
- VerifyWorker: Verify Worker function decorated with the PullPushWorker
decorator.
- VerifyFailure: `on_failure` callback turning an error into a failed
response.
- build_verifier: Builds the verifier of a worker from its configuration.
"""
import logging
from typing import Dict, Generator, Optional

from schublines.galois import Verifier, validate_certificate
from schublines.kostka import SchubertProblem
from schublines.utils import *
from schublines.workers.verify.config import *
from schublines.workers.verify.messages import *

logger = logging.getLogger(__name__)

def build_verifier(config: VerifyWorkerConfig) -> Verifier:
    """Verifier honouring `config.vw_use_memo`, without persistent cache."""
    return Verifier(use_memo=config.vw_use_memo)

def Verify(
    request: Dict,
    config: VerifyWorkerConfig,
    verifier: Optional[Verifier]=None,
    **kwargs
) -> Generator:
    """
    Verify Worker Main Function

    Certifies the problem of a Verify Worker request and yields a Verify
    Worker response.

    Parameters:
    - request (Dict): The Verify Worker request dictionary.
    - config (VerifyWorkerConfig): The Verify Worker configuration.
    - verifier (Verifier, optional): The verifier to use; a fresh one is
    built from `config` when missing.
    - **kwargs: Additional keyword arguments.

    Yields:
    Generator: Verify Worker response.

    Raises:
    - SchublinesError: If the problem is invalid, no split exists, or the
    certificate fails validation.
    """
    if verifier is None:
        verifier = build_verifier(config)

    problem = SchubertProblem(tuple(request[PROBLEM_KEY]))
    cert = verifier.verify(problem)
    if config.vw_validate:
        validate_certificate(cert)

    yield VerifyResponse(
        problem=problem,
        task_id=request[TASK_ID_KEY],
        certified=True,
        kostka=cert.kostka_value
    )

def VerifyFailure(request: Dict, error: Exception) -> Dict:
    """
    Failed Verify Worker response for a request whose verification raised.
    """
    logger.error("verification of %s failed: %s",
                 request.get(PROBLEM_KEY), error)
    # Built field by field: the problem itself may be malformed.
    return {
        REQUEST_TYPE_KEY: VERIFY_RESPONSE_VALUE,
        TASK_ID_KEY: request.get(TASK_ID_KEY),
        PROBLEM_KEY: request.get(PROBLEM_KEY),
        AMBIENT_N_KEY: request.get(AMBIENT_N_KEY),
        CERTIFIED_KEY: False,
        KOSTKA_KEY: None,
        ERROR_KEY: f"{type(error).__name__}: {error}"
    }

@PullPushWorker
def VerifyWorker(
    request: Dict,
    config: VerifyWorkerConfig,
    **kwargs
) -> Generator:
    """
    Verify Worker Function Decorated with PullPushWorker

    This function is decorated with the PullPushWorker decorator, allowing it
    to be used as a worker in a pull-push architecture. Pass
    `get_verifier=(build_verifier, config)` to build one memoizing verifier
    inside the worker process.

    Raises:
    - ValueError: If the request is not a Verify Worker request.
    """
    if not isverreq(request):
        raise ValueError(
            f"expected a {VERIFY_REQUEST_VALUE}, got "
            f"{request[REQUEST_TYPE_KEY]}"
        )

    yield from Verify(request, config, **kwargs)
