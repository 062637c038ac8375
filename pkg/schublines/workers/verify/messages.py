"""
Verify Worker Messages: messages.py

This module defines the message creation functions for the Verify Worker,
including request and response message creation and message type checking
functions.

Message Functions:
- VerifyRequest: Creates a Verify Worker request message.
- isverreq: Checks if a message is a Verify Worker request.
- VerifyResponse: Creates a Verify Worker response message.
- isverres: Checks if a message is a Verify Worker response.
- parseverres: Reads a Verify Worker response back into Python values.
"""
from typing import Any, Dict, Optional, Tuple

from schublines.kostka import ProblemLike, SchubertProblem, as_problem, n_of
from schublines.utils import *

def VerifyRequest(
    problem: ProblemLike,
    task_id: Any=None
) -> Dict:
    """
    Verify Worker Request Message Creation

    Parameters:
    - problem (ProblemLike): The Schubert problem to certify.
    - task_id (Any, optional): Identifier echoed in the response. Defaults
    to None.

    Returns:
    Dict: The Verify Worker request message.

    Example:
    VerifyRequest((1, 1, 1, 1), task_id=0)
    # {'header/request_type': 'VerifyRequest', 'header/task_id': 0,
    #  'body/problem': [1, 1, 1, 1], 'body/n': 3}
    """
    problem = as_problem(problem)

    msg = {REQUEST_TYPE_KEY: VERIFY_REQUEST_VALUE}
    msg[TASK_ID_KEY] = task_id
    msg[PROBLEM_KEY] = list(problem.conditions)
    msg[AMBIENT_N_KEY] = n_of(problem)

    msg = flatten_dictionary(msg)
    return msg

@assert_ismsg
def isverreq(msg: Dict) -> bool:
    """
    Checks if a message is a Verify Worker request.
    """
    return msg[REQUEST_TYPE_KEY] == VERIFY_REQUEST_VALUE

def VerifyResponse(
    problem: ProblemLike,
    task_id: Any=None,
    certified: bool=False,
    kostka: Optional[int]=None,
    error: Optional[str]=None
) -> Dict:
    """
    Verify Worker Response Message Creation

    Parameters:
    - problem (ProblemLike): The problem the response is about.
    - task_id (Any, optional): The identifier of the request.
    - certified (bool): Whether a valid certificate was produced.
    - kostka (int, optional): The count of the problem, sent as a decimal
    string.
    - error (str, optional): Diagnostic of a failed verification.

    Returns:
    Dict: The Verify Worker response message.
    """
    problem = as_problem(problem)

    msg = {REQUEST_TYPE_KEY: VERIFY_RESPONSE_VALUE}
    msg[TASK_ID_KEY] = task_id
    msg[PROBLEM_KEY] = list(problem.conditions)
    msg[AMBIENT_N_KEY] = n_of(problem)
    msg[CERTIFIED_KEY] = bool(certified)
    msg[KOSTKA_KEY] = None if kostka is None else str(kostka)
    msg[ERROR_KEY] = error

    msg = flatten_dictionary(msg)
    return msg

@assert_ismsg
def isverres(msg: Dict) -> bool:
    """
    Checks if a message is a Verify Worker response.
    """
    return msg[REQUEST_TYPE_KEY] == VERIFY_RESPONSE_VALUE

@assert_ismsg
def parseverres(msg: Dict) -> Tuple[SchubertProblem, int, bool]:
    """
    Parse a Verify Worker response.

    Returns:
    Tuple[SchubertProblem, int, bool]: the problem, its ambient dimension
    and whether it was certified.

    Raises:
    - ValueError: If the message is not a Verify Worker response.
    """
    if not isverres(msg):
        raise ValueError(
            f"expected a {VERIFY_RESPONSE_VALUE}, got {msg[REQUEST_TYPE_KEY]}"
        )
    return SchubertProblem(tuple(msg[PROBLEM_KEY])), \
        msg[AMBIENT_N_KEY], msg[CERTIFIED_KEY]
