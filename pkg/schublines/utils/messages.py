"""
Control messages shared by every schublines worker and scaffold.

A message is a flat dictionary whose keys are composite paths
(`header/request_type`, `body/problem`, ...). The header always carries a
request type; the body carries the payload.
"""
from functools import wraps
from typing import Callable

from schublines.utils.constants import *

def ismsg(msg: dict) -> bool:
    """
    Check if the dictionary represents a valid message by verifying the
    presence of a request type.

    Parameters:
    - msg (dict): The dictionary to be checked.

    Returns:
    bool: True if the message has a request type, False otherwise.

    Raises:
    - ValueError: If called on a non-dictionary object.
    """
    if not isinstance(msg, dict):
        raise ValueError("Calling `ismsg` on non-dictionary object.")

    return REQUEST_TYPE_KEY in msg.keys()

def assert_ismsg(func: Callable) -> Callable:
    """
    Decorator to assert that the input is a valid message dictionary before
    calling a function.

    Parameters:
    - func (Callable): The function to be decorated.

    Returns:
    Callable: The decorated function.
    """
    @wraps(func)
    def wrapper(msg: dict, *args, **kwargs):
        if not ismsg(msg):
            raise ValueError(
                f"Calling `{func.__name__}` on non-message dictionary"
            )

        return func(msg, *args, **kwargs)

    return wrapper

def EndOfTask() -> dict:
    """
    Create a message signaling the completion of a task.
    """
    return {REQUEST_TYPE_KEY: END_OF_TASK_VALUE}

@assert_ismsg
def iseot(msg: dict) -> bool:
    """
    Check if the message represents an EndOfTask signal.
    """
    return msg[REQUEST_TYPE_KEY] == END_OF_TASK_VALUE

def EndOfProcess() -> dict:
    """
    Create a message signaling the completion of a process.
    """
    return {REQUEST_TYPE_KEY: END_OF_PROCESS_VALUE}

@assert_ismsg
def iseop(msg: dict) -> bool:
    """
    Check if the message represents an EndOfProcess signal.
    """
    return msg[REQUEST_TYPE_KEY] == END_OF_PROCESS_VALUE

def ExpectedNItems(n_items: int) -> dict:
    """
    Create a message for forwarding the number of items.

    Parameters:
    - n_items (int): The number of tasks sent downstream.

    Returns:
    dict: ExpectedNItems message.
    """
    return {
        REQUEST_TYPE_KEY: EXPECTED_N_ITEMS_VALUE,
        N_ITEMS_KEY: n_items
    }

@assert_ismsg
def isexnit(msg: dict) -> bool:
    """
    Check if the message is an ExpectedNItems message.
    """
    return msg[REQUEST_TYPE_KEY] == EXPECTED_N_ITEMS_VALUE

