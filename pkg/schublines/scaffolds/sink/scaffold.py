"""
Sink Scaffold for Closing a Pipeline.

The Sink scaffold closes a pipeline: it gathers the responses of the last
layer of workers, counts their EndOfTask messages against the number of
tasks announced by the Ventilator, and then publishes EndOfProcess on the
control channel. It uses PyZMQ for communication.
"""
import logging
import time
from typing import Callable, List, Optional

import zmq

from schublines.utils import \
    LAUNCH_SLEEP_TIME, N_ITEMS_KEY, \
    send_request, recv_request, \
    EndOfProcess, SinkTimeout, isexnit, iseot

logger = logging.getLogger(__name__)

def Sink(
    pull_port: int,
    control_port: int,
    scaffold_port: int,
    launch_sleep_time: float=LAUNCH_SLEEP_TIME,
    timeout: float=float("inf"),
    on_startup: Optional[Callable]=None,
    on_response: Optional[Callable]=None,
    on_closure: Optional[Callable]=None,
    **kwargs
) -> List[dict]:
    """
    Create and run a Sink scaffold for closing a pipeline and coordinating
    workers.

    Parameters:
    - pull_port (int): The port for receiving data from the last layer of
    workers.
    - control_port (int): The port for control communication (PUB/SUB channel).
    - scaffold_port (int): The port for scaffold communication.
    - launch_sleep_time (float): Time given to the peers to connect.
    - timeout (float): Seconds after which the Sink gives up waiting.
    - on_startup (Optional[Callable]): An optional callback function to execute
    on scaffold startup.
    - on_response (Optional[Callable]): An optional callback function called
    with every gathered response.
    - on_closure (Optional[Callable]): An optional callback function to execute
    on scaffold closure.
    - **kwargs (Any): Additional keyword arguments.

    Returns:
    List[dict]: The responses gathered, EndOfTask messages excluded, in order
    of arrival.

    Raises:
    - SinkTimeout: If the tasks are not all done within `timeout` seconds;
    the responses gathered so far travel with the error.

    Example:
    responses = Sink(pull_port=5557, control_port=5558, scaffold_port=5556)
    """
    if on_startup is not None:
        on_startup()

    context = zmq.Context()

    # Set PULL binding
    receiver = context.socket(zmq.PULL)
    receiver.bind(f"tcp://127.0.0.1:{pull_port}")

    # Set control binding (PUB/SUB channel)
    control = context.socket(zmq.PUB)
    control.bind(f"tcp://127.0.0.1:{control_port}")

    scaffold_receiver = context.socket(zmq.PAIR)
    scaffold_receiver.connect(f"tcp://127.0.0.1:{scaffold_port}")

    poller = zmq.Poller()
    poller.register(receiver, zmq.POLLIN)
    poller.register(scaffold_receiver, zmq.POLLIN)

    time.sleep(launch_sleep_time)

    responses = []
    n_tasks = float("inf")
    eot_counter = 0
    timeout_start = time.time()
    while eot_counter < n_tasks:
        if time.time() > timeout_start + timeout:
            send_request(control, EndOfProcess())
            context.destroy(linger=0)
            raise SinkTimeout(
                f"sink received {eot_counter} of {n_tasks} tasks within "
                f"{timeout} s",
                responses
            )

        socks = dict(poller.poll(timeout=100))

        if socks.get(receiver) == zmq.POLLIN:
            request = recv_request(receiver)

            if iseot(request):
                eot_counter += 1
            else:
                responses.append(request)
                if on_response is not None:
                    on_response(request)

        if socks.get(scaffold_receiver) == zmq.POLLIN:
            request = recv_request(scaffold_receiver)

            if isexnit(request):
                n_tasks = request[N_ITEMS_KEY]
                logger.debug("sink expects %d tasks", n_tasks)

    send_request(control, EndOfProcess())
    context.destroy(linger=None)

    if on_closure is not None:
        on_closure()

    return responses
