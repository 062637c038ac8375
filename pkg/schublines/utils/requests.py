"""
Request functions for communication using ZeroMQ.

Functions:
- send_request(socket: zmq.Socket, request: Dict) -> None: Send a request
using a ZeroMQ socket.
- recv_request(socket: zmq.Socket) -> Dict: Receive a request using a ZeroMQ
socket.

Note:
- Messages only carry JSON-native values. Arbitrary-precision counts travel
as decimal strings, so that no count is ever truncated to 64 bits on the
wire.
"""
from typing import Dict

import zmq

def send_request(
    socket: zmq.Socket,
    request: Dict,
    flags: int=0
) -> None:
    """
    Send a request using a ZeroMQ socket.

    Parameters:
    - socket (zmq.Socket): ZeroMQ socket for communication.
    - request (Dict): The flat message to be sent.
    - flags (int, optional): ZeroMQ send flags (default is 0).

    Example:
    context = zmq.Context()
    socket = context.socket(zmq.PUSH)
    socket.connect("tcp://127.0.0.1:5555")
    send_request(socket, VerifyRequest((1, 1, 1, 1), task_id=0))
    """
    socket.send_json(request, flags)

def recv_request(socket: zmq.Socket) -> Dict:
    """
    Receive a request using a ZeroMQ socket.

    Parameters:
    - socket (zmq.Socket): ZeroMQ socket for communication.

    Returns:
    Dict: The received flat message.
    """
    return socket.recv_json()
