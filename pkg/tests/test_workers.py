import pytest

from schublines.kostka import SchubertProblem
from schublines.utils import \
    AMBIENT_N_KEY, CERTIFIED_KEY, ERROR_KEY, KOSTKA_KEY, PROBLEM_KEY, \
    REQUEST_TYPE_KEY, TASK_ID_KEY, InvalidProblem, EndOfTask
from schublines.workers import \
    Verify, VerifyFailure, VerifyRequest, VerifyResponse, VerifyWorkerConfig, \
    build_verifier, isverreq, isverres, parseverres

def test_verify_request():
    msg = VerifyRequest((1, 1, 1, 1), task_id=0)
    assert msg == {
        "header/request_type": "VerifyRequest",
        "header/task_id": 0,
        "body/problem": [1, 1, 1, 1],
        "body/n": 3,
    }
    assert isverreq(msg) and not isverres(msg)
    assert VerifyRequest((2, 1, 1)) == VerifyRequest((1, 2, 1))

def test_verify_response():
    msg = VerifyResponse((2, 2, 1, 2, 3), task_id=4, certified=True,
                         kostka=5)
    assert isverres(msg) and not isverreq(msg)
    assert msg[KOSTKA_KEY] == "5"
    assert msg[ERROR_KEY] is None
    assert parseverres(msg) == (SchubertProblem((3, 2, 2, 2, 1)), 6, True)
    assert VerifyResponse((1, 1), task_id=1)[CERTIFIED_KEY] is False

def test_parseverres_rejects_requests():
    with pytest.raises(ValueError):
        parseverres(VerifyRequest((1, 1)))
    with pytest.raises(ValueError):
        parseverres(EndOfTask())

def test_verify_worker_function():
    config = VerifyWorkerConfig()
    request = VerifyRequest((2, 2, 1, 2, 3), task_id=3)
    responses = list(Verify(request, config))
    assert len(responses) == 1
    response = responses[0]
    assert response[TASK_ID_KEY] == 3
    assert response[CERTIFIED_KEY] is True
    assert response[KOSTKA_KEY] == "5"
    assert response[AMBIENT_N_KEY] == 6

def test_verify_shares_verifier():
    config = VerifyWorkerConfig(vw_validate=False)
    verifier = build_verifier(config)
    for task_id, problem in enumerate([(1, 1, 1, 1), (2, 2, 2, 2)]):
        request = VerifyRequest(problem, task_id=task_id)
        next(Verify(request, config, verifier=verifier))
    assert len(verifier) > 0
    assert len(build_verifier(VerifyWorkerConfig(vw_use_memo=False))) == 0

def test_verify_raises_on_invalid_problem():
    request = {
        REQUEST_TYPE_KEY: "VerifyRequest",
        TASK_ID_KEY: 0,
        PROBLEM_KEY: [4, 2],
        AMBIENT_N_KEY: 4,
    }
    with pytest.raises(InvalidProblem):
        next(Verify(request, VerifyWorkerConfig()))

def test_verify_failure_response():
    request = {
        REQUEST_TYPE_KEY: "VerifyRequest",
        TASK_ID_KEY: 2,
        PROBLEM_KEY: [1, 2],
        AMBIENT_N_KEY: None,
    }
    response = VerifyFailure(request, InvalidProblem("odd sum"))
    assert isverres(response)
    assert response[CERTIFIED_KEY] is False
    assert response[TASK_ID_KEY] == 2
    assert response[PROBLEM_KEY] == [1, 2]
    assert response[ERROR_KEY] == "InvalidProblem: odd sum"

def test_worker_config():
    config = VerifyWorkerConfig(vw_use_memo=0, vw_validate=1)
    assert config.vw_use_memo is False and config.vw_validate is True
