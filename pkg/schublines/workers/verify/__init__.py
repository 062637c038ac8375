from schublines.workers.verify.config import VerifyWorkerConfig
from schublines.workers.verify.messages import \
    VerifyRequest, VerifyResponse, \
    isverreq, isverres, parseverres
from schublines.workers.verify.worker import \
    Verify, VerifyWorker, VerifyFailure, build_verifier
