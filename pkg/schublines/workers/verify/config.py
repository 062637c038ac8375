"""
Verify Worker Configuration: config.py

This module defines the configuration class for the Verify Worker, which
specifies how the worker certifies Schubert problems.

Configuration Class:
- VerifyWorkerConfig: Configuration class for the Verify Worker.
"""
from dataclasses import dataclass

@dataclass
class VerifyWorkerConfig:
    """
    Verify Worker Configuration Class

    Attributes:
    - vw_use_memo (bool): Whether the worker's verifier reuses certificates
    of problems met before, default is True.
    - vw_validate (bool): Whether every certificate is re-validated
    bottom-up before the problem is reported as certified, default is True.

    Example:
    config = VerifyWorkerConfig(vw_use_memo=True, vw_validate=False)
    """
    vw_use_memo: bool=True
    vw_validate: bool=True

    def __post_init__(self):
        self.vw_use_memo = bool(self.vw_use_memo)
        self.vw_validate = bool(self.vw_validate)
