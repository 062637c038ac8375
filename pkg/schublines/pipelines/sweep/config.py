"""
Sweep Pipeline Configuration: config.py

Configuration Classes:
- HPCSweepSettings: Settings of the multi-process sweep pipeline.
- SweepPipelineConfig: Splits prefixed keyword arguments into the
configurations of the pipeline components.
"""
from dataclasses import dataclass
from typing import List, Optional

from schublines.utils import \
    ATTRIBUTE_SEP, HPC_PREFIX, LAUNCH_SLEEP_TIME, VERIFY_WORKER_PREFIX, \
    getFreePorts, get_subdictionary
from schublines.workers import VerifyWorkerConfig

N_PIPELINE_PORTS = 4

@dataclass
class HPCSweepSettings:
    """
    Settings of the multi-process sweep pipeline.

    Attributes:
    - hpc_launch_sleep_time (float): Time given to the sockets of every
    scaffold and worker to connect, default is 0.5 s.
    - hpc_base_port (int, optional): First of four consecutive ports (push,
    pull, control, scaffold). Free ports are picked when None.
    - hpc_timeout (float): Seconds the Sink waits for all the tasks of one
    dimension, default is no limit.
    - hpc_join_timeout (float): Seconds given to the processes to exit once
    the Sink is done, before they are terminated.

    Example:
    settings = HPCSweepSettings(hpc_launch_sleep_time=0.2)
    push, pull, control, scaffold = settings.ports()
    """
    hpc_launch_sleep_time: float=LAUNCH_SLEEP_TIME
    hpc_base_port: Optional[int]=None
    hpc_timeout: float=float("inf")
    hpc_join_timeout: float=5.0

    def __post_init__(self):
        if self.hpc_launch_sleep_time < 0:
            raise ValueError(
                "hpc_launch_sleep_time must be nonnegative, got "
                f"{self.hpc_launch_sleep_time}"
            )
        if self.hpc_timeout < 0:
            raise ValueError(
                f"hpc_timeout must be nonnegative, got {self.hpc_timeout}"
            )
        if self.hpc_base_port is not None:
            self.hpc_base_port = int(self.hpc_base_port)

    def ports(self) -> List[int]:
        if self.hpc_base_port is None:
            return getFreePorts(N_PIPELINE_PORTS)
        return list(range(self.hpc_base_port,
                          self.hpc_base_port + N_PIPELINE_PORTS))

def SweepPipelineConfig(**kwargs):
    vw_config = VerifyWorkerConfig(
        **get_subdictionary(
            kwargs,
            VERIFY_WORKER_PREFIX, ATTRIBUTE_SEP, False
        )
    )
    hpc_settings = HPCSweepSettings(
        **get_subdictionary(
            kwargs,
            HPC_PREFIX, ATTRIBUTE_SEP, False
        )
    )

    return vw_config, hpc_settings
