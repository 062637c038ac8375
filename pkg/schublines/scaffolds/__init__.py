"""
Schublines Scaffolds Module

The `scaffolds` module provides the scaffolds that start and close the
multi-process pipelines, built on PyZMQ and the utilities of
`schublines.utils`.

Available Scaffolds:
- Sink: Scaffold for closing a pipeline by gathering the responses of the
last layer of workers.
- Ventilator: Scaffold for starting a pipeline by sending requests built on
top of an iterable.
"""

from schublines.scaffolds.sink.scaffold import Sink
from schublines.scaffolds.ventilator.scaffold import Ventilator
