from schublines.pipelines.sweep.config import \
    HPCSweepSettings, SweepPipelineConfig
from schublines.pipelines.sweep.pipeline import SweepPipeline, collect_report
from schublines.pipelines.sweep.hpc_pipeline import HPCSweepPipeline
from schublines.pipelines.sweep.sweep import sweep
