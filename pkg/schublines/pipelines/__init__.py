from schublines.pipelines.sweep import *
