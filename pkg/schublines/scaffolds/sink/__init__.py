from schublines.scaffolds.sink.scaffold import Sink
