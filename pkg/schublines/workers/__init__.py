from schublines.workers.verify import *
