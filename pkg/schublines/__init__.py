"""
schublines: exact two-rowed Kostka numbers, certificates that Schubert
problems of lines have at least alternating Galois groups, and the spectral
integral formula behind them.
"""
from schublines.kostka import *
from schublines.galois import *
from schublines.spectral import *
from schublines.pipelines import sweep
