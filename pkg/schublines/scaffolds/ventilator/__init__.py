from schublines.scaffolds.ventilator.scaffold import Ventilator
