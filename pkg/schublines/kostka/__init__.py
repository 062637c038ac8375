from schublines.kostka.problem import \
    SchubertProblem, Rearrangement, ProblemLike, \
    as_conditions, as_problem, n_of, is_valid, is_reduced, reduce
from schublines.kostka.repring import \
    RepRingVector, cg_apply, cg_step, parity_prefix_sums
from schublines.kostka.kostka import \
    kostka, kostka_vectors, hook_kostka, hook_ratio, recursion_split
from schublines.kostka.partitions import partitions
from schublines.kostka.tableaux import \
    TableauConfig, TwoRowTableau, iter_tableaux, enumerate_tableaux, \
    iota_injection, witness_tableau, InjectionReport, injection_report, \
    unequal_instances, two_expressions
