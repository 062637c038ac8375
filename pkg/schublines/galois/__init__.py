from schublines.galois.certificate import \
    Clause, AlternatingCertificate, validate_certificate
from schublines.galois.verifier import \
    DiscriminatingSplit, Verifier, candidate_pairs, \
    find_discriminating_rearrangement, verify_at_least_alternating
from schublines.galois.problems import enumerate_problems, SweepReport
from schublines.galois.inequalities import \
    A2Row, EqualCaseCheck, a2_row, a2_difference, a2_table, equal_case_check
