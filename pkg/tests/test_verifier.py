from dataclasses import replace

import pytest

from schublines.galois import \
    AlternatingCertificate, Clause, Verifier, candidate_pairs, \
    enumerate_problems, find_discriminating_rearrangement, \
    validate_certificate, verify_at_least_alternating
from schublines.kostka import Rearrangement, SchubertProblem, kostka
from schublines.utils import CertificateError, InvalidProblem, LemmaFailure

def test_candidate_pairs():
    assert candidate_pairs((2, 2, 1, 2, 3)) == [(2, 3), (1, 3), (2, 2), (1, 2)]
    assert candidate_pairs((1, 1, 1, 1)) == [(1, 1)]

def test_discriminating_split_both_ones():
    split = find_discriminating_rearrangement((1, 1, 1, 1))
    assert split.pair == (1, 1)
    assert split.branch_values == (1, 1)
    assert split.clause is Clause.BOTH_BRANCHES_ONE

def test_discriminating_split_unequal():
    split = find_discriminating_rearrangement((2, 2, 1, 2, 3))
    assert split.pair == (2, 3)
    assert split.branch_values == (1, 4)
    assert split.clause is Clause.UNEQUAL_BRANCHES

def test_discriminating_split_preconditions():
    with pytest.raises(InvalidProblem):
        find_discriminating_rearrangement((2, 2, 2))
    with pytest.raises(LemmaFailure):
        find_discriminating_rearrangement((1, 1, 1, 1), kostka_fn=lambda p: 2)

def test_leaf_certificate():
    cert = Verifier().verify((2, 2))
    assert cert.clause is Clause.BASE_SMALL_K
    assert cert.is_leaf and cert.branch_values is None
    assert cert.kostka_value == 1
    assert cert.depth() == 0
    assert validate_certificate(cert)

def test_reduced_leaf():
    cert = Verifier().verify((2, 2, 2))
    assert cert.reduced == SchubertProblem((1, 1))
    assert cert.clause is Clause.BASE_SMALL_K

def test_certificate_example(verifier):
    cert = verifier.verify((2, 2, 1, 2, 3))
    assert cert.problem == SchubertProblem((3, 2, 2, 2, 1))
    assert cert.kostka_value == 5
    assert cert.clause is Clause.UNEQUAL_BRANCHES
    assert cert.rearrangement == Rearrangement((2, 2, 1, 2, 3))
    assert cert.branch_values == (1, 4)
    assert cert.merged_child.problem == SchubertProblem((5, 2, 2, 1))
    assert cert.decremented_child.problem \
        == SchubertProblem((2, 2, 2, 1, 1))
    assert validate_certificate(cert)

def test_every_node_is_consistent(verifier):
    cert = verifier.verify((3, 3, 2, 2, 2, 2))
    for node in cert.nodes():
        assert node.kostka_value == kostka(node.problem)
        assert node.justification
        if not node.is_leaf:
            assert sum(node.branch_values) == node.kostka_value
    assert cert.depth() >= 1

@pytest.mark.parametrize("conditions", [(), (4, 2), (1, 2)])
def test_verify_rejects(conditions, verifier):
    with pytest.raises(InvalidProblem):
        verifier.verify(conditions)

def test_memo_and_fresh_verifiers_agree(verifier):
    fresh = Verifier(use_memo=False)
    for problem in enumerate_problems(6):
        assert verifier.verify(problem) == fresh.verify(problem)
    assert len(verifier) > 0
    assert len(fresh) == 0
    verifier.clear()
    assert len(verifier) == 0

def test_shared_verifier():
    cert = verify_at_least_alternating((1, 1, 1, 1))
    assert cert.clause is Clause.BOTH_BRANCHES_ONE
    assert verify_at_least_alternating((1, 1, 1, 1), memo=False) == cert

@pytest.mark.parametrize("n", range(2, 9))
def test_all_problems_certify(n, verifier):
    for problem in enumerate_problems(n):
        assert validate_certificate(verifier.verify(problem))

# Validation of tampered trees

def _cert():
    return Verifier(use_memo=False).verify((2, 2, 1, 2, 3))

def test_validator_rejects_wrong_count():
    cert = replace(_cert(), kostka_value=6)
    with pytest.raises(CertificateError, match="count"):
        validate_certificate(cert)

def test_validator_rejects_wrong_clause():
    cert = replace(_cert(), clause=Clause.BOTH_BRANCHES_ONE)
    with pytest.raises(CertificateError, match="both-branches-one"):
        validate_certificate(cert)

def test_validator_rejects_large_leaf():
    cert = _cert()
    leaf = AlternatingCertificate(
        cert.problem, cert.reduced, cert.kostka_value, Clause.BASE_SMALL_K
    )
    with pytest.raises(CertificateError, match="base-small-k"):
        validate_certificate(leaf)

def test_validator_accepts_small_leaf_of_two():
    cert = Verifier().verify((1, 1, 1, 1))
    leaf = AlternatingCertificate(
        cert.problem, cert.reduced, 2, Clause.BASE_SMALL_K
    )
    assert validate_certificate(leaf)

def test_validator_rejects_wrong_reduction():
    cert = replace(_cert(), reduced=SchubertProblem((1, 1)))
    with pytest.raises(CertificateError, match="reduction"):
        validate_certificate(cert)

def test_validator_rejects_swapped_children():
    cert = _cert()
    swapped = replace(cert, merged_child=cert.decremented_child,
                      decremented_child=cert.merged_child)
    with pytest.raises(CertificateError, match="branch"):
        validate_certificate(swapped)

def test_validator_rejects_foreign_rearrangement():
    cert = replace(_cert(), rearrangement=Rearrangement((1, 1, 1, 1)))
    with pytest.raises(CertificateError, match="rearrangement"):
        validate_certificate(cert)

def test_validator_rejects_tampered_descendant():
    cert = _cert()
    child = cert.decremented_child
    bad_child = replace(child, kostka_value=child.kostka_value + 1)
    with pytest.raises(CertificateError):
        validate_certificate(replace(cert, decremented_child=bad_child))

def test_validator_rejects_incomplete_split():
    cert = replace(_cert(), merged_child=None)
    with pytest.raises(CertificateError, match="split"):
        validate_certificate(cert)
