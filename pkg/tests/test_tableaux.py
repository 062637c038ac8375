import pytest

from schublines.kostka import \
    Rearrangement, SchubertProblem, TableauConfig, TwoRowTableau, \
    enumerate_tableaux, injection_report, iota_injection, iter_tableaux, \
    kostka, partitions, two_expressions, unequal_instances, witness_tableau
from schublines.utils import PreconditionViolation, ResourceLimit

def test_tableaux_of_four_ones():
    tableaux = enumerate_tableaux(Rearrangement((1, 1, 1, 1)))
    assert [str(t) for t in tableaux] == ["1,2/3,4", "1,3/2,4"]

def test_tableaux_are_valid_and_distinct():
    content = (2, 2, 1, 2, 3)
    tableaux = enumerate_tableaux(Rearrangement(content))
    assert len(tableaux) == len(set(tableaux)) == 5
    assert all(t.is_valid_for(content) for t in tableaux)
    assert tableaux == sorted(tableaux, key=lambda t: t.row1)

def test_problem_is_read_in_canonical_order():
    tableaux = enumerate_tableaux(SchubertProblem((1, 2, 1)))
    assert [str(t) for t in tableaux] == ["1,1/2,3"]

def test_invalid_problem_has_no_tableaux():
    assert enumerate_tableaux((4, 2)) == []

def test_zero_content_entries():
    tableaux = list(iter_tableaux((1, 0, 1)))
    assert [str(t) for t in tableaux] == ["1/3"]
    assert [str(t) for t in iter_tableaux(())] == ["/"]
    assert list(iter_tableaux((1, 2))) == []

def test_cap():
    with pytest.raises(ResourceLimit):
        enumerate_tableaux((1,) * 8, cap=13)
    assert len(enumerate_tableaux((1,) * 8, cap=14)) == 14
    with pytest.raises(ValueError):
        TableauConfig(tab_cap=0)

def test_parse_round_trip():
    t = TwoRowTableau.parse("1,1,2/2,3,3")
    assert t.row1 == (1, 1, 2) and t.row2 == (2, 3, 3)
    assert str(t) == "1,1,2/2,3,3"
    assert t.content(3) == (2, 2, 2)

@pytest.mark.parametrize("text", ["1,2/1,3", "2,1/3,4", "1,2/3"])
def test_not_semistandard(text):
    assert not TwoRowTableau.parse(text).is_semistandard()

def test_is_valid_for_checks_content():
    t = TwoRowTableau.parse("1,2/3,4")
    assert t.is_valid_for((1, 1, 1, 1))
    assert not t.is_valid_for((1, 1, 2))
    assert not t.is_valid_for((1, 1, 1))

def test_iota_example():
    image = iota_injection(
        TwoRowTableau.parse("1,2,3/4,4,4"), (1, 1), 1, 1, 2
    )
    assert str(image) == "1,2,3/3,4,4"

def test_iota_rejects_failed_hypotheses():
    t = TwoRowTableau.parse("1,2,3/4,4,4")
    with pytest.raises(PreconditionViolation):
        iota_injection(t, (1, 1), 2, 1, 2)
    with pytest.raises(PreconditionViolation):
        iota_injection(t, (1, 1), 1, 1, 1)
    with pytest.raises(PreconditionViolation):
        iota_injection(TwoRowTableau.parse("1,2/3,4"), (1, 1), 1, 1, 2)

def test_witness_is_outside_image():
    b, alpha, beta, gamma = (1, 1), 1, 1, 2
    w = witness_tableau(TwoRowTableau.parse("1/2"), b, alpha, beta, gamma)
    assert str(w) == "1,3,3/2,4,4"
    target = set(iter_tableaux(b + (gamma, beta + alpha)))
    image = {iota_injection(t, b, alpha, beta, gamma)
             for t in iter_tableaux(b + (alpha, beta + gamma))}
    assert w in target and w not in image

def test_injection_on_all_small_instances():
    instances = list(unequal_instances(14))
    assert instances
    for b, alpha, beta, gamma in instances:
        report = injection_report(b, alpha, beta, gamma)
        assert report.holds, report
        assert report.image_size == report.source_count

def test_two_expressions_agree():
    for b, alpha, beta, gamma in unequal_instances(14):
        first, second = two_expressions(b, alpha, beta, gamma)
        total = kostka(b + (alpha, beta, gamma))
        assert sum(first) == sum(second) == total
        assert first[0] < second[0]

def test_partitions():
    assert list(partitions(4, 2)) == [(2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert list(partitions(0)) == [()]
    assert len(list(partitions(10))) == 42

def test_worked_example_tableaux():
    tableaux = enumerate_tableaux(Rearrangement((2, 2, 1, 2, 3)))
    assert {str(t) for t in tableaux} == {
        "1,1,2,2,3/4,4,5,5,5",
        "1,1,2,2,4/3,4,5,5,5",
        "1,1,2,3,4/2,4,5,5,5",
        "1,1,2,4,4/2,3,5,5,5",
        "1,1,3,4,4/2,2,5,5,5",
    }

def _valid_problems(max_sum):
    for total in range(2, max_sum + 1, 2):
        for conditions in partitions(total, total // 2):
            yield conditions

def test_tableau_oracle_exhaustive():
    n_checked = 0
    for conditions in _valid_problems(16):
        assert len(enumerate_tableaux(conditions)) == kostka(conditions), \
            conditions
        n_checked += 1
    assert n_checked > 300
