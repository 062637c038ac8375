import pytest

from schublines.galois import \
    SweepReport, a2_difference, a2_row, a2_table, enumerate_problems, \
    equal_case_check
from schublines.kostka import SchubertProblem
from schublines.utils import ParityError, PreconditionViolation

# m, K(2^m, 4), K(2^m, 1, 1), difference
A2_TABLE = [
    (0, 0, 1, -1),
    (1, 0, 1, -1),
    (2, 1, 2, -1),
    (3, 2, 4, -2),
    (4, 6, 9, -3),
    (5, 15, 21, -6),
    (6, 40, 51, -11),
    (7, 105, 127, -22),
    (8, 280, 323, -43),
    (9, 750, 835, -85),
    (10, 2025, 2188, -163),
    (11, 5500, 5798, -298),
    (12, 15026, 15511, -485),
    (13, 41262, 41835, -573),
    (14, 113841, 113634, 207),
    (15, 315420, 310572, 4848),
    (16, 877320, 853467, 23853),
]

def test_a2_table():
    assert [tuple(row) for row in a2_table(16)] == A2_TABLE

def test_a2_sign_change():
    assert all(a2_difference(m) < 0 for m in range(14))
    assert all(a2_difference(m) > 0 for m in range(14, 31))

def test_a2_row_fields():
    row = a2_row(14)
    assert (row.m, row.merged, row.decremented, row.difference) \
        == (14, 113841, 113634, 207)
    with pytest.raises(PreconditionViolation):
        a2_row(-1)

@pytest.mark.parametrize("a, m, lhs, rhs", [
    (3, 2, 1, 3),
    (4, 2, 1, 4),
    (3, 4, 10, 24),
])
def test_equal_case(a, m, lhs, rhs):
    check = equal_case_check(a, m)
    assert (check.lhs, check.rhs) == (lhs, rhs)
    assert check.holds

def test_equal_case_preconditions():
    with pytest.raises(PreconditionViolation):
        equal_case_check(2, 4)
    with pytest.raises(PreconditionViolation):
        equal_case_check(3, 1)
    with pytest.raises(ParityError):
        equal_case_check(3, 3)

@pytest.mark.parametrize("n, count", [(2, 1), (3, 3), (4, 7), (5, 15)])
def test_enumerate_problems_counts(n, count):
    problems = list(enumerate_problems(n))
    assert len(problems) == len(set(problems)) == count
    assert all(sum(p.conditions) == 2 * n - 2 for p in problems)
    assert all(max(p.conditions) <= n - 1 for p in problems)

def test_enumerate_problems_order():
    assert [p.conditions for p in enumerate_problems(3)] \
        == [(2, 2), (2, 1, 1), (1, 1, 1, 1)]
    with pytest.raises(PreconditionViolation):
        list(enumerate_problems(1))

def test_sweep_report():
    failure = SchubertProblem((1, 1))
    report = SweepReport(n=3, problems_checked=3, failures=[failure],
                         elapsed=1.5)
    assert not report.all_certified
    assert report.certified == 2
    assert report.failures == (failure,)
    assert report.same_outcome(
        SweepReport(n=3, problems_checked=3, failures=(failure,))
    )
    assert SweepReport(n=2, problems_checked=1).all_certified

@pytest.mark.parametrize("a, m", [
    (a, m) for a in range(3, 7) for m in range(2, 9) if a * m % 2 == 0
])
def test_equal_case_grid(a, m):
    assert equal_case_check(a, m).holds
