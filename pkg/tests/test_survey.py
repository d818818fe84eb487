import pytest

from crflag.cralgebra import DEGENERATE, ORBIT_CR, ORBIT_TOTALLY_REAL
from crflag.involution import identity_involution
from crflag.roots import build_root_system
from crflag.survey import (
    SurveyRow,
    TheoremViolation,
    highest_coefficient_table,
    run_survey,
)


@pytest.fixture(scope="module")
def small_survey():
    return run_survey(["A", "B"], max_rank=3, involution_source=2, oracle_max_rank=3)


def test_survey_is_deterministic(small_survey):
    again = run_survey(["A", "B"], max_rank=3, involution_source=2, oracle_max_rank=3)
    assert small_survey == again


def test_survey_contains_golden_row(small_survey):
    rows = [
        r
        for r in small_survey
        if r.family == "B" and r.rank == 3 and r.qr == (1, 3) and r.involution == "010|111"
    ]
    assert len(rows) == 1
    row = rows[0]
    assert row.order == 3
    assert row.c_of_q == 2
    assert row.bound_satisfied is True
    assert row.minimal is True
    assert row.orbit_type == ORBIT_CR and row.cr_codim == 1
    assert row.oracle_checked


def test_depth_zero_involutions_are_totally_real():
    rows = run_survey(["A"], max_rank=2, involution_source=0, oracle_max_rank=2)
    for row in rows:
        if row.cr_codim == 0:
            # the full parabolic gives a point; everything else is totally real
            assert row.qr == tuple(range(1, row.rank + 1))
        else:
            assert row.orbit_type == ORBIT_TOTALLY_REAL
            assert row.involution == "identity"


def test_survey_rows_have_bound_only_for_finite_maximal(small_survey):
    for row in small_survey:
        if isinstance(row.order, int) and row.c_of_q is not None:
            assert row.bound_satisfied is not None
        else:
            assert row.bound_satisfied is None


def test_hypersurface_filter():
    rows = run_survey(["B"], max_rank=3, involution_source=2,
                      hypersurface_only=True, oracle_max_rank=0)
    assert rows and all(r.cr_codim == 1 for r in rows)
    assert all(not r.oracle_checked for r in rows)


def test_explicit_involution_source():
    rs = build_root_system("A", 2)
    rows = run_survey(["A"], max_rank=2, involution_source=[identity_involution(rs)],
                      oracle_max_rank=2)
    a2_rows = [r for r in rows if r.rank == 2]
    assert a2_rows and all(r.involution == "identity" for r in a2_rows)


def test_hypersurface_theorems_on_small_survey(small_survey):
    for row in small_survey:
        if row.orbit_type != ORBIT_CR or row.cr_codim != 1:
            continue
        if isinstance(row.order, int):
            assert row.c_of_q is not None, row
            assert row.order <= row.c_of_q + 1
        else:
            assert row.order == DEGENERATE


def test_maximal_cr_rows_minimal_and_finite(small_survey):
    for row in small_survey:
        if row.orbit_type == ORBIT_CR and row.c_of_q is not None:
            assert isinstance(row.order, int)
            assert row.minimal


def test_theorem_violation_reproducer():
    exc = TheoremViolation("bound exceeded", "B", 3, (3, 1), "010|111")
    msg = str(exc)
    assert "family=B" in msg and "rank=3" in msg
    assert "qr=(1, 3)" in msg and "010|111" in msg


def test_highest_coefficient_table():
    table = highest_coefficient_table()
    for rank in range(1, 9):
        assert table[("A", rank)] == 1
    for family in ("B", "C", "D"):
        for (fam, rank), value in table.items():
            if fam == family:
                assert value <= 2
    assert table[("G", 2)] == 3
    assert table[("F", 4)] == 4
    assert table[("E", 6)] == 3
    assert table[("E", 7)] == 4
    assert table[("E", 8)] == 6


def test_survey_row_is_frozen(small_survey):
    row = small_survey[0]
    assert isinstance(row, SurveyRow)
    with pytest.raises(AttributeError):
        row.order = 5


@pytest.mark.slow
def test_rank_five_classical_hypersurfaces():
    rows = run_survey(["A", "B", "C", "D"], max_rank=5, involution_source=3,
                      hypersurface_only=True, oracle_max_rank=0)
    finite = [r for r in rows if isinstance(r.order, int)]
    assert finite
    for row in finite:
        assert row.c_of_q is not None, row
        assert row.order <= 3, row
