import math
from fractions import Fraction as F

import pytest

from polydiag import counting
from polydiag.counting import (
    FIGURE_KINDS,
    KINDS,
    RationalSeries,
    count_table,
    egf,
    egf_count,
    enumeration_count,
    exp_x,
    recurrence_count,
    series,
    series_exp,
    table_to_csv,
    table_to_markdown,
)

# the published table of counts, n = 0..8
TABLE = {
    "polydiagonal": [1, 2, 6, 24, 116, 648, 4088, 28640, 219920],
    "synchrony": [1, 1, 2, 5, 15, 52, 203, 877, 4140],
    "anti_synchrony": [0, 1, 4, 19, 101, 596, 3885, 27763, 215780],
    "minimally": [0, 1, 3, 10, 37, 151, 674, 3263, 17007],
    "fully": [1, 1, 2, 7, 29, 136, 737, 4537, 30914],
    "evenly": [1, 1, 2, 4, 13, 41, 176, 722, 3774],
}


def test_series_exp_of_x():
    s = series_exp(series([0, 1], 8))
    assert s.coeffs == tuple(F(1, math.factorial(k)) for k in range(9))


def test_series_exp_bell_numbers():
    bell = series_exp(exp_x(8) - RationalSeries((F(1),) + (F(0),) * 8))
    assert bell.coeffs[5] * math.factorial(5) == 52


def test_series_exp_of_zero():
    s = series_exp(series([0], 5))
    assert s.coeffs == (F(1),) + (F(0),) * 5


def test_series_exp_needs_zero_constant_term():
    with pytest.raises(ValueError):
        series_exp(series([1, 1], 4))


def test_egf_count_goldens():
    assert egf_count("polydiagonal", 8) == 219920
    assert egf_count("evenly", 6) == 176
    assert egf_count("fully", 0) == 1
    with pytest.raises(KeyError):
        egf_count("nonsense", 3)


def test_recurrence_goldens():
    assert recurrence_count("synchrony", 7) == 877
    assert recurrence_count("minimally", 4) == 37
    assert recurrence_count("polydiagonal", 1) == 2
    with pytest.raises(KeyError):
        recurrence_count("freely_fully", 4)


def test_enumeration_goldens():
    assert enumeration_count("anti_synchrony", 5) == 596
    assert enumeration_count("evenly", 3) == 4
    for n in range(7):
        assert enumeration_count("freely_fully", n) == egf_count("freely_fully", n)
    with pytest.raises(ValueError):
        enumeration_count("evenly", 9)


def test_three_way_agreement_small():
    for kind in FIGURE_KINDS:
        for n in range(7):
            assert (
                egf_count(kind, n)
                == recurrence_count(kind, n)
                == enumeration_count(kind, n)
                == TABLE[kind][n]
            )


def test_series_identities():
    order = 12
    e_full = egf("evenly", order)
    e_free = egf("freely_evenly", order)
    f_full = egf("fully", order)
    f_free = egf("freely_fully", order)
    p = egf("polydiagonal", order)
    b = egf("synchrony", order)
    ex = exp_x(order)
    assert (e_free * ex).coeffs == e_full.coeffs
    assert (f_free * ex).coeffs == f_full.coeffs
    assert (b * f_full).coeffs == p.coeffs


def test_table_relations():
    for n in range(9):
        assert TABLE["anti_synchrony"][n] == TABLE["polydiagonal"][n] - TABLE["synchrony"][n]
        assert TABLE["evenly"][n] <= TABLE["fully"][n]


def test_count_table_columns():
    t0 = count_table(0)
    assert [t0.rows[k][0] for k in FIGURE_KINDS] == [1, 1, 0, 0, 1, 1]
    t2 = count_table(2)
    assert t2.rows["polydiagonal"] == [1, 2, 6]
    assert t2.rows["evenly"] == [1, 1, 2]
    assert all(t2.cross_checked.values())


def test_table_emitters():
    t = count_table(2)
    md = table_to_markdown(t)
    csv = table_to_csv(t)
    assert "| polydiagonal | p | 1 | 2 | 6 | ok |" in md
    assert "polydiagonal,1,2,6,ok" in csv
    assert len(csv.strip().splitlines()) == 1 + len(FIGURE_KINDS)


def test_all_kinds_table():
    t = count_table(4, kinds=KINDS)
    assert t.rows["freely_evenly"] == [1, 0, 1, 0, 6]
    assert all(t.cross_checked.values())
