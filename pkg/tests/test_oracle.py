import pytest

from overq.series import EXACT
from overq.eta import opt_gf, overpartition_gf
from overq.oracle import (
    ENUMERATE_MAX_N,
    ENUMERATE_MAX_T,
    count_opt_tuples,
    count_overpartition_tuples,
    enumerate_tiny,
)


def test_single_color_low_counts():
    table = count_overpartition_tuples(1, 4)
    assert table.counts == (1, 2, 4, 8, 14)
    assert table.family == "overpartition-tuples"
    assert table.parameter == 1
    assert table.upto == 4


def test_zero_colors():
    table = count_overpartition_tuples(0, 6)
    assert table.counts == (1, 0, 0, 0, 0, 0, 0)


def test_two_colors_weight_one():
    # part 1 or overlined 1, in either coordinate
    assert count_overpartition_tuples(2, 1).count(1) == 4


def test_odd_part_single_color():
    assert count_opt_tuples(1, 3).counts == (1, 2, 2, 4)


def test_odd_part_weight_two_excludes_even_part():
    assert count_opt_tuples(1, 2).count(2) == 2  # 1+1 and overlined-1+1 only


def test_opt_six_colors_weight_two():
    # compositions: one coordinate takes weight 2 (6 ways each 2) or two take
    # weight 1 (C(6,2) pairs, 2 choices each): 6*2 + 15*2*2 = 72
    assert count_opt_tuples(6, 2).count(2) == 6 * 2 + 15 * 4


def test_rejects_negative_arguments():
    with pytest.raises(ValueError):
        count_overpartition_tuples(-1, 5)
    with pytest.raises(ValueError):
        count_opt_tuples(1, -5)


# --- exhaustive enumeration ----------------------------------------------------


def test_enumerate_tiny_basics():
    assert enumerate_tiny(1, 3) == 8
    assert enumerate_tiny(2, 2) == 12
    for t in range(ENUMERATE_MAX_T + 1):
        assert enumerate_tiny(t, 0) == 1


def test_enumerate_tiny_bounds():
    with pytest.raises(ValueError):
        enumerate_tiny(ENUMERATE_MAX_T + 1, 2)
    with pytest.raises(ValueError):
        enumerate_tiny(1, ENUMERATE_MAX_N + 1)
    with pytest.raises(ValueError):
        enumerate_tiny(-1, 0)


def test_enumeration_agrees_with_dp_everywhere():
    for t in range(ENUMERATE_MAX_T + 1):
        table = count_overpartition_tuples(t, ENUMERATE_MAX_N)
        for n in range(ENUMERATE_MAX_N + 1):
            assert enumerate_tiny(t, n) == table.count(n), (t, n)


# --- structural invariants -------------------------------------------------------


def test_tuple_counts_convolve():
    upto = 40
    tables = {t: count_overpartition_tuples(t, upto) for t in range(7)}
    for t1 in range(4):
        for t2 in range(4):
            combined = tables[t1 + t2]
            for n in range(upto + 1):
                conv = sum(
                    tables[t1].count(j) * tables[t2].count(n - j) for j in range(n + 1)
                )
                assert conv == combined.count(n), (t1, t2, n)


def test_counts_match_generating_functions():
    for t in range(7):
        table = count_overpartition_tuples(t, 60)
        series = overpartition_gf(t, EXACT, 61)
        assert list(table.counts) == list(series.coeffs)
        table = count_opt_tuples(t, 60)
        series = opt_gf(t, EXACT, 61)
        assert list(table.counts) == list(series.coeffs)
