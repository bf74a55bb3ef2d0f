from fractions import Fraction

import pytest

from cocycle_lab.cabling import LONG_TREFOIL, normalize_w1
from cocycle_lab.cocycle import (CocycleError, classify_r3, evaluate,
                                 evaluate_all, interpolation_polynomial,
                                 polynomial_text)
from cocycle_lab.loops import push_loop
from cocycle_lab.moves import R3


def trefoil_push():
    return push_loop([1], normalize_w1(LONG_TREFOIL, 1), 2)


def test_parameter_range_enforced():
    movie = trefoil_push()
    with pytest.raises(CocycleError):
        evaluate(movie, 0, 2)
    with pytest.raises(CocycleError):
        evaluate(movie, 2, 2)


def test_report_rows_cover_every_triple_move():
    movie = trefoil_push()
    rep = evaluate(movie, 1, 2, report=True)
    r3_count = sum(isinstance(m, R3) for m in movie.moves)
    assert len(rep.rows) == r3_count
    assert sum(r.contrib for r in rep.rows) == rep.value


def test_classification_agrees_with_marks():
    movie = trefoil_push()
    for before, mv, after in movie.steps():
        if not isinstance(mv, R3):
            continue
        t = classify_r3(before, mv.slot, 2)
        assert t.sign in (-1, 1)
        assert set(t.marks) == {'d', 'hm', 'ml'}
        assert all(0 <= m <= 2 for m in t.marks.values())


def test_global_type_r_needs_mark_balance():
    movie = trefoil_push()
    n = 2
    for before, mv, after in movie.steps():
        if not isinstance(mv, R3):
            continue
        t = classify_r3(before, mv.slot, n)
        balanced = t.marks['hm'] + t.marks['ml'] - t.marks['d'] == n
        assert (t.global_type == 'r') == balanced


def test_interpolation_exact():
    # values of 2a^2 - 3a + 1 at a = 1..3
    values = {a: 2 * a * a - 3 * a + 1 for a in (1, 2, 3)}
    assert interpolation_polynomial(values) == [
        Fraction(1), Fraction(-3), Fraction(2)]


def test_interpolation_constant():
    assert interpolation_polynomial({1: 5, 2: 5, 3: 5}) == [Fraction(5)]


def test_polynomial_text():
    assert polynomial_text([Fraction(1), Fraction(-3), Fraction(2)]) \
        == "1 + -3*a + 2*a^2"
    assert polynomial_text([Fraction(0)]) == "0"


def test_evaluate_all_covers_parameters():
    movie = push_loop([1, 2], normalize_w1(LONG_TREFOIL, 1), 3)
    values = evaluate_all(movie, 3)
    assert sorted(values) == [1, 2]
