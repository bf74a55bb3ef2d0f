import pytest

from cocycle_lab.cabling import (LONG_FIG8_W1, LONG_TREFOIL, LONG_TORUS25,
                                 normalize_w1)
from cocycle_lab.cocycle import evaluate, evaluate_all
from cocycle_lab.loops import (PlannerError, pairing, push_full_twist_loop,
                               push_loop, rotation_loop, scan_path)
from cocycle_lab.moves import verify_movie

TREFOIL1 = normalize_w1(LONG_TREFOIL, 1)


def test_push_loop_is_closed():
    movie = push_loop([1], TREFOIL1, 2)
    assert movie.is_closed()


def test_push_loop_verifies_semi_regular():
    verify_movie(push_loop([1], TREFOIL1, 2), mode='semi-regular')


def test_rotation_loop_is_closed():
    assert rotation_loop([1], TREFOIL1, 2).is_closed()


def test_scan_path_matches_rotation_value():
    n = 2
    rot = evaluate(rotation_loop([1], TREFOIL1, n), 1, n)
    scan = evaluate(scan_path([1], TREFOIL1, n), 1, n)
    assert rot == scan


def test_full_twist_loop_is_closed():
    assert push_full_twist_loop([1], TREFOIL1, 2).is_closed()


def test_unknot_loops_vanish():
    assert evaluate_all(push_loop([1], "", 2), 2) == {1: 0}
    assert evaluate_all(rotation_loop([1], "", 2), 2) == {1: 0}


def test_push_values_do_not_depend_on_parameterisation_details():
    # the same loop built twice gives the same movie
    a = push_loop([1], TREFOIL1, 2)
    b = push_loop([1], TREFOIL1, 2)
    assert [type(m).__name__ for m in a.moves] == [type(m).__name__ for m in b.moves]


def test_pairing_examples():
    assert evaluate_all(pairing("", TREFOIL1, 2), 2) == {1: 1}
    assert evaluate_all(pairing("", "", 2), 2) == {1: 0}


def test_pairing_rejects_uncabled_mover():
    with pytest.raises(PlannerError):
        pairing(LONG_TREFOIL, "", 2)


def test_three_cable_push_runs():
    movie = push_loop([1, 2], normalize_w1(LONG_TREFOIL, 1), 3)
    assert movie.is_closed()
    values = evaluate_all(movie, 3)
    assert set(values) == {1, 2}


def test_fig8_fixture_framing():
    movie = rotation_loop([1], LONG_FIG8_W1, 2)
    assert movie.is_closed()
