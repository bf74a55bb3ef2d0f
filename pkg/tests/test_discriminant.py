import pytest

from cocycle_lab.cabling import (LONG_TREFOIL, braid_events, closed_cable,
                                 long_events, normalize_w1)
from cocycle_lab.cocycle import evaluate_all
from cocycle_lab.discriminant import (GLOBAL_TYPES, HostError,
                                      commutation_loop,
                                      embedded_tangency_loops, meridian_loop,
                                      quad_host, random_contractible_loop,
                                      tangency_host, tangency_loop)
from cocycle_lab.moves import R3, r3_triple


def test_quad_host_has_six_block_crossings():
    host, slot = quad_host(GLOBAL_TYPES[1], (0, 0, 0, 2), 2)
    block = host.events[slot:slot + 6]
    assert all(e.kind == 'X' for e in block)


def test_quad_host_rejects_bad_windings():
    with pytest.raises(HostError):
        quad_host(GLOBAL_TYPES[1], (0, 0, 0, 1), 2)
    with pytest.raises(HostError):
        quad_host((1, 1, 2, 3), (0, 0, 0, 2), 2)


def test_meridian_loop_closes_and_vanishes():
    host, slot = quad_host(GLOBAL_TYPES[3], (1, 0, 0, 1), 2)
    movie = meridian_loop(host, slot)
    assert movie.is_closed()
    assert all(v == 0 for v in evaluate_all(movie, 2).values())


def test_tangency_loop_closes():
    host, slot = tangency_host((1, 2, 3), (0, 0, 2), ('+', '+', '+'), 2)
    movie = tangency_loop(host, slot, '+')
    assert movie.is_closed()
    assert all(v == 0 for v in evaluate_all(movie, 2).values())


def test_embedded_tangency_loops_vanish():
    d = closed_cable(braid_events([1]),
                     long_events(normalize_w1(LONG_TREFOIL, 1)), 2)
    loops = list(embedded_tangency_loops(d, '+'))
    assert loops
    for host, movie in loops:
        assert movie.is_closed()
        assert all(v == 0 for v in evaluate_all(movie, 2).values())


def _state_with_triple():
    from cocycle_lab.loops import push_loop
    movie = push_loop([1], normalize_w1(LONG_TREFOIL, 1), 2)
    for state in movie.states():
        for s in range(len(state.events) - 2):
            if r3_triple(state.events, s):
                return state, s
    raise AssertionError("push movie has no triple point state")


def test_commutation_loop_vanishes():
    d, s = _state_with_triple()
    for far in (0, len(d.events) - 1):
        try:
            movie = commutation_loop(d, s, far, 1, '+')
            movie.final()
        except Exception:
            continue
        assert movie.is_closed()
        assert all(v == 0 for v in evaluate_all(movie, 2).values())
        return
    pytest.skip("no commuting far slot for this fixture")


def test_random_contractible_loops_vanish():
    d = closed_cable(braid_events([1]),
                     long_events(normalize_w1(LONG_TREFOIL, 1)), 2)
    for seed in range(5):
        movie = random_contractible_loop(d, 6, seed)
        assert movie.is_closed()
        assert all(v == 0 for v in evaluate_all(movie, 2).values())


def test_contractible_loop_is_seed_deterministic():
    d = closed_cable(braid_events([1]),
                     long_events(normalize_w1(LONG_TREFOIL, 1)), 2)
    a = random_contractible_loop(d, 6, 11)
    b = random_contractible_loop(d, 6, 11)
    assert [repr(m) for m in a.moves] == [repr(m) for m in b.moves]
