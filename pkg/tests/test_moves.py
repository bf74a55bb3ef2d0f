import pytest
from hypothesis import assume, given, settings, strategies as st

from cocycle_lab.annular import MorseEvent
from cocycle_lab.cabling import (LONG_TREFOIL, braid_events, closed_cable,
                                 long_events)
from cocycle_lab.moves import (Movie, MoveError, R1Create, R1Delete, R2Create,
                               R2Delete, R3, RayShift, Rearrange,
                               canonical_gauss_key, r3_triple, rearrange_to)


def trefoil_ring():
    return closed_cable([], long_events(LONG_TREFOIL), 1)


def two_cable():
    return closed_cable(braid_events([1]), long_events(LONG_TREFOIL), 2)


def test_r1_create_delete_roundtrip():
    d = trefoil_ring()
    key = canonical_gauss_key(d.gauss())
    for variant in ('above', 'below'):
        for over in '+-':
            d2 = R1Create(0, 1, over, variant).apply(d)
            assert len(d2.events) == len(d.events) + 3
            d3 = R1Delete(0).apply(d2)
            assert canonical_gauss_key(d3.gauss()) == key


def test_r1_delete_needs_a_kink():
    with pytest.raises(MoveError):
        R1Delete(0).apply(trefoil_ring())


def test_r2_create_delete_roundtrip():
    d = two_cable()
    for over in '+-':
        d2 = R2Create(1, 1, over).apply(d)
        xs = [e for e in d2.events[1:3]]
        assert {e.over for e in xs} == {'+', '-'}
        d3 = R2Delete(1).apply(d2)
        assert canonical_gauss_key(d3.gauss()) == canonical_gauss_key(d.gauss())


def test_r2_delete_rejects_parallel_pair():
    d = trefoil_ring()
    slot = next(i for i, e in enumerate(d.events) if e.kind == 'X')
    with pytest.raises(MoveError):
        R2Delete(slot).apply(d)


def test_r3_needs_pattern():
    d = trefoil_ring()
    assert r3_triple(d.events, 0) is None
    with pytest.raises(MoveError):
        R3(0).apply(d)


def test_r3_is_involutive_on_the_planar_shadow():
    # build a braid whose middle letters form a triple point pattern
    d = closed_cable(braid_events([1, 2, 1, 2]), long_events(""), 3)
    slot = 0
    assert r3_triple(d.events, slot)
    d2 = R3(slot).apply(d)
    d3 = R3(slot).apply(d2)
    assert [(e.kind, e.pos, e.over) for e in d3.events] \
        == [(e.kind, e.pos, e.over) for e in d.events]


def test_ray_shift_roundtrip():
    d = two_cable()
    d2 = RayShift(1).apply(d)
    d3 = RayShift(-1).apply(d2)
    assert d3.events == d.events and d3.w0 == d.w0


def test_rearrange_validates_extensionally():
    d = two_cable()
    # swapping two events with overlapping supports changes the knot
    evs = list(d.events)
    i = next(i for i in range(len(evs) - 1)
             if evs[i].kind == 'X' and evs[i + 1].kind == 'X'
             and abs(evs[i].pos - evs[i + 1].pos) == 1)
    bad = evs[:i] + [evs[i + 1], evs[i]] + evs[i + 2:]
    with pytest.raises(MoveError):
        rearrange_to(bad, d.w0).apply(d)


def test_rearrange_allows_distant_swap():
    d = two_cable()
    evs = list(d.events)
    i = next(i for i in range(len(evs) - 1)
             if evs[i].kind == 'X' and evs[i + 1].kind == 'X'
             and abs(evs[i].pos - evs[i + 1].pos) >= 2)
    good = evs[:i] + [evs[i + 1], evs[i]] + evs[i + 2:]
    d2 = rearrange_to(good, d.w0).apply(d)
    assert len(d2.events) == len(d.events)


def test_movie_closure_detection():
    d = two_cable()
    open_movie = Movie(d, [R2Create(0, 1, '+')])
    assert not open_movie.is_closed()
    closed = Movie(d, [R2Create(0, 1, '+'), R2Delete(0)])
    assert closed.is_closed()


@given(st.lists(st.sampled_from([1, -1, 2, -2]), min_size=1, max_size=6))
@settings(max_examples=40, deadline=None)
def test_braid_closures_validate_when_connected(word):
    perm = list(range(3))
    for g in word:
        i = abs(g) - 1
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    seen, t = set(), 0
    while t not in seen:
        seen.add(t)
        t = perm[t]
    assume(len(seen) == 3)
    d = closed_cable(braid_events(word), long_events(""), 3)
    assert d.widths() == [3] * len(d.events)


@given(st.integers(0, 3), st.sampled_from('+-'), st.sampled_from(['above', 'below']))
@settings(max_examples=30, deadline=None)
def test_kink_roundtrip_random_slots(slot, over, variant):
    d = trefoil_ring()
    try:
        d2 = R1Create(slot, 1, over, variant).apply(d)
    except MoveError:
        return
    d3 = R1Delete(slot).apply(d2)
    assert canonical_gauss_key(d3.gauss()) == canonical_gauss_key(d.gauss())
