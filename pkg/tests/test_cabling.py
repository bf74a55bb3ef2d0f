from hypothesis import given, settings, strategies as st

from cocycle_lab.annular import AnnularDiagram
from cocycle_lab.cabling import (LONG_FIG8, LONG_TREFOIL, braid_events,
                                 closed_cable, full_twist_word,
                                 insert_local_knot, long_events, n_cable,
                                 n_curl, normalize_w1)
from cocycle_lab.gauss import v2, w1


def test_braid_events_signs():
    evs = braid_events([1, -2, 3])
    assert [(e.pos, e.over) for e in evs] == [(1, '+'), (2, '-'), (3, '+')]


def test_full_twist_word_length():
    assert full_twist_word(2) == [1, 1]
    assert len(full_twist_word(4)) == 12


def test_cable_crossing_count():
    base = long_events(LONG_TREFOIL)
    cabled, cid_map = n_cable(base, 3)
    xs = [e for e in cabled if e.kind == 'X']
    assert len(xs) == 3 * 9
    assert all(len(ids) == 9 for ids in cid_map.values())


def test_cable_preserves_over_flags():
    base = long_events(LONG_FIG8)
    cabled, cid_map = n_cable(base, 2)
    flags = {e.cid: e.over for e in cabled if e.kind == 'X'}
    for orig in base:
        if orig.kind == 'X':
            assert all(flags[c] == orig.over for c in cid_map[orig.cid])


def test_closed_cable_is_class_n():
    for n in (1, 2, 3):
        # the permutation braid joins the strands into one knot
        word = list(range(1, n))
        d = closed_cable(braid_events(word), long_events(LONG_TREFOIL), n)
        assert d.gauss().homology_class == n


def test_n_curl_shape():
    evs = n_curl(2)
    assert [e.kind for e in evs] == ['U', 'U', 'X', 'X', 'X', 'X', 'A', 'A']
    assert all(e.over == '+' for e in evs if e.kind == 'X')
    # the cabled kink closes up against a cable: width returns to start
    assert sum(e.delta for e in evs) == 0


def test_normalize_w1_hits_target():
    for target in (-2, 0, 1, 3):
        text = normalize_w1(LONG_TREFOIL, target)
        g = closed_cable([], long_events(text), 1).gauss()
        assert w1(g) == target


def test_normalize_w1_keeps_the_knot():
    text = normalize_w1(LONG_TREFOIL, 4)
    g = closed_cable([], long_events(text), 1).gauss()
    assert v2(g) == 1


def test_insert_local_knot_adds_v2():
    base = long_events(LONG_TREFOIL)
    spliced = insert_local_knot(base, 1, 1, LONG_FIG8)
    g = closed_cable([], spliced, 1).gauss()
    # connected sum adds degree-two invariants: 1 + (-1)
    assert v2(g) == 0


@given(st.integers(2, 4))
@settings(max_examples=3, deadline=None)
def test_full_twist_closure_of_unknot_cable(n):
    word = list(range(1, n)) + full_twist_word(n)
    d = closed_cable(braid_events(word), long_events(""), n)
    assert d.gauss().homology_class == n
