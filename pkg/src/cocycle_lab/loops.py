"""Transport loops: pushing a braid tangle once around the annulus.

The class-n diagrams here all have the shape [tangle][n-cable of a long
knot word], possibly followed by a full twist.  A transport loop slides
the tangle (or the twist) along the satellite once around the core and
back to its slot.  The slide is compiled move by move: the tangle hops
over strand-disjoint events as plain rearrangements, turns around
cup/cap families by a reflection, crosses each n*n crossing block by a
run of exchanges and triple point moves, and crosses the ray by shifts.

The companion circuit of the underlying long word dictates the order of
these encounters; it is simulated directly on the uncabled word.
"""

from __future__ import annotations

from dataclasses import dataclass

from .annular import AnnularDiagram, MorseEvent
from .cabling import braid_events, full_twist_word, long_events, n_cable, renumber
from .moves import (Exchange, Movie, MoveError, R3, RayShift, Rearrange,
                    rearrange_to, r3_triple)


class PlannerError(RuntimeError):
    pass


def _other(flag):
    return '-' if flag == '+' else '+'


# ---------------------------------------------------------------------------
# Companion circuit of a long knot word

def companion_itinerary(events, start=None):
    """Encounter sequence of the long knot circuit through its own word.

    The state is (slot, strand position, direction); slot i sits between
    events i-1 and i.  Yields records referring to event indices:

        ('hop', i)            strand-disjoint passage
        ('block', i, role)    crossing passage, role 'lower'/'upper'
        ('turn', i, role)     reversal at a cap (forward) or cup (backward)

    The walk starts just after the ray on the incoming strand and stops
    on reaching the ray again, in either direction.
    """
    m = len(events)
    if start is None:
        start = (0, 1, 1)
    t, p, d = start
    guard = 0
    while True:
        guard += 1
        if guard > 100 * (m + 1) + 100:
            raise PlannerError("companion circuit does not close")
        if d == 1 and t == m:
            return
        if d == -1 and t == 0:
            return
        i_ev = t if d == 1 else t - 1
        ev = events[i_ev]
        i = ev.pos
        if ev.kind == 'X':
            if p == i:
                yield ('block', i_ev, 'lower')
                p = i + 1
            elif p == i + 1:
                yield ('block', i_ev, 'upper')
                p = i
            else:
                yield ('hop', i_ev)
            t += d
        elif ev.kind == 'U':
            if d == 1:
                yield ('hop', i_ev)
                if p >= i:
                    p += 2
                t += 1
            else:
                if p == i:
                    yield ('turn', i_ev, 'lower')
                    p, d = i + 1, 1
                elif p == i + 1:
                    yield ('turn', i_ev, 'upper')
                    p, d = i, 1
                else:
                    yield ('hop', i_ev)
                    if p > i + 1:
                        p -= 2
                    t -= 1
        else:  # cap
            if d == 1:
                if p == i:
                    yield ('turn', i_ev, 'lower')
                    p, d = i + 1, -1
                elif p == i + 1:
                    yield ('turn', i_ev, 'upper')
                    p, d = i, -1
                else:
                    yield ('hop', i_ev)
                    if p > i + 1:
                        p -= 2
                    t += 1
            else:
                yield ('hop', i_ev)
                if p >= i:
                    p += 2
                t -= 1


# ---------------------------------------------------------------------------
# Cabled word as a unit list

@dataclass
class _Unit:
    kind: str       # 'mover', 'tangle', 'cup', 'cap', 'block'
    orig: int       # index of the source event in the long word, or -1
    length: int
    q: int          # base strand position of the unit, 0 if untracked


def _cable_units(levs, n, orig_offset=0):
    units = []
    for i, ev in enumerate(levs):
        q = n * (ev.pos - 1) + 1
        kind = {'U': 'cup', 'A': 'cap', 'X': 'block'}[ev.kind]
        length = n if ev.kind in 'UA' else n * n
        units.append(_Unit(kind, i + orig_offset, length, q))
    return units


class _Transport:
    """Emits moves while keeping the unit decomposition in sync."""

    def __init__(self, diagram, units, mover_index, b, d):
        self.cur = diagram
        self.n = diagram.n
        self.units = units
        self.mi = mover_index
        self.b = b              # base strand position of the mover bundle
        self.d = d              # +1 rightward along the word
        self.moves = []

    def emit(self, mv):
        self.cur = mv.apply(self.cur)
        self.moves.append(mv)

    def slot_of(self, ui):
        return sum(u.length for u in self.units[:ui])

    def mover(self):
        return self.units[self.mi]

    def mover_events(self):
        s = self.slot_of(self.mi)
        return list(self.cur.events[s:s + self.mover().length])

    def _swap_units(self, left, right, new_left_events, new_right_events):
        """Rearrange exchanging two adjacent units, with rewritten events."""
        s = self.slot_of(left)
        evs = list(self.cur.events)
        tail = s + len(new_left_events) + len(new_right_events)
        evs[s:tail] = new_right_events + new_left_events
        self.emit(rearrange_to(evs, self.cur.w0))
        self.units[left], self.units[right] = self.units[right], self.units[left]

    # -- elementary compiled steps ------------------------------------

    def hop(self):
        other = self.mi + self.d
        v = self.units[other]
        span = 2 * self.n
        mov = self.mover_events()
        if v.kind == 'cup':
            shift = 2 * self.n if self.d == 1 else -2 * self.n
            cut = v.q if self.d == 1 else v.q + span
        elif v.kind == 'cap':
            shift = -2 * self.n if self.d == 1 else 2 * self.n
            cut = v.q + span if self.d == 1 else v.q
        else:
            shift, cut = 0, 0
        if v.kind == 'block' and not (self.b + self.n <= v.q or self.b >= v.q + span):
            raise PlannerError("hop across a block the mover touches")

        def adj(p):
            if v.kind == 'cup':
                return p + shift if p >= cut else p
            if v.kind == 'cap':
                return p + shift if p >= cut else p
            return p

        new_mov = [MorseEvent(e.kind, adj(e.pos), e.over, e.cid) for e in mov]
        vs = self.slot_of(other)
        vevs = list(self.cur.events[vs:vs + v.length])
        if self.d == 1:
            self._swap_units(self.mi, other, new_left_events=new_mov,
                             new_right_events=vevs)
        else:
            self._swap_units(other, self.mi, new_left_events=vevs,
                             new_right_events=new_mov)
        self.b = adj(self.b)
        self.mi = other

    def turn(self):
        other = self.mi + self.d
        v = self.units[other]
        if v.kind != ('cap' if self.d == 1 else 'cup'):
            raise PlannerError(f"turn into {v.kind}")
        q, n = v.q, self.n
        if self.b not in (q, q + n):
            raise PlannerError("turn from a stray bundle")
        mov = self.mover_events()
        new_mov = [MorseEvent('X', 2 * q + 2 * n - 2 - e.pos, e.over, e.cid)
                   for e in reversed(mov)]
        s = self.slot_of(self.mi)
        evs = list(self.cur.events)
        evs[s:s + len(mov)] = new_mov
        self.emit(rearrange_to(evs, self.cur.w0))
        self.b = q + n if self.b == q else q
        self.d = -self.d

    def block_pass(self, role):
        other = self.mi + self.d
        v = self.units[other]
        if v.kind != 'block':
            raise PlannerError(f"block pass into {v.kind}")
        n, q = self.n, v.q
        want_lower = role == 'lower'
        if self.b != (q if want_lower else q + n):
            raise PlannerError("mover bundle does not match its circuit role")
        # choose the factorisation of the block the slide threads through
        if (self.d == 1) == want_lower:
            self._refactor_block(other, 'runs')
        else:
            self._refactor_block(other, 'rows')
        mov_slot = self.slot_of(self.mi)
        k = self.mover().length
        if self.d == 1:
            for idx in range(k - 1, -1, -1):
                self._thread_right(mov_slot + idx, v.length)
        else:
            for idx in range(k):
                self._thread_left(mov_slot + idx, v.length)
        self.units[self.mi], self.units[other] = self.units[other], self.units[self.mi]
        self.mi = other
        self.b = q + n if want_lower else q

    def _thread_right(self, slot, count):
        target = slot + count
        while slot < target:
            evs = self.cur.events
            if abs(evs[slot].pos - evs[slot + 1].pos) >= 2:
                self.emit(Exchange(slot))
                slot += 1
            else:
                self.emit(R3(slot))
                slot += 2
        if slot != target:
            raise PlannerError("threading overshot the block")

    def _thread_left(self, slot, count):
        target = slot - count
        while slot > target:
            evs = self.cur.events
            if abs(evs[slot].pos - evs[slot - 1].pos) >= 2:
                self.emit(Exchange(slot - 1))
                slot -= 1
            else:
                self.emit(R3(slot - 2))
                slot -= 2
        if slot != target:
            raise PlannerError("threading overshot the block")

    def _refactor_block(self, ui, style):
        v = self.units[ui]
        n, q = self.n, v.q
        s = self.slot_of(ui)
        evs = list(self.cur.events[s:s + v.length])
        labels = {q + k: ('A', k + 1) for k in range(n)}
        labels.update({q + n + k: ('B', k + 1) for k in range(n)})
        pair_cid = {}
        over = evs[0].over
        for e in evs:
            a, b = labels[e.pos], labels[e.pos + 1]
            pair_cid[frozenset((a, b))] = e.cid
            labels[e.pos], labels[e.pos + 1] = b, a
            over = e.over
        out = []
        if style == 'rows':
            for r in range(n, 0, -1):
                for k in range(n):
                    cid = pair_cid[frozenset((('A', r), ('B', k + 1)))]
                    out.append(MorseEvent('X', (q - 1) + r + k, over, cid))
        else:
            for j in range(1, n + 1):
                for step, pos in enumerate(range(q + n + j - 2, q + j - 2, -1)):
                    cid = pair_cid[frozenset((('B', j), ('A', n - step)))]
                    out.append(MorseEvent('X', pos, over, cid))
        if out != evs:
            whole = list(self.cur.events)
            whole[s:s + v.length] = out
            self.emit(rearrange_to(whole, self.cur.w0))

    def ray_pass(self):
        k = self.mover().length
        if self.d == 1:
            if self.mi != len(self.units) - 1:
                raise PlannerError("ray pass away from the word end")
            for _ in range(k):
                self.emit(RayShift(-1))
            self.units.insert(0, self.units.pop())
            self.mi = 0
        else:
            if self.mi != 0:
                raise PlannerError("ray pass away from the word start")
            for _ in range(k):
                self.emit(RayShift(1))
            self.units.append(self.units.pop(0))
            self.mi = len(self.units) - 1

    def normalize_blocks(self):
        for ui, u in enumerate(self.units):
            if u.kind == 'block':
                self._refactor_block(ui, 'rows')

    # -- driver -------------------------------------------------------

    def follow(self, levs, itinerary):
        for rec in itinerary:
            other = self.units[self.mi + self.d]
            if other.orig != rec[1]:
                raise PlannerError(
                    f"desync: facing unit {other.orig}, circuit says {rec}")
            if rec[0] == 'hop':
                self.hop()
            elif rec[0] == 'turn':
                self.turn()
            else:
                self.block_pass(rec[2])


# ---------------------------------------------------------------------------
# The loops

def push_loop(tangle_word, long_text, n):
    """Slide the closing braid tangle once around the satellite.

    tangle_word is a braid word (signed generator indices) on the n
    cable strands.  The loop starts and ends at the diagram
    [tangle][n-cable], returning to it on the nose.
    """
    levs = long_events(long_text)
    tangle = braid_events(tangle_word)
    cable, _ = n_cable(levs, n)
    events = renumber(list(tangle) + cable)
    start = AnnularDiagram(n, events, w0=n)

    units = [_Unit('mover', -1, len(tangle), 1)] + _cable_units(levs, n)
    tr = _Transport(start, units, 0, 1, 1)
    tr.follow(levs, companion_itinerary(levs))
    tr.ray_pass()
    tr.normalize_blocks()
    shape = [(e.kind, e.pos, e.over) for e in start.events]
    if [(e.kind, e.pos, e.over) for e in tr.cur.events] != shape:
        raise PlannerError("push loop does not close")
    return Movie(start, tr.moves)


def _twist_base(tangle_word, long_text, n):
    levs = long_events(long_text)
    tangle = braid_events(tangle_word)
    cable, _ = n_cable(levs, n)
    twist = braid_events([g for g in full_twist_word(n)])
    events = renumber(list(tangle) + cable + twist)
    start = AnnularDiagram(n, events, w0=n)
    units = ([_Unit('tangle', -1, len(tangle), 1)] + _cable_units(levs, n)
             + [_Unit('mover', -1, len(twist), 1)])
    return levs, start, units


def _relabel_through_tangle(tr, forward):
    """Slide the full twist across the closing tangle without moves.

    Works when tangle and twist concatenate to a power of the same
    generator block, so the word admits the shifted split.
    """
    ti = tr.mi + (1 if forward else -1)
    tu = tr.units[ti]
    if tu.kind != 'tangle':
        raise PlannerError("twist is not facing the tangle")
    s = min(tr.slot_of(tr.mi), tr.slot_of(ti))
    k = tu.length + tr.mover().length
    pair = tr.cur.events[s:s + k]
    if len({(e.kind, e.pos, e.over) for e in pair}) != 1:
        raise PlannerError("tangle does not absorb the twist by resplitting")
    m = tr.mover().length
    if forward:
        tr.units[ti] = _Unit('mover', -1, m, tu.q)
        tr.units[tr.mi] = _Unit('tangle', -1, tu.length, tu.q)
    else:
        tr.units[ti] = _Unit('mover', -1, m, tu.q)
        tr.units[tr.mi] = _Unit('tangle', -1, tu.length, tu.q)
    tr.mi = ti


def _twist_slide(tangle_word, long_text, n, forward):
    levs, start, units = _twist_base(tangle_word, long_text, n)
    m = len(levs)
    tr = _Transport(start, units, len(units) - 1, 1, 1 if forward else -1)
    if forward:
        tr.ray_pass()
        _relabel_through_tangle(tr, forward=True)
        # facing the cable now, still moving rightward
        tr.follow(levs, companion_itinerary(levs))
    else:
        tr.follow(levs, companion_itinerary(levs, start=(m, 1, -1)))
        _relabel_through_tangle(tr, forward=False)
        tr.ray_pass()
    return Movie(start, tr.moves), tr


def rotation_loop(tangle_word, long_text, n):
    """Rotation of the solid torus around its core, as a loop of
    diagrams: the full twist representing the framing curl slides once
    around the satellite against the orientation of the core."""
    movie, _ = _twist_slide(tangle_word, long_text, n, forward=False)
    return movie


def push_full_twist_loop(tangle_word, long_text, n):
    """The inverse rotation: the full twist is pushed once around along
    the core orientation."""
    movie, _ = _twist_slide(tangle_word, long_text, n, forward=True)
    return movie


def pairing(left_text, right_text, n):
    """Pairing of two long knots: the permutation-braid-twisted n-cable
    of the left knot is pushed once through the n-cable of the right.

    The transport planner moves braid-shaped bundles only, so the left
    cable must carry no cups or caps; the left word is then itself a
    braid and the mover is sigma_1...sigma_{n-1} followed by its cable.
    A one-crossing left word would need width 2, hence the only long
    knot available here is the unknot, and the mover degenerates to the
    permutation braid alone.
    """
    if n < 2:
        raise PlannerError("pairing needs n >= 2")
    if long_events(left_text):
        raise PlannerError("left cable is not a braid, cannot be transported")
    return push_loop(list(range(1, n)), right_text, n)


def scan_path(tangle_word, long_text, n):
    """The open half of the rotation loop: the full twist sweeps through
    the cable from its far end back to the tangle, without crossing the
    ray.  Not closed; its value already equals the rotation value."""
    levs, start, units = _twist_base(tangle_word, long_text, n)
    tr = _Transport(start, units, len(units) - 1, 1, -1)
    tr.follow(levs, companion_itinerary(levs, start=(len(levs), 1, -1)))
    return Movie(start, tr.moves)
