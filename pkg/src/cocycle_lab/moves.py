"""Elementary moves on annular Morse words, and movies built from them.

A movie is a finite sequence of moves applied to a start diagram.  The
move set: the three Reidemeister moves (kink create/delete, tangency
create/delete, triple point), sliding an event across the ray, and a
planar rearrangement that may reorder events arbitrarily as long as the
marked Gauss diagram is unchanged.  The last one covers everything a
generic isotopy of the annulus does between Reidemeister strata: height
exchanges of distant events, slides past cups and caps, U-turns of a
tangle around a turnback, zigzag cancellation.

Slots index the gaps of the cyclic event word: slot t sits just before
event t, slot 0 at the ray.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .annular import AnnularDiagram, MorseEvent, DiagramError


class MoveError(ValueError):
    def __init__(self, code, message):
        super().__init__(f"{code}: {message}")
        self.code = code


def _other(flag):
    return '-' if flag == '+' else '+'


@dataclass(frozen=True)
class Move:
    def apply(self, diagram):
        raise NotImplementedError


@dataclass(frozen=True)
class R1Create(Move):
    """Insert a kink on the strand at the given position.

    variant 'above' loops the strand upward (the loop occupies positions
    pos+1, pos+2), 'below' loops it downward.  Together with the over
    flag this realises all four kink kinds.
    """

    slot: int
    pos: int
    over: str
    variant: str = 'above'
    cid: int = 0

    def kink_events(self):
        if self.variant == 'above':
            return [MorseEvent('U', self.pos + 1),
                    MorseEvent('X', self.pos + 1, self.over, self.cid),
                    MorseEvent('A', self.pos)]
        if self.variant == 'below':
            return [MorseEvent('U', self.pos),
                    MorseEvent('X', self.pos, self.over, self.cid),
                    MorseEvent('A', self.pos + 1)]
        raise MoveError('E_VARIANT', f"unknown kink variant {self.variant!r}")

    def apply(self, diagram):
        cid = self.cid if self.cid > 0 else diagram.max_cid() + 1
        piece = R1Create(self.slot, self.pos, self.over, self.variant, cid)
        evs = list(diagram.events)
        evs[self.slot:self.slot] = piece.kink_events()
        return AnnularDiagram(diagram.n, evs, w0=diagram.w0)

    def created_cid(self, diagram):
        return self.cid if self.cid > 0 else diagram.max_cid() + 1


def _match_kink(events, slot):
    """Identify a kink word at events[slot:slot+3]; return its crossing."""
    if slot + 3 > len(events):
        return None
    a, b, c = events[slot:slot + 3]
    if a.kind != 'U' or b.kind != 'X' or c.kind != 'A':
        return None
    if a.pos == b.pos and a.pos == c.pos + 1:
        return b  # above: U(p+1) X(p+1) A(p)
    if a.pos == b.pos and c.pos == a.pos + 1:
        return b  # below: U(p) X(p) A(p+1)
    return None


@dataclass(frozen=True)
class R1Delete(Move):
    slot: int

    def apply(self, diagram):
        b = _match_kink(diagram.events, self.slot)
        if b is None:
            raise MoveError('E_R1', f"no kink at slot {self.slot}")
        evs = list(diagram.events)
        del evs[self.slot:self.slot + 3]
        return AnnularDiagram(diagram.n, evs, w0=diagram.w0)

    def deleted_cid(self, diagram):
        b = _match_kink(diagram.events, self.slot)
        if b is None:
            raise MoveError('E_R1', f"no kink at slot {self.slot}")
        return b.cid


@dataclass(frozen=True)
class R2Create(Move):
    """Push two adjacent strands across each other: insert X(pos) X(pos)
    with opposite over flags.  over_first is the flag of the first one."""

    slot: int
    pos: int
    over_first: str
    cid1: int = 0
    cid2: int = 0

    def apply(self, diagram):
        c1 = self.cid1 if self.cid1 > 0 else diagram.max_cid() + 1
        c2 = self.cid2 if self.cid2 > 0 else max(c1, diagram.max_cid()) + 1
        if c1 == c2:
            raise MoveError('E_ID', "tangency needs two distinct ids")
        evs = list(diagram.events)
        evs[self.slot:self.slot] = [
            MorseEvent('X', self.pos, self.over_first, c1),
            MorseEvent('X', self.pos, _other(self.over_first), c2)]
        return AnnularDiagram(diagram.n, evs, w0=diagram.w0)


@dataclass(frozen=True)
class R2Delete(Move):
    slot: int

    def apply(self, diagram):
        evs = diagram.events
        if self.slot + 2 > len(evs):
            raise MoveError('E_R2', "slot out of range")
        a, b = evs[self.slot:self.slot + 2]
        if not (a.kind == 'X' and b.kind == 'X' and a.pos == b.pos
                and a.over == _other(b.over)):
            raise MoveError('E_R2', f"no cancelling pair at slot {self.slot}")
        out = list(evs)
        del out[self.slot:self.slot + 2]
        return AnnularDiagram(diagram.n, out, w0=diagram.w0)


# flag triples whose three strand heights are cyclically ordered instead
# of totally ordered; no triple point move exists through those
_R3_FORBIDDEN = {('+', '-', '+'), ('-', '+', '-')}


def r3_triple(events, slot):
    """The three crossing events of a triple point pattern at slot."""
    if slot + 3 > len(events):
        return None
    a, b, c = events[slot:slot + 3]
    if not all(e.kind == 'X' for e in (a, b, c)):
        return None
    if a.pos != c.pos or abs(a.pos - b.pos) != 1:
        return None
    return a, b, c


@dataclass(frozen=True)
class R3(Move):
    """Slide the middle strand across the crossing of the outer two:
    X(p) X(q) X(p)  ->  X(q) X(p) X(q)  with |p-q| = 1, flags kept in
    reversed event order."""

    slot: int

    def apply(self, diagram):
        trip = r3_triple(diagram.events, self.slot)
        if trip is None:
            raise MoveError('E_R3', f"no triple point pattern at slot {self.slot}")
        a, b, c = trip
        if (a.over, b.over, c.over) in _R3_FORBIDDEN:
            raise MoveError('E_R3', "strand heights are cyclic, move is not planar")
        evs = list(diagram.events)
        evs[self.slot:self.slot + 3] = [
            MorseEvent('X', b.pos, c.over, c.cid),
            MorseEvent('X', a.pos, b.over, b.cid),
            MorseEvent('X', b.pos, a.over, a.cid)]
        return AnnularDiagram(diagram.n, evs, w0=diagram.w0)


@dataclass(frozen=True)
class RayShift(Move):
    """Slide the event next to the ray across it.  direction +1 moves the
    first event of the word to its end, -1 the reverse."""

    direction: int = 1

    def apply(self, diagram):
        evs = list(diagram.events)
        if not evs:
            raise MoveError('E_RAY', "nothing to shift")
        if self.direction == 1:
            out = evs[1:] + evs[:1]
            w0 = diagram.w0 + evs[0].delta
        elif self.direction == -1:
            out = evs[-1:] + evs[:-1]
            w0 = diagram.w0 - evs[-1].delta
        else:
            raise MoveError('E_RAY', "direction must be +1 or -1")
        return AnnularDiagram(diagram.n, out, w0=w0)


@dataclass(frozen=True)
class Exchange(Move):
    """Swap two adjacent crossing events acting on disjoint strand pairs.

    A special case of Rearrange with a constant-time validity check, used
    heavily by the transport planners.
    """

    slot: int

    def apply(self, diagram):
        evs = list(diagram.events)
        if not 0 <= self.slot < len(evs) - 1:
            raise MoveError('E_EXCHANGE', "slot out of range")
        a, b = evs[self.slot], evs[self.slot + 1]
        if a.kind != 'X' or b.kind != 'X' or abs(a.pos - b.pos) < 2:
            raise MoveError('E_EXCHANGE', "events share a strand")
        evs[self.slot], evs[self.slot + 1] = b, a
        return AnnularDiagram(diagram.n, evs, w0=diagram.w0)


@dataclass(frozen=True)
class Rearrange(Move):
    """Replace the whole event word, keeping the marked Gauss diagram.

    Any isotopy of the annulus that crosses no Reidemeister stratum and
    keeps the diagram transverse to the ray acts this way; validity is
    checked extensionally, by comparing Gauss data before and after.
    """

    events: tuple
    w0: int

    def apply(self, diagram):
        out = AnnularDiagram(diagram.n, list(self.events), w0=self.w0)
        g0, g1 = diagram.gauss(), out.gauss()
        if g0.canonical_tokens() != g1.canonical_tokens() or g0.signs != g1.signs:
            raise MoveError('E_PLANAR', "rearrangement changes the Gauss diagram")
        return out


def rearrange_to(events, w0):
    return Rearrange(tuple(events), w0)


# ---------------------------------------------------------------------------
# Movies

def canonical_gauss_key(gd):
    """Gauss data up to rotation and renaming of crossing ids."""
    toks = gd.tokens
    m = len(toks)
    best = None
    for r in range(m):
        names, seq = {}, []
        for i in range(m):
            kind, val = toks[(r + i) % m]
            if kind == 'r':
                seq.append(('r', val))
            else:
                if val not in names:
                    names[val] = len(names)
                seq.append((kind, names[val], gd.signs[val]))
        cand = tuple(seq)
        if best is None or cand < best:
            best = cand
    return best


@dataclass
class Movie:
    """A loop (or path) in the space of class-n diagrams."""

    start: AnnularDiagram
    moves: list = field(default_factory=list)

    def states(self):
        out = [self.start]
        for mv in self.moves:
            out.append(mv.apply(out[-1]))
        return out

    def steps(self):
        """Yield (state_before, move, state_after)."""
        cur = self.start
        for mv in self.moves:
            nxt = mv.apply(cur)
            yield cur, mv, nxt
            cur = nxt

    def final(self):
        cur = self.start
        for mv in self.moves:
            cur = mv.apply(cur)
        return cur

    def is_closed(self):
        return (canonical_gauss_key(self.final().gauss())
                == canonical_gauss_key(self.start.gauss()))

    def reversed(self):
        """The inverse loop.  Only moves with an evident inverse appear in
        generated loops, so this is total on what the package produces."""
        states = self.states()
        out = []
        for st, mv in zip(states, self.moves):
            out.append(_invert(mv, st))
        inv = Movie(states[-1], list(reversed(out)))
        return inv


def _invert(mv, state_before):
    if isinstance(mv, R1Create):
        return R1Delete(mv.slot)
    if isinstance(mv, R1Delete):
        u, x, a = state_before.events[mv.slot:mv.slot + 3]
        variant = 'above' if a.pos == u.pos - 1 else 'below'
        pos = x.pos - 1 if variant == 'above' else x.pos
        return R1Create(mv.slot, pos, x.over, variant, x.cid)
    if isinstance(mv, R2Create):
        return R2Delete(mv.slot)
    if isinstance(mv, R2Delete):
        a, b = state_before.events[mv.slot:mv.slot + 2]
        return R2Create(mv.slot, a.pos, a.over, a.cid, b.cid)
    if isinstance(mv, R3):
        return R3(mv.slot)
    if isinstance(mv, Exchange):
        return Exchange(mv.slot)
    if isinstance(mv, RayShift):
        return RayShift(-mv.direction)
    if isinstance(mv, Rearrange):
        return rearrange_to(state_before.events, state_before.w0)
    raise MoveError('E_INVERT', f"cannot invert {mv!r}")


def verify_movie(movie, mode='semi-regular', require_closed=True):
    """Replay a movie and assert it stays inside the moduli space.

    Checks per state: single knot (traversal), homology class n, no loop
    of negative winding.  Kink crossings must have marking 0; in
    'general' mode marking n is also allowed.  Raises MoveError on the
    first violation, returns the number of states otherwise.
    """
    n = movie.start.n
    allowed_kinks = {0} if mode == 'semi-regular' else {0, n}

    def check_state(st, where):
        g = st.gauss()
        if g.homology_class != n:
            raise MoveError('E_CLASS', f"class {g.homology_class} != {n} {where}")
        ok, witness = st.check_no_negative_loops()
        if not ok:
            raise MoveError('E_NEGLOOP', f"negative loop {witness} {where}")

    check_state(movie.start, "at start")
    count = 1
    for before, mv, after in movie.steps():
        if isinstance(mv, R1Create):
            cid = mv.created_cid(before)
            mark = after.gauss().marking(cid)
            if mark not in allowed_kinks:
                raise MoveError('E_KINK', f"kink of marking {mark} after move {count}")
        if isinstance(mv, R1Delete):
            cid = mv.deleted_cid(before)
            mark = before.gauss().marking(cid)
            if mark not in allowed_kinks:
                raise MoveError('E_KINK', f"kink of marking {mark} at move {count}")
        check_state(after, f"after move {count}")
        count += 1
    if require_closed and not movie.is_closed():
        raise MoveError('E_CLOSED', "movie does not return to its start diagram")
    return count
