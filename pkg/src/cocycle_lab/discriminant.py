"""Test loops around the discriminant: quadruple point meridians, edge
loops of self-tangency-plus-triple strata, commutation loops, and random
contractible loops.

A quadruple point of four positive branches unfolds into eight triple
point moves.  Its meridian walks the octagon of commutation classes of
reduced words of the half twist on four strands; the walk below was
computed once from that graph and ships as data.

Hosts for the meridians are synthesized from the abstract closure data:
the cyclic order in which the knot visits the four branches, and the
number of times each connecting arc winds around the annulus.
"""

from __future__ import annotations

import random

from .annular import AnnularDiagram, DiagramError, MorseEvent
from .moves import (Exchange, Movie, MoveError, R1Create, R1Delete, R2Create,
                    R2Delete, R3, RayShift, rearrange_to)

# half twist word the meridian starts from, and the walk around the
# octagon: ('B', k) is a triple point move at word offset k, ('C', k) a
# commutation exchange
HALF_TWIST_WORD = (1, 2, 1, 3, 2, 1)
MERIDIAN_WALK = (
    ('B', 0), ('B', 2), ('C', 1), ('C', 4), ('B', 2), ('B', 0), ('C', 2),
    ('B', 3), ('B', 1), ('C', 0), ('C', 3), ('B', 1), ('B', 3), ('C', 2),
)

# the six cyclic orders in which a knot can run through four branches
GLOBAL_TYPES = {
    1: (1, 2, 3, 4), 2: (1, 2, 4, 3), 3: (1, 3, 2, 4),
    4: (1, 3, 4, 2), 5: (1, 4, 2, 3), 6: (1, 4, 3, 2),
}


class HostError(ValueError):
    pass


def _perm_braid(occupants, target_of, cid, out):
    """Sort strands to their target positions by adjacent transpositions,
    emitting positive crossings.  occupants is a list of ids bottom up."""
    want = sorted(occupants, key=lambda s: target_of[s])
    k = len(occupants)
    for goal in range(k):
        sid = want[goal]
        at = occupants.index(sid)
        while at > goal:
            occupants[at], occupants[at - 1] = occupants[at - 1], occupants[at]
            out.append(MorseEvent('X', at, '+', cid))
            cid += 1
            at -= 1
    return cid


def quad_host(order, windings, n):
    """Class-n diagram with a positive quadruple point site.

    order: the four block entry ports in the cyclic order the knot
    visits them.  windings: ray passages of the four connecting arcs, in
    the same order, summing to n.  Returns (diagram, block_slot); the
    six block crossings sit at slots block_slot .. block_slot+5.
    """
    block = [(g, '+') for g in HALF_TWIST_WORD]
    # the half twist reverses the four lowest strands
    return _site_host(order, windings, n, block, (3, 2, 1, 0))


def tangency_host(order, windings, flags, n):
    """Class-n diagram whose site is a self-tangency pair next to a
    triangle: crossings u ubar y z at positions 1 1 2 1, where (u, ubar)
    is the tangency pair and the triangle through u involves y and z.

    order: the three entry ports in visit order.  windings: ray
    passages of the three connecting arcs, summing to n.  flags: the
    over flags (o, f, g) of u, y and z.
    """
    o, f, g = flags
    ob = '-' if o == '+' else '+'
    block = [(1, o), (1, ob), (2, f), (1, g)]
    # net permutation of u ubar y z: a cycle moving the top strand down
    return _site_host(order, windings, n, block, (2, 0, 1))


def _site_host(order, windings, n, block, perm):
    k = len(order)
    if sorted(order) != list(range(1, k + 1)):
        raise HostError(f"order must arrange the {k} entry ports")
    if len(windings) != k or any(w < 0 for w in windings) or sum(windings) != n:
        raise HostError(f"windings must be nonnegative and sum to {n}")
    # start the circuit on a branch that follows a winding arc
    s = next(i for i in range(k) if windings[i - 1] >= 1)
    order = order[s:] + order[:s]
    windings = windings[s:] + windings[:s]

    chains = [[] for _ in range(n)]
    cur = 0
    chains[0].append(order[0])
    for b, w in zip(order[1:], windings[:k - 1]):
        cur = (cur + w) % n
        chains[cur].append(b)
    if (cur + windings[k - 1]) % n != 0:
        raise HostError("windings do not close the circuit")

    empty = [t for t in range(n) if not chains[t]]
    joins = []
    for ch in chains:
        joins.extend(zip(ch, ch[1:]))
    z = len(joins)
    e = len(empty)

    # strand ids: ('p', t) piece strands, ('f', j) join feeders, ('b', j)
    # bridges over the block
    events = []
    cid = 1
    occupants = [('p', t) for t in range(n)]
    for j in range(len(joins)):
        events.append(MorseEvent('U', len(occupants) + 1))
        occupants.extend([('f', j), ('b', j)])

    target = {}
    for t in range(n):
        if chains[t]:
            target[('p', t)] = chains[t][0]
    for p, t in enumerate(empty):
        target[('p', t)] = k + 1 + p
    for j, (x, y) in enumerate(joins):
        target[('f', j)] = y
        target[('b', j)] = k + 1 + e + j
    cid = _perm_braid(occupants, target, cid, events)

    block_slot = len(events)
    for pos, flag in block:
        events.append(MorseEvent('X', pos, flag, cid))
        cid += 1
    occupants[0:k] = [occupants[p] for p in perm]

    for j, (x, y) in enumerate(joins):
        exit_id = None
        for sid in occupants:
            if sid[0] != 'b' and target.get(sid) == x:
                exit_id = sid
        bridge = ('b', j)
        at_b = occupants.index(bridge)
        at_x = occupants.index(exit_id)
        if at_b < at_x:
            raise HostError("bridge below its exit strand")
        while at_b > at_x + 1:
            occupants[at_b], occupants[at_b - 1] = occupants[at_b - 1], occupants[at_b]
            events.append(MorseEvent('X', at_b, '+', cid))
            cid += 1
            at_b -= 1
        events.append(MorseEvent('A', at_x + 1))
        del occupants[at_x:at_x + 2]

    # close up: piece t hands over to piece t+1
    final = {}
    for t in range(n):
        final[_piece_end(t, chains, joins)] = ((t + 1) % n) + 1
    cid = _perm_braid(occupants, final, cid, events)

    diagram = AnnularDiagram(n, events, w0=n)
    diagram.validate()
    return diagram, block_slot


def _piece_end(t, chains, joins):
    """Strand id that carries piece t at the word end."""
    if not chains[t]:
        return ('p', t)
    last = chains[t][-1]
    if last == chains[t][0]:
        return ('p', t)
    for j, (x, y) in enumerate(joins):
        if y == last:
            return ('f', j)
    raise HostError("broken chain bookkeeping")


def meridian_loop(host, block_slot):
    """The eight-move loop around the quadruple point of the host."""
    moves = []
    for kind, k in MERIDIAN_WALK:
        if kind == 'B':
            moves.append(R3(block_slot + k))
        else:
            moves.append(Exchange(block_slot + k))
    return Movie(host, moves)


def tangency_loop(host, block_slot, over):
    """Loop around a triple point two of whose branches are tangent.

    The transverse strand slides across the tangency bigon: one triple
    move through each crossing of the pair, then the pair is cancelled
    and recreated on the far side.  The two triple moves use the same
    two outer crossings but opposite partners from the pair.  over is
    the flag of the leading pair crossing, as built by tangency_host.
    """
    s = block_slot
    moves = [R3(s + 1), R3(s), R2Delete(s + 2), R2Create(s, 1, over)]
    return Movie(host, moves)


def embedded_tangency_loops(diagram, over):
    """Closed tangency loops grafted next to each adjacent crossing pair
    of a diagram.

    The synthesized hosts exercise every marking pattern but carry no
    weight pairs; grafting the bigon into a cable diagram instead makes
    the two triple moves contribute nonzero, cancelling amounts.  Yields
    (host, movie) for every graft site that admits the slide.
    """
    evs = diagram.events
    for s in range(len(evs) - 1):
        a, b = evs[s], evs[s + 1]
        if a.kind != 'X' or b.kind != 'X':
            continue
        if b.pos == a.pos + 1:
            create = R2Create(s + 2, a.pos, over)
            moves = [R3(s), R3(s + 1), R2Delete(s), create]
        elif a.pos == b.pos + 1:
            create = R2Create(s, b.pos, over)
            moves = [R3(s + 1), R3(s), R2Delete(s + 2), create]
        else:
            continue
        try:
            host = create.apply(diagram)
            host.validate()
            host.check_no_negative_loops()
            movie = Movie(host, moves)
            movie.final()
        except (MoveError, DiagramError):
            continue
        yield host, movie


def commutation_loop(host, r3_slot, far_slot, pos, over):
    """Perform a triple move and a distant tangency move in both orders.

    The far R2 pair appears at far_slot before the triple move is
    undone, so the second R3 classifies in its presence.
    """
    s2 = r3_slot + (2 if far_slot <= r3_slot else 0)
    moves = [R3(r3_slot), R2Create(far_slot, pos, over),
             R3(s2), R2Delete(far_slot)]
    return Movie(host, moves)


def random_contractible_loop(host, length, seed):
    """Random applicable word of moves followed by its reverse inverse."""
    rng = random.Random(seed)
    cur = host
    walk = []
    for _ in range(length):
        options = _applicable_moves(cur, rng)
        if not options:
            break
        mv = rng.choice(options)
        walk.append(mv)
        cur = mv.apply(cur)
    out = Movie(host, walk)
    back = out.reversed()
    return Movie(host, walk + back.moves)


def _applicable_moves(d, rng):
    from .moves import r3_triple
    evs = d.events
    out = []
    for s in range(len(evs) - 2):
        if r3_triple(evs, s):
            try:
                R3(s).apply(d)
                out.append(R3(s))
            except MoveError:
                pass
    for s in range(len(evs) - 1):
        try:
            Exchange(s).apply(d)
            out.append(Exchange(s))
        except MoveError:
            pass
        try:
            R2Delete(s).apply(d)
            out.append(R2Delete(s))
        except MoveError:
            pass
    # a couple of random creations rather than the full slot * position
    # grid, to keep the option list balanced
    for _ in range(4):
        s = rng.randrange(len(evs) + 1)
        p = rng.randrange(1, 5)
        o = rng.choice('+-')
        try:
            R2Create(s, p, o).apply(d)
            out.append(R2Create(s, p, o))
        except (MoveError, DiagramError):
            pass
    return out


# ---------------------------------------------------------------------------
# The loop that carries a marked kink across a transverse strand

# Edit script for sliding a full-marking kink across the neighbouring
# cable strand: kink birth on one side, tangency with the strand, the
# strand passes the kink crossing, tangency undone, kink death on the
# other side.  Slots and positions refer to the front of the word, so
# the script replays on any host whose word starts with a crossing of
# the two lowest cable strands.  Found once by search over slide
# rearrangements and frozen as data; 'swap' exchanges two adjacent
# commuting events (with position offsets), 'zigin'/'zigout' insert and
# cancel a birth-death pair.
KINK_PASSAGE_SCRIPT = None


def _apply_edit(d, e):
    evs = list(d.events)
    k = e[0]
    if k == 'r1c':
        mv = R1Create(e[1], e[2], e[3], e[4])
    elif k == 'r1d':
        mv = R1Delete(e[1])
    elif k == 'r2c':
        mv = R2Create(e[1], e[2], e[3])
    elif k == 'r2d':
        mv = R2Delete(e[1])
    elif k == 'r3':
        mv = R3(e[1])
    elif k == 'zigin':
        _, i, k1, p1, k2, p2 = e
        w = evs[:i] + [MorseEvent(k1, p1), MorseEvent(k2, p2)] + evs[i:]
        mv = rearrange_to(w, d.w0)
    elif k == 'zigout':
        w = evs[:e[1]] + evs[e[1] + 2:]
        mv = rearrange_to(w, d.w0)
    elif k == 'swap':
        _, i, da, db = e
        a, b = evs[i], evs[i + 1]
        w = evs[:i] + [MorseEvent(b.kind, b.pos + db, b.over, b.cid),
                       MorseEvent(a.kind, a.pos + da, a.over, a.cid)] + evs[i + 2:]
        mv = rearrange_to(w, d.w0)
    else:
        raise HostError(f"unknown edit {e!r}")
    return mv, mv.apply(d)


def kink_passage_loop(long_text, script=None):
    """Closed loop on the 2-cable of a long knot in which a kink of full
    marking crosses the closing braid strand once.

    Exactly one triple point move occurs; its contribution picks up the
    degree-two invariant of the knot lifted to the double cover, so the
    loop separates satellites that plain counting cannot.
    """
    from .cabling import braid_events, closed_cable, long_events
    if script is None:
        script = KINK_PASSAGE_SCRIPT
    if script is None:
        raise HostError("no kink passage script available")
    host = closed_cable(braid_events([1]), long_events(long_text), 2)
    cur = host
    moves = []
    for e in script:
        mv, cur = _apply_edit(cur, e)
        moves.append(mv)
    return Movie(host, moves)
