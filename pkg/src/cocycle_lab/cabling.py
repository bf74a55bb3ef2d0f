"""Cables of long knot words and the tangles that close them.

A long knot is given as a Morse word with a single strand entering and
leaving at position 1 (class-1 when closed around the annulus by the
ray).  Its n-cable replaces every strand by a bundle of n parallel
strands: crossings become n*n crossing blocks, cups and caps become
concentric families.  Closing the cable with an n-strand tangle that
joins the copies into one component produces the class-n knots the
cocycle machinery evaluates on.
"""

from __future__ import annotations

from .annular import AnnularDiagram, MorseEvent, parse_morse


def braid_events(word, over=None, cid_start=1):
    """Crossing events for a braid word of signed generator indices:
    +i is X+ at position i, -i is X- at position i."""
    out = []
    cid = cid_start
    for g in word:
        out.append(MorseEvent('X', abs(g), '+' if g > 0 else '-', cid))
        cid += 1
    return out


def full_twist_word(n):
    """Braid word of the full twist on n strands."""
    return [i for _ in range(n) for i in range(1, n)]


def bundle_swap_rows(p, n):
    """Crossing positions that carry a bundle of n strands starting at p
    across the next bundle, row by row."""
    return [[(p - 1) + r + k for k in range(n)] for r in range(n, 0, -1)]


def n_cable(events, n, cid_start=None):
    """n-cable of a Morse word.

    Returns (cabled events, cid map); the map sends each original
    crossing id to its n*n block ids in word order.
    """
    if cid_start is None:
        cid_start = max([e.cid for e in events if e.kind == 'X'], default=0) + 1
    out = []
    cid_map = {}
    nxt = cid_start
    for ev in events:
        q = n * (ev.pos - 1) + 1
        if ev.kind == 'U':
            out.extend(MorseEvent('U', q + k) for k in range(n))
        elif ev.kind == 'A':
            out.extend(MorseEvent('A', q + n - 1 - k) for k in range(n))
        else:
            ids = []
            for row in bundle_swap_rows(q, n):
                for pos in row:
                    out.append(MorseEvent('X', pos, ev.over, nxt))
                    ids.append(nxt)
                    nxt += 1
            cid_map[ev.cid] = ids
    return out, cid_map


def renumber(events, cid_start=1):
    """Fresh consecutive crossing ids in word order."""
    out = []
    nxt = cid_start
    for ev in events:
        if ev.kind == 'X':
            out.append(MorseEvent('X', ev.pos, ev.over, nxt))
            nxt += 1
        else:
            out.append(ev)
    return out


def shift_events(events, offset):
    """Relocate a word upward by offset strand positions."""
    return [MorseEvent(e.kind, e.pos + offset, e.over, e.cid) for e in events]


def closed_cable(tangle_events, long_events, n):
    """Class-n diagram [ray][tangle][n-cable of the long knot word]."""
    cable, _ = n_cable(long_events, n)
    events = renumber(list(tangle_events) + cable)
    return AnnularDiagram(n, events, w0=n)


def kink_events(pos, over, variant='above'):
    if variant == 'above':
        return [MorseEvent('U', pos + 1), MorseEvent('X', pos + 1, over, 1),
                MorseEvent('A', pos)]
    return [MorseEvent('U', pos), MorseEvent('X', pos, over, 1),
            MorseEvent('A', pos + 1)]


def n_curl(n, over='+', variant='above', cid_start=None):
    """n-cable of a single kink on the base strand: the curl every strand
    of the diagram gets dragged through in the rotation loop."""
    events, _ = n_cable(kink_events(1, over, variant), n, cid_start=cid_start)
    return events


# ---------------------------------------------------------------------------
# Long knot fixtures, as Morse word text

LONG_UNKNOT = ""
LONG_TREFOIL = "U 2 ; X+ 1 ; X+ 1 ; X+ 1 ; A 2"
LONG_TORUS25 = "U 2 ; X+ 1 ; X+ 1 ; X+ 1 ; X+ 1 ; X+ 1 ; A 2"
LONG_TORUS27 = "U 2 ; " + " ; ".join(["X+ 1"] * 7) + " ; A 2"
LONG_FIG8 = "U 2 ; X+ 1 ; X- 2 ; X+ 1 ; X- 2 ; A 1"
LONG_MIRROR_TREFOIL = "U 2 ; X- 1 ; X- 1 ; X- 1 ; A 2"
LONG_UNKNOT_KINKS = "U 2 ; X+ 2 ; X+ 2 ; X+ 2 ; A 1"
# figure eight with the framing brought to -1 by one extra kink
LONG_FIG8_W1 = LONG_FIG8 + " ; U 2 ; X+ 2 ; A 1"


def normalize_w1(text, target):
    """Append marking-1 kinks to a long knot word until its degree-one
    invariant hits the target framing."""
    from .annular import AnnularDiagram
    from .gauss import w1 as _w1
    cur = _w1(AnnularDiagram(1, long_events(text), w0=1).gauss())
    neg = "U 2 ; X+ 2 ; A 1"   # negative kink of marking one
    pos = "U 1 ; X- 1 ; A 2"   # positive kink of marking one
    piece = neg if cur > target else pos
    parts = [text] if text.strip() else []
    for _ in range(abs(cur - target)):
        parts.append(piece)
    return " ; ".join(parts)


def long_events(text):
    if not text.strip():
        return []
    return list(parse_morse(text, n=1).events)


def insert_local_knot(events, slot, strand_pos, knot_text):
    """Splice a long knot into the strand at strand_pos at the given word
    slot, as a connected sum in a small ball."""
    piece = shift_events(renumber(long_events(knot_text), cid_start=10 ** 6),
                         strand_pos - 1)
    out = list(events)
    out[slot:slot] = piece
    return renumber(out)
