"""Evaluation of the degree-one cocycle on movies of class-n diagrams.

Only triple point moves contribute.  For each one the three crossings of
the triangle are sorted by the strand height order into d (highest over
lowest), hm (highest over middle) and ml (middle over lowest); the
homological markings then classify the move, and the two contributing
classes are the ones marked (a, n, a) and (n, n, n).  Each contribution
couples the move's local weight (an arrow count over the instantaneous
diagram) with a linking-style count along the ml chord.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .annular import DiagramError
from .gauss import match_n0_pairs
from .moves import R3, r3_triple, MoveError


class CocycleError(ValueError):
    pass


@dataclass
class TripleData:
    """Classification data of one triple point move, taken on the state
    just before the move."""

    slot: int
    d: int
    hm: int
    ml: int
    marks: dict
    global_type: str      # 'r' or 'l'
    local_type: int       # 1..8, lexicographic in the sign triple
    sign: int             # coorientation of the crossing direction
    w_hm: int


def _strand_heights(a, b, c):
    """Height order of the three strands meeting in a triple point
    pattern [X(p) X(q) X(p)], labelled 0,1,2 bottom to top at entry.
    Returns dict pairs (i,j) -> crossing event, plus over relations."""
    over = {}
    pairs = {}
    if a.pos < b.pos:
        # pattern sigma_i sigma_{i+1} sigma_i: crossings 01, 02, 12
        seq = [((0, 1), a), ((0, 2), b), ((1, 2), c)]
        asc = [0, 0, 1]
    else:
        # sigma_{i+1} sigma_i sigma_{i+1}: crossings 12, 02, 01
        seq = [((1, 2), a), ((0, 2), b), ((0, 1), c)]
        asc = [1, 0, 0]
    for (pair, ev), lower in zip(seq, asc):
        pairs[pair] = ev
        i, j = pair
        hi = (lower == i) == (ev.over == '+')
        # hi: the strand with smaller label is the over strand
        over[pair] = i if hi else j
    return pairs, over


def classify_r3(state, slot, n=None):
    """TripleData for the R3 move applied at this slot of this state."""
    if n is None:
        n = state.n
    trip = r3_triple(state.events, slot)
    if trip is None:
        raise CocycleError(f"no triple point pattern at slot {slot}")
    a, b, c = trip
    pairs, over = _strand_heights(a, b, c)
    score = {0: 0, 1: 0, 2: 0}
    for pair, winner in over.items():
        score[winner] += 1
    ranked = sorted(score, key=lambda s: -score[s])
    if [score[s] for s in ranked] != [2, 1, 0]:
        raise CocycleError("strand heights are cyclic at this slot")
    H, M, L = ranked
    d = pairs[tuple(sorted((H, L)))]
    hm = pairs[tuple(sorted((H, M)))]
    ml = pairs[tuple(sorted((M, L)))]

    g = state.gauss()
    marks = {q.cid: g.marking(q.cid) for q in (d, hm, ml)}
    total = marks[hm.cid] + marks[ml.cid] - marks[d.cid]
    if total == n:
        gtype = 'r'
    elif total == 0:
        gtype = 'l'
    else:
        raise CocycleError(f"marking balance {total} fits neither side")

    wd, whm, wml = g.signs[d.cid], g.signs[hm.cid], g.signs[ml.cid]
    key = ((1 - wd) // 2, (1 - whm) // 2, (1 - wml) // 2)
    local = 1 + key[0] * 4 + key[1] * 2 + key[2]

    inter = sum(g.interleaved(x.cid, y.cid)
                for x, y in ((d, hm), (d, ml), (hm, ml)))
    sign = 1 if inter in (0, 2) else -1

    return TripleData(slot=slot, d=d.cid, hm=hm.cid, ml=ml.cid,
                      marks={'d': marks[d.cid], 'hm': marks[hm.cid],
                             'ml': marks[ml.cid]},
                      global_type=gtype, local_type=local, sign=sign,
                      w_hm=whm)


def f_crossings(g, triple, n):
    """Marking-n crossings, outside the triangle, whose foot lies
    strictly inside the arc from the head of hm to the foot of hm."""
    start = g.position('h', triple.hm)
    stop = g.position('f', triple.hm)
    out = []
    skip = {triple.d, triple.hm, triple.ml}
    marks = g.markings()
    for cid in g.signs:
        if cid in skip or marks[cid] != n:
            continue
        if g.in_open_arc(g.position('f', cid), start, stop):
            out.append(cid)
    return out


def w2_p(g, triple, n):
    """Arrow count at the move: interleaved (n, 0) pairs whose n-crossing
    is an f-crossing of the move."""
    fc = set(f_crossings(g, triple, n))
    return sum(w for qn, q0, w in match_n0_pairs(g, n) if qn in fc)


def w2_hm(g, triple, n):
    """Arrow count of the hm crossing itself: its (n, 0) pairings."""
    return sum(w for qn, q0, w in match_n0_pairs(g, n) if qn == triple.hm)


def _arc_ml(g, triple):
    """The side of the ml chord away from the highest branch: returns the
    (start, stop) token positions of the open arc."""
    h_ml = g.position('h', triple.ml)
    f_ml = g.position('f', triple.ml)
    h_d = g.position('h', triple.d)
    # the highest branch carries head(d) and head(hm)
    if g.in_open_arc(h_d, h_ml, f_ml):
        return f_ml, h_ml
    return h_ml, f_ml


def l_p(g, triple, n, mark_needed):
    """Signed count of crossings of the required marking cutting the ml
    chord from the side away from the highest branch."""
    start, stop = _arc_ml(g, triple)
    marks = g.markings()
    skip = {triple.d, triple.hm, triple.ml}
    total = 0
    for cid in g.signs:
        if cid in skip or marks[cid] != mark_needed:
            continue
        foot_in = g.in_open_arc(g.position('f', cid), start, stop)
        head_in = g.in_open_arc(g.position('h', cid), start, stop)
        if foot_in and not head_in:
            total += g.signs[cid]
    return total


@dataclass
class MoveRow:
    index: int
    triple: TripleData
    contrib: int
    w2p: int = 0
    lp: int = 0
    w2hm: int = 0


@dataclass
class CocycleReport:
    n: int
    a: int
    value: int
    rows: list = field(default_factory=list)

    def contributing(self):
        return [r for r in self.rows if r.contrib != 0]


def evaluate(movie, a, n=None, report=False):
    """Value of the parameter-a cocycle on a movie.

    The parameter must satisfy 0 < a < n.  Returns an int, or a
    CocycleReport carrying one row per triple point move.
    """
    if n is None:
        n = movie.start.n
    if not 0 < a < n:
        raise CocycleError(f"parameter a={a} outside 0 < a < {n}")
    rows = []
    total = 0
    idx = 0
    for before, mv, after in movie.steps():
        idx += 1
        if not isinstance(mv, R3):
            continue
        t = classify_r3(before, mv.slot, n)
        g = before.gauss()
        contrib = w2p = lp = w2hm = 0
        if t.global_type == 'r':
            md, mhm, mml = t.marks['d'], t.marks['hm'], t.marks['ml']
            if (md, mhm, mml) == (a, n, a):
                w2p = w2_p(g, t, n)
                w2hm = w2_hm(g, t, n)
                lp = l_p(g, t, n, n)
                contrib = t.sign * (w2p + (lp + t.w_hm - 1) * w2hm * t.w_hm)
            elif (md, mhm, mml) == (n, n, n):
                w2hm = w2_hm(g, t, n)
                lp = l_p(g, t, n, n - a)
                contrib = -t.sign * lp * w2hm * t.w_hm
        total += contrib
        rows.append(MoveRow(index=idx, triple=t, contrib=contrib,
                            w2p=w2p, lp=lp, w2hm=w2hm))
    if report:
        return CocycleReport(n=n, a=a, value=total, rows=rows)
    return total


def evaluate_all(movie, n=None, report=False):
    """Values for every admissible parameter a = 1 .. n-1."""
    if n is None:
        n = movie.start.n
    return {a: evaluate(movie, a, n, report=report) for a in range(1, n)}


def interpolation_polynomial(values):
    """Exact Lagrange interpolation through {a: value}; returns the
    coefficient list c0..ck as Fractions, lowest degree first."""
    pts = sorted(values.items())
    coeffs = [Fraction(0)] * len(pts)
    for xi, yi in pts:
        basis = [Fraction(1)]
        denom = Fraction(1)
        for xj, _ in pts:
            if xj == xi:
                continue
            # multiply basis by (x - xj)
            new = [Fraction(0)] * (len(basis) + 1)
            for k, ck in enumerate(basis):
                new[k] += ck * (-xj)
                new[k + 1] += ck
            basis = new[:len(pts)]
            denom *= (xi - xj)
        for k, ck in enumerate(basis):
            coeffs[k] += yi * ck / denom
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def polynomial_text(coeffs):
    parts = []
    for k, c in enumerate(coeffs):
        if c == 0 and len(coeffs) > 1:
            continue
        term = str(c) if k == 0 else (f"{c}*a" if k == 1 else f"{c}*a^{k}")
        parts.append(term)
    return " + ".join(parts) if parts else "0"
