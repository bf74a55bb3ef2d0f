"""Marked Gauss diagrams and their arrow-counting invariants.

A Gauss diagram records the cyclic sequence of over- and underpasses met
along the knot, together with signed ray passages.  All quantities the
cocycle machinery needs (homological markings, the degree-two invariant,
Conway coefficients, the covering lift) are functions of this data alone.
"""

from __future__ import annotations

from dataclasses import dataclass
import itertools
import re



@dataclass
class GaussDiagram:
    """Marked Gauss diagram of a knot in the solid torus.

    tokens is the cyclic sequence met along the knot: ('h', cid) for an
    overpass, ('f', cid) for an underpass, ('r', +1/-1) for a signed ray
    passage.  signs maps crossing ids to the crossing sign.
    """

    tokens: list
    signs: dict

    def __post_init__(self):
        self._pos = {}
        for idx, tok in enumerate(self.tokens):
            if tok[0] in ('h', 'f'):
                self._pos[(tok[0], tok[1])] = idx

    @property
    def chords(self):
        return sorted(self.signs)

    @property
    def homology_class(self):
        return sum(s for k, s in self.tokens if k == 'r')

    def position(self, end, cid):
        return self._pos[(end, cid)]

    def arc_ray_sum(self, start, stop):
        """Signed ray passages on the open arc from token index start to
        stop, walking in token order (exclusive at both ends)."""
        total = 0
        i = (start + 1) % len(self.tokens)
        while i != stop:
            tok = self.tokens[i]
            if tok[0] == 'r':
                total += tok[1]
            i = (i + 1) % len(self.tokens)
        return total

    def marking(self, cid):
        """Winding number of the positive smoothing at cid: the signed ray
        count on the arc from the overpass to the underpass."""
        return self.arc_ray_sum(self.position('h', cid), self.position('f', cid))

    def markings(self):
        return {cid: self.marking(cid) for cid in self.signs}

    def in_open_arc(self, idx, start, stop):
        """Is token index idx strictly inside the arc start -> stop?"""
        if start == stop:
            return False
        i = (start + 1) % len(self.tokens)
        while i != stop:
            if i == idx:
                return True
            i = (i + 1) % len(self.tokens)
        return False

    def interleaved(self, cid1, cid2):
        """Do the chords of cid1 and cid2 cross inside the circle?"""
        a, b = self.position('h', cid1), self.position('f', cid1)
        c = self.position('h', cid2)
        d = self.position('f', cid2)
        return self.in_open_arc(c, a, b) != self.in_open_arc(d, a, b)

    def cyclic_order(self, indices):
        """Check that the given token indices appear in this cyclic order."""
        base = indices[0]
        shifted = sorted((i - base) % len(self.tokens) for i in indices)
        return shifted == [(i - base) % len(self.tokens) for i in indices]

    def canonical_tokens(self):
        """Cyclic-rotation-invariant token tuple, for planar-equality tests."""
        toks = tuple(self.tokens)
        if not toks:
            return toks
        best = None
        for r in range(len(toks)):
            cand = toks[r:] + toks[:r]
            if best is None or cand < best:
                best = cand
        return best

    def text(self):
        words = []
        for tok in self.tokens:
            if tok[0] == 'r':
                words.append('*' if tok[1] > 0 else '*-')
            else:
                words.append(f"{tok[0]}{tok[1]}")
        signline = ' '.join(
            f"{cid}:{'+' if self.signs[cid] > 0 else '-'}" for cid in sorted(self.signs))
        return ' '.join(words) + '\n' + 'signs: ' + signline


def parse_gauss(text):
    lines = [l for l in text.strip().split('\n') if l.strip()]
    body = lines[0].split()
    tokens = []
    for w in body:
        if w == '*':
            tokens.append(('r', 1))
        elif w == '*-':
            tokens.append(('r', -1))
        else:
            m = re.match(r'^(h|f)(\d+)$', w)
            if not m:
                raise DiagramError('E_PARSE', f"bad gauss token {w!r}")
            tokens.append((m.group(1), int(m.group(2))))
    signs = {}
    for l in lines[1:]:
        l = l.strip()
        if not l.startswith('signs:'):
            raise DiagramError('E_PARSE', f"bad gauss line {l!r}")
        for w in l[6:].split():
            m = re.match(r'^(\d+):([+-])$', w)
            if not m:
                raise DiagramError('E_PARSE', f"bad sign token {w!r}")
            signs[int(m.group(1))] = 1 if m.group(2) == '+' else -1
    return GaussDiagram(tokens, signs)


# ---------------------------------------------------------------------------
# Invariants

def w1(diagram):
    """Sum of signs over crossings of marking one.

    For class-1 diagrams this is the writhe-like degree-one invariant;
    it is what the framing normalisation kills.
    """
    marks = diagram.markings()
    return sum(diagram.signs[c] for c in diagram.signs if marks[c] == 1)


def match_n0_pairs(diagram, n=None):
    """All interleaved pairs (q_n, q_0) of a marking-n and a marking-0
    crossing whose endpoints sit in cyclic order

        foot(q_n), head(q_0), head(q_n), foot(q_0).

    Yields (cid_n, cid_0, weight) with weight the product of signs.
    """
    if n is None:
        n = diagram.homology_class
    marks = diagram.markings()
    top = [c for c in diagram.signs if marks[c] == n]
    bot = [c for c in diagram.signs if marks[c] == 0]
    out = []
    for qn in top:
        fn = diagram.position('f', qn)
        hn = diagram.position('h', qn)
        for q0 in bot:
            if q0 == qn:
                continue
            h0 = diagram.position('h', q0)
            f0 = diagram.position('f', q0)
            if diagram.cyclic_order([fn, h0, hn, f0]):
                out.append((qn, q0, diagram.signs[qn] * diagram.signs[q0]))
    return out


def v2(diagram, n=None):
    """Degree-two invariant of a class-n diagram, counted by interleaved
    (marking n, marking 0) crossing pairs."""
    return sum(w for _, _, w in match_n0_pairs(diagram, n))


def _crossing_sequence(diagram):
    """Crossing tokens in cyclic order starting just after a ray passage.

    Only meaningful for class-1 diagrams, where the ray passage is the
    natural basepoint of a long-knot representative.
    """
    toks = diagram.tokens
    ray = [i for i, t in enumerate(toks) if t[0] == 'r']
    if len(ray) != 1 or toks[ray[0]][1] != 1:
        raise ValueError("Conway-style counts need a class-1 diagram")
    r = ray[0]
    seq = [toks[(r + 1 + i) % len(toks)] for i in range(len(toks) - 1)]
    return [t for t in seq if t[0] != 'r']


def _ascending_one_component(seq, subset):
    """Does band surgery along the arrows of subset leave one component,
    met foot-first at every arrow when walked from the basepoint?

    The surgery respects orientation: arriving at an arrow endpoint the
    walk jumps to the other endpoint and keeps going forward.
    """
    m = len(seq)
    ends = {}
    for i, (kind, cid) in enumerate(seq):
        if cid in subset:
            ends.setdefault(cid, []).append(i)
    jump = {}
    for cid, (a, b) in ends.items():
        jump[a], jump[b] = b, a
    first_end = {}
    p, visited = 0, set()
    while p not in visited:
        visited.add(p)
        kind, cid = seq[p]
        if cid in subset:
            if cid not in first_end:
                first_end[cid] = kind
            p = (jump[p] + 1) % m
        else:
            p = (p + 1) % m
    if len(visited) != m:
        return False
    return all(k == 'f' for k in first_end.values())


def c2k(diagram, k):
    """Coefficient of z^(2k) in the Conway polynomial, counted over
    ascending one-component arrow subsets of size 2k."""
    if k == 0:
        return 1
    seq = _crossing_sequence(diagram)
    cids = sorted({cid for _, cid in seq})
    total = 0
    for subset in itertools.combinations(cids, 2 * k):
        if _ascending_one_component(seq, frozenset(subset)):
            w = 1
            for cid in subset:
                w *= diagram.signs[cid]
            total += w
    return total


def lift_to_cover(diagram, n=None):
    """Class-1 diagram of the knot lifted along the n-fold cover.

    Keeps the crossings of marking 0 and marking n and a single ray
    passage; deck transformations permute the possible choices, so any
    counter-clockwise passage serves.
    """
    if n is None:
        n = diagram.homology_class
    marks = diagram.markings()
    keep = {c for c in diagram.signs if marks[c] in (0, n)}
    tokens = []
    ray_done = False
    for tok in diagram.tokens:
        if tok[0] == 'r':
            if tok[1] == 1 and not ray_done:
                tokens.append(tok)
                ray_done = True
        elif tok[1] in keep:
            tokens.append(tok)
    return GaussDiagram(tokens, {c: diagram.signs[c] for c in keep})


# ---------------------------------------------------------------------------
# Generic arrow-formula evaluation

@dataclass(frozen=True)
class ArrowFormula:
    """An arrow-counting pattern.

    markings gives the required marking per abstract arrow, with 'n'
    standing for the diagram's own class.  pattern is the cyclic order of
    the endpoints as ('h'|'f', arrow index) tokens.
    """

    markings: tuple
    pattern: tuple

    def resolve(self, n):
        return tuple(n if m == 'n' else m for m in self.markings)


# the interleaved (class, 0) pair pattern behind the degree-two invariant
N0_FORMULA = ArrowFormula(markings=('n', 0),
                          pattern=(('f', 0), ('h', 1), ('h', 0), ('f', 1)))


def eval_arrow_formula(diagram, formula, n=None):
    """Sum of sign products over all embeddings of the pattern.

    An embedding assigns distinct crossings of the required markings to
    the formula's arrows so that all pattern endpoints sit in the given
    cyclic order.
    """
    if n is None:
        n = diagram.homology_class
    marks = diagram.markings()
    need = formula.resolve(n)
    pools = [[c for c in diagram.signs if marks[c] == m] for m in need]
    total = 0
    for combo in itertools.product(*pools):
        if len(set(combo)) != len(combo):
            continue
        idxs = [diagram.position(kind, combo[k]) for kind, k in formula.pattern]
        if diagram.cyclic_order(idxs):
            w = 1
            for c in combo:
                w *= diagram.signs[c]
            total += w
    return total
