"""Independent Conway polynomial computation by skein recursion.

This module deliberately shares no logic with gauss.py: polynomials are
computed by resolving crossings with the skein relation until diagrams
are descending, then reading off unlinks.  It exists to cross-check the
arrow-counting invariants on concrete fixtures.

A link diagram is given as Gauss data: a list of components, each a
cyclic list of ('h', cid) / ('f', cid) tokens, plus a sign per crossing.
Switching and smoothing act on this data directly; both preserve
realizability of classical diagrams, so the recursion never leaves the
class of honest link diagrams.
"""

from __future__ import annotations


class OracleCapError(RuntimeError):
    pass


CROSSING_CAP = 16


def _poly_add(a, b, scale=1):
    out = dict(a)
    for d, c in b.items():
        out[d] = out.get(d, 0) + scale * c
        if out[d] == 0:
            del out[d]
    return out


def _poly_shift(a, k):
    return {d + k: c for d, c in a.items()}


def poly_text(p):
    if not p:
        return "0"
    parts = []
    for d in sorted(p):
        c = p[d]
        if d == 0:
            parts.append(f"{c}")
        else:
            term = 'z' if d == 1 else f"z^{d}"
            if c == 1:
                parts.append(term)
            elif c == -1:
                parts.append(f"-{term}")
            else:
                parts.append(f"{c}*{term}")
    out = parts[0]
    for t in parts[1:]:
        out += f" + {t}" if not t.startswith('-') else f" - {t[1:]}"
    return out


def _reduce_kinks(components, signs):
    """Strip isolated self-crossings (adjacent equal-cid tokens)."""
    signs = dict(signs)
    comps = [list(c) for c in components]
    changed = True
    while changed:
        changed = False
        for comp in comps:
            m = len(comp)
            for i in range(m):
                j = (i + 1) % m
                if m >= 2 and comp[i][1] == comp[j][1]:
                    cid = comp[i][1]
                    del signs[cid]
                    if i < j:
                        del comp[j], comp[i]
                    else:
                        del comp[i], comp[j]
                    changed = True
                    break
            if changed:
                break
    return comps, signs


def _first_bad(components):
    """First crossing met underpass-first when walking the components in
    order; None when the diagram is descending."""
    seen = set()
    for comp in components:
        for kind, cid in comp:
            if cid in seen:
                continue
            seen.add(cid)
            if kind == 'f':
                return cid
    return None


def _switch(components, signs, cid):
    comps = [[(('f' if k == 'h' else 'h') if c == cid else k, c)
              for k, c in comp] for comp in components]
    signs = dict(signs)
    signs[cid] = -signs[cid]
    return comps, signs


def _smooth(components, signs, cid):
    signs = dict(signs)
    del signs[cid]
    where = []
    for ci, comp in enumerate(components):
        for ti, (k, c) in enumerate(comp):
            if c == cid:
                where.append((ci, ti))
    (c1, t1), (c2, t2) = where
    comps = [list(c) for c in components]
    if c1 == c2:
        comp = comps[c1]
        i, j = sorted((t1, t2))
        a = comp[i + 1:j]
        b = comp[j + 1:] + comp[:i]
        rest = [c for ci, c in enumerate(comps) if ci != c1]
        return [a, b] + rest, signs
    comp1, comp2 = comps[c1], comps[c2]
    merged = comp1[:t1] + comp2[t2 + 1:] + comp2[:t2] + comp1[t1 + 1:]
    rest = [c for ci, c in enumerate(comps) if ci not in (c1, c2)]
    return [merged] + rest, signs


def _canon(components, signs):
    keys = []
    for comp in components:
        if not comp:
            keys.append(())
            continue
        best = None
        toks = [(k, c, signs[c]) for k, c in comp]
        for r in range(len(toks)):
            cand = tuple(toks[r:] + toks[:r])
            if best is None or cand < best:
                best = cand
        keys.append(best)
    return tuple(sorted(keys))


def conway_link(components, signs, _memo=None):
    """Conway polynomial of a link diagram, as a degree -> coeff dict."""
    if _memo is None:
        _memo = {}
    components, signs = _reduce_kinks(components, signs)
    if len(signs) > CROSSING_CAP:
        raise OracleCapError(
            f"skein oracle capped at {CROSSING_CAP} crossings, got {len(signs)}")
    key = _canon(components, signs)
    if key in _memo:
        return _memo[key]
    bad = _first_bad(components)
    if bad is None:
        result = {0: 1} if len(components) == 1 else {}
    else:
        s = signs[bad]
        switched = conway_link(*_switch(components, signs, bad), _memo)
        smoothed = conway_link(*_smooth(components, signs, bad), _memo)
        result = _poly_add(switched, _poly_shift(smoothed, 1), scale=s)
    _memo[key] = result
    return result


def conway(diagram):
    """Conway polynomial of a knot, forgetting the solid-torus structure.

    Accepts an AnnularDiagram or a GaussDiagram; ray passages are dropped
    and the underlying classical knot diagram is resolved by skein moves.
    """
    gd = diagram.gauss() if hasattr(diagram, 'gauss') else diagram
    comp = [t for t in gd.tokens if t[0] != 'r']
    return conway_link([comp], dict(gd.signs))
