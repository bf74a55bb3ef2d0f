"""Command line front end.

Commands mirror the library layers: `cable` builds closed cable
diagrams, `loops` emits movies, `eval` and `pairing` run the cocycle,
`verify` drives the property suites, `oracle`/`invariant` expose the
low-level counts.  All output is plain text or JSON with stable key
order and no timestamps, so identical inputs give identical bytes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import cabling, oracle, verify
from .annular import AnnularDiagram, DiagramError, format_morse
from .cabling import braid_events, closed_cable, long_events, normalize_w1
from .cocycle import (evaluate, evaluate_all, interpolation_polynomial,
                      polynomial_text)
from .discriminant import (GLOBAL_TYPES, HostError, meridian_loop, quad_host,
                           tangency_host, tangency_loop)
from .gauss import c2k, v2, w1
from .loops import (PlannerError, pairing, push_full_twist_loop, push_loop,
                    rotation_loop, scan_path)
from .moves import MoveError

BUILTIN_KNOTS = {
    'unknot': cabling.LONG_UNKNOT,
    'trefoil': cabling.LONG_TREFOIL,
    'mirror-trefoil': cabling.LONG_MIRROR_TREFOIL,
    'fig8': cabling.LONG_FIG8,
    'torus25': cabling.LONG_TORUS25,
    'torus27': cabling.LONG_TORUS27,
}


class UsageError(ValueError):
    pass


def _knot_text(spec):
    """Builtin name, path to a .morse file, or literal Morse text."""
    if spec in BUILTIN_KNOTS:
        return BUILTIN_KNOTS[spec]
    base = os.path.splitext(os.path.basename(spec))[0]
    if base in BUILTIN_KNOTS and spec.endswith('.morse') and not os.path.exists(spec):
        return BUILTIN_KNOTS[base]
    if os.path.exists(spec):
        with open(spec) as f:
            return f.read().strip()
    if any(tok in spec for tok in ('U ', 'A ', 'X+', 'X-')) or spec == '':
        return spec
    raise UsageError(f"unknown knot {spec!r}: not a builtin, file, or Morse text")


def _tangle_word(text):
    """Braid word: tokens like s1, s2' (inverse), or signed integers."""
    word = []
    for tok in text.replace(',', ' ').split():
        inv = tok.endswith("'")
        if inv:
            tok = tok[:-1]
        if tok.startswith('s'):
            tok = tok[1:]
        g = int(tok)
        word.append(-abs(g) if inv or g < 0 else g)
    return word


def _framed(spec, target_w1):
    text = _knot_text(spec)
    if target_w1 is not None:
        text = normalize_w1(text, target_w1)
    return text


def _emit(payload, out_path):
    blob = json.dumps(payload, indent=2) + "\n"
    if out_path:
        with open(out_path, 'w') as f:
            f.write(blob)
    else:
        sys.stdout.write(blob)


def _caps_from_env():
    raw = os.environ.get('COCYCLE_LAB_CAPS', '')
    caps = {}
    for part in raw.split(','):
        part = part.strip()
        if not part:
            continue
        key, _, val = part.partition('=')
        caps[key.strip()] = int(val)
    return caps


def _apply_caps(caps):
    if 'crossings' in caps:
        oracle.CROSSING_CAP = caps['crossings']


def _diagram_payload(d):
    return {
        'n': d.n,
        'w0': d.w0,
        'morse': format_morse(d),
    }


def _movie_payload(movie):
    return {
        'n': movie.start.n,
        'start': _diagram_payload(movie.start),
        'moves': [type(mv).__name__ for mv in movie.moves],
        'closed': movie.is_closed(),
    }


def _report_payload(movie, n, explain=False):
    values = evaluate_all(movie, n)
    coeffs = interpolation_polynomial(values)
    payload = {
        'n': n,
        'values': {str(a): values[a] for a in sorted(values)},
        'polynomial': [str(c) for c in coeffs],
        'polynomial_text': polynomial_text(coeffs),
    }
    if explain:
        tables = {}
        for a in sorted(values):
            rep = evaluate(movie, a, n, report=True)
            tables[str(a)] = [
                {
                    'move': r.index,
                    'type': r.triple.global_type,
                    'marks': dict(r.triple.marks),
                    'sign': r.triple.sign,
                    'w2_p': r.w2p,
                    'l_p': r.lp,
                    'w2_hm': r.w2hm,
                    'contribution': r.contrib,
                }
                for r in rep.rows if r.contrib != 0
            ]
        payload['moves'] = tables
    return payload


def _loop_movie(args):
    if args.knot is None:
        raise UsageError("--knot is required for push/rot/scan loops")
    tangle = _tangle_word(args.tangle or '')
    knot = _framed(args.knot, args.w1)
    if args.push:
        return push_loop(tangle, knot, args.n)
    if args.rot:
        return rotation_loop(tangle, knot, args.n)
    if args.scan:
        return scan_path(tangle, knot, args.n)
    if args.full_twist:
        return push_full_twist_loop(tangle, knot, args.n)
    raise UsageError("pick one of --push/--rot/--scan/--full-twist")


def _add_loop_flags(p):
    p.add_argument('--push', action='store_true')
    p.add_argument('--rot', action='store_true')
    p.add_argument('--scan', action='store_true')
    p.add_argument('--full-twist', dest='full_twist', action='store_true')
    p.add_argument('--tangle', default='')
    p.add_argument('--knot', default=None)
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--w1', type=int, default=None)


def _cmd_cable(args):
    d = closed_cable(braid_events(_tangle_word(args.tangle or '')),
                     long_events(_framed(args.knot, args.w1)), args.n)
    _emit(_diagram_payload(d), args.out)
    return 0


def _cmd_loops(args):
    if args.meridian is not None:
        windings = tuple(args.windings or (0, 0, 0, args.n))
        host, slot = quad_host(GLOBAL_TYPES[args.meridian], windings, args.n)
        movie = meridian_loop(host, slot)
    elif args.cube:
        windings = tuple(args.windings or (0, 0, args.n))
        host, slot = tangency_host(tuple(args.order), windings,
                                   tuple(args.flags), args.n)
        movie = tangency_loop(host, slot, args.flags[0])
    else:
        movie = _loop_movie(args)
    _emit(_movie_payload(movie), args.out)
    return 0


def _cmd_eval(args):
    movie = _loop_movie(args)
    if args.a is not None:
        value = evaluate(movie, args.a, args.n)
        if args.explain:
            _emit(_report_payload(movie, args.n, explain=True), args.out)
        else:
            print(value)
        return 0
    _emit(_report_payload(movie, args.n, explain=args.explain), args.out)
    return 0


def _cmd_pairing(args):
    movie = pairing(_knot_text(args.left), _framed(args.right, args.w1),
                    args.n)
    _emit(_report_payload(movie, args.n, explain=args.explain), args.out)
    return 0


def _cmd_verify(args):
    names = [args.suite] if args.suite else list(verify.SUITES)
    params = {}
    if args.n is not None:
        params['ns'] = (args.n,)
    ok = True
    reports = []
    for name in names:
        rep = verify.run_suite(name, params=params or None)
        ok = ok and rep.passed
        reports.append(rep)
        print(rep.summary())
    if args.report:
        payload = {
            'passed': ok,
            'suites': [
                {
                    'name': r.name,
                    'passed': r.passed,
                    'checks': r.checks,
                    'failures': [
                        {'case': f.case, 'detail': f.detail}
                        for f in r.failures
                    ],
                }
                for r in reports
            ],
        }
        _emit(payload, args.report)
    return 0 if ok else 1


def _cmd_oracle(args):
    if args.what != 'conway':
        raise UsageError(f"unknown oracle {args.what!r}")
    d = closed_cable([], long_events(_knot_text(args.knot)), 1)
    poly = oracle.conway(d.gauss())
    _emit({'conway': {str(k): v for k, v in sorted(poly.items())},
           'text': oracle.poly_text(poly)}, args.out)
    return 0


def _cmd_invariant(args):
    if args.tangle or args.n > 1:
        d = closed_cable(braid_events(_tangle_word(args.tangle or '')),
                         long_events(_framed(args.knot, args.w1)), args.n)
    else:
        d = closed_cable([], long_events(_framed(args.knot, args.w1)), 1)
    g = d.gauss()
    if args.what == 'v2':
        print(v2(g))
    elif args.what == 'w1':
        print(w1(g))
    elif args.what == 'c2k':
        print(c2k(g, args.k))
    else:
        raise UsageError(f"unknown invariant {args.what!r}")
    return 0


def build_parser():
    ap = argparse.ArgumentParser(
        prog='cocycle-lab',
        description='one-cocycle computations for cabled knots in the '
                    'solid torus')
    sub = ap.add_subparsers(dest='command', required=True)

    p = sub.add_parser('cable', help='build a closed cable diagram')
    p.add_argument('--tangle', default='')
    p.add_argument('--knot', required=True)
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--w1', type=int, default=None)
    p.add_argument('--out', default=None)
    p.set_defaults(func=_cmd_cable)

    p = sub.add_parser('loops', help='emit a loop movie')
    _add_loop_flags(p)
    p.add_argument('--meridian', type=int, choices=sorted(GLOBAL_TYPES),
                   default=None, help='global type of a quadruple point host')
    p.add_argument('--cube', action='store_true')
    p.add_argument('--order', type=int, nargs=3, default=(1, 2, 3))
    p.add_argument('--windings', type=int, nargs='+', default=None)
    p.add_argument('--flags', nargs=3, default=('+', '+', '+'))
    p.add_argument('--out', default=None)
    p.set_defaults(func=_cmd_loops)

    p = sub.add_parser('eval', help='evaluate the cocycle on a loop')
    _add_loop_flags(p)
    p.add_argument('--a', type=int, default=None)
    p.add_argument('--explain', action='store_true')
    p.add_argument('--out', default=None)
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser('pairing', help='push a braided cable of one knot '
                                       'through the cable of another')
    p.add_argument('--left', required=True)
    p.add_argument('--right', required=True)
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--w1', type=int, default=None)
    p.add_argument('--explain', action='store_true')
    p.add_argument('--out', default=None)
    p.set_defaults(func=_cmd_pairing)

    p = sub.add_parser('verify', help='run property suites')
    p.add_argument('--suite', choices=sorted(verify.SUITES), default=None)
    p.add_argument('--n', type=int, default=None)
    p.add_argument('--report', default=None)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser('oracle', help='independent skein computations')
    p.add_argument('what', choices=['conway'])
    p.add_argument('--knot', required=True)
    p.add_argument('--out', default=None)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser('invariant', help='Gauss diagram counts')
    p.add_argument('what', choices=['v2', 'c2k', 'w1'])
    p.add_argument('--knot', required=True)
    p.add_argument('--tangle', default='')
    p.add_argument('--n', type=int, default=1)
    p.add_argument('--w1', type=int, default=None)
    p.add_argument('--k', type=int, default=1)
    p.set_defaults(func=_cmd_invariant)

    return ap


def run(argv=None):
    _apply_caps(_caps_from_env())
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DiagramError, MoveError, HostError, PlannerError,
            oracle.OracleCapError, ValueError) as exc:
        print(f"cocycle-lab: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == '__main__':
    main()
