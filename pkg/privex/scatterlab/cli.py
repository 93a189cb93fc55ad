"""
Command line interface::

    scatterlab build --family ys_td --set 1,3
    scatterlab invariant --family ys_td --set 1,3 --invariant signature
    scatterlab invariant --frame 7 --invariant holes
    scatterlab distinguish --family xs --all-subsets 1..4
    scatterlab distinguish --family ug --random 20 --seed 5
    scatterlab render --family frames_zs --set 2,4 --out frames.svg
    scatterlab selftest --quick --store ~/.privex_scatterlab/reports.db

Results go to stdout (or ``--out``), diagnostics go to stderr as JSON. Exit codes: ``0`` success, ``1``
verification failure, ``2`` usage or validation error.

**Copyright**::

    +===================================================+
    |                 © 2020 Privex Inc.                |
    |               https://www.privex.io               |
    +===================================================+
    |                                                   |
    |        Privex's ScatterLab                        |
    |        License: X11 / MIT                         |
    |                                                   |
    +===================================================+

"""
import argparse
import json
import logging
import random
import sys
from typing import List, Optional

from privex.helpers import DictObject, empty
from privex.loghelper import LogHelper

from privex.scatterlab import settings, codec
from privex.scatterlab.exceptions import ScatterLabException, RangeError, VerificationFailure
from privex.scatterlab.families import FAMILIES, build_family, frame_region, parse_set, parse_bits
from privex.scatterlab.objects import DistinguishReport, FamilySpec
from privex.scatterlab.render import render
from privex.scatterlab.selftest import run_selftest, subsets
from privex.scatterlab.store import ReportManager
from privex.scatterlab.verify import INVARIANTS, distinguish_matrix, invariant_of, render_value

log = logging.getLogger(__name__)

EXIT_OK, EXIT_VERIFY, EXIT_USAGE = 0, 1, 2

DEFAULT_INVARIANT = {
    'kn': 'order_type', 'xs': 'recover_S_linear', 'xs_cubes': 'recover_S_cubes', 'frames_zs': 'holes',
    'ys_prop3': 'chain_sizes', 'ug': 'bits_profile', 'ug_closure': 'bits_profile', 'ys_closure': 'bits_profile',
    'ys_td': 'signature', 'discrete': 'compactification_signature', 'as_primes': 'cluster_profile',
}


class UsageError(RangeError):
    code = 'usage'


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog='scatterlab', description='Exact point-set catalog, invariants and checks')
    p.add_argument('-v', '--verbose', action='store_true', help='debug logging on stderr')
    sub = p.add_subparsers(dest='command')

    def family_args(sp):
        sp.add_argument('--family', choices=FAMILIES)
        sp.add_argument('--set', dest='S', help="index set, e.g. '1,3' or '1..4'")
        sp.add_argument('--bits', help="bit string, e.g. '101'")
        sp.add_argument('--dimension', type=int)
        sp.add_argument('--n', type=int, help='K_n index')
        sp.add_argument('--u', help='width base for xu, e.g. 5/2')
        sp.add_argument('--N', type=int, help='window bound for as_primes / prefix length for xu')
        sp.add_argument('--open', action='store_true', help='open variant (xu)')
        sp.add_argument('--integer-scaled', action='store_true', help='integer scaled frames')
        sp.add_argument('--frame', type=int, help='a single frame region D_m minus W_m')
        sp.add_argument('--input', help='JSON document (term, cubes, frames or FamilySpec); - for stdin')
        sp.add_argument('--depth', type=int, default=settings.DEPTH_DEFAULT)
        sp.add_argument('--out', help='write the result here instead of stdout')

    for name in ('build', 'invariant', 'distinguish', 'render'):
        sp = sub.add_parser(name)
        family_args(sp)
        if name in ('invariant', 'distinguish'):
            sp.add_argument('--k-max', type=int, default=settings.K_MAX_DEFAULT)
            sp.add_argument('--delta', default='1/50')
            sp.add_argument('--invariant', '--name', dest='invariant', choices=INVARIANTS)
        if name == 'invariant':
            sp.add_argument('--count', type=int, help='windows read by bits_profile on a JSON input')
        if name == 'render':
            sp.add_argument('--format', choices=('json', 'svg'), default='svg')
        if name == 'distinguish':
            sp.add_argument('--store', help='sqlite database for reports (":memory:" allowed)')
            sp.add_argument('--all-subsets', help="every nonempty subset of a range, e.g. '1..4'")
            sp.add_argument('--random', type=int, help='number of random bit strings (ug families)')
            sp.add_argument('--length', type=int, default=settings.MAX_BITS)
            sp.add_argument('--seed', type=int, default=0)

    st = sub.add_parser('selftest')
    st.add_argument('--quick', action='store_true')
    st.add_argument('--only', action='append', help='run only this criterion (repeatable)')
    st.add_argument('--store', help='sqlite database recording the run')
    st.add_argument('--out')
    return p


def _spec_from_args(args) -> FamilySpec:
    if empty(args.family):
        raise UsageError('--family is required unless --input or --frame is given')
    params = DictObject()
    for key in ('S', 'bits', 'dimension', 'n', 'u', 'N'):
        v = getattr(args, key, None)
        if not empty(v):
            params[key] = v
    if args.open:
        params.open = True
    if args.integer_scaled:
        params.integer_scaled = True
    if args.family in ('ys_prop3',) and not empty(args.depth) and args.depth != settings.DEPTH_DEFAULT:
        params.depth = args.depth
    return FamilySpec(family=args.family, params=params)


def _read_input(path: str):
    if path == '-':
        return codec.loads(sys.stdin.read())
    with open(path, 'r') as fh:
        text = fh.read()
    return codec.loads(text)


def _load_value(args):
    """The value a command acts on, plus the spec it was built from (``None`` for JSON and frame inputs)"""
    if not empty(args.input):
        value = _read_input(args.input)
        if isinstance(value, FamilySpec):
            return build_family(value), value
        return value, None
    if args.frame is not None:
        return frame_region(args.frame), None
    spec = _spec_from_args(args)
    return build_family(spec), spec


def _emit(text: str, out: Optional[str]):
    if empty(out):
        sys.stdout.write(text if text.endswith('\n') else text + '\n')
        return
    with open(out, 'w') as fh:
        fh.write(text)


def _report_dict(rep: DistinguishReport) -> dict:
    return dict(
        family=rep.family, labels=rep.labels, invariant=rep.invariant, values=rep.values, matrix=rep.matrix,
        witnesses=dict(rep.witnesses), all_distinct=rep.all_distinct,
    )


def _members(args) -> List[dict]:
    if not empty(args.all_subsets):
        combos = subsets(parse_set(args.all_subsets))
        extra = {} if args.dimension is None else dict(dimension=args.dimension)
        return [dict(S=list(c), **extra) for c in combos]
    if args.random:
        rnd = random.Random(args.seed)
        return [dict(bits=''.join(str(rnd.randint(0, 1)) for _ in range(args.length))) for _ in range(args.random)]
    raise UsageError('distinguish needs --all-subsets or --random')


##############
# Commands
##############

def cmd_build(args) -> int:
    value, _ = _load_value(args)
    _emit(codec.dumps(value), args.out)
    return EXIT_OK


def cmd_invariant(args) -> int:
    value, spec = _load_value(args)
    name = args.invariant or DEFAULT_INVARIANT.get(getattr(spec, 'family', None))
    if empty(name):
        raise UsageError('--invariant is required for this input')
    count = args.count
    if count is None and spec is not None and 'bits' in spec.params:
        count = len(parse_bits(spec.params.bits))
    result = invariant_of(value, name, k_max=args.k_max, delta=args.delta, depth=args.depth, count=count)
    _emit(codec.dumps(dict(invariant=name, value=render_value(result))), args.out)
    return EXIT_OK


def cmd_distinguish(args) -> int:
    if empty(args.family):
        raise UsageError('distinguish needs --family')
    invariant = args.invariant or DEFAULT_INVARIANT.get(args.family)
    if empty(invariant):
        raise UsageError(f'no default invariant for {args.family}; pass --invariant')
    rep = distinguish_matrix(args.family, _members(args), invariant, k_max=args.k_max, delta=args.delta)
    body = codec.dumps(_report_dict(rep))
    if not empty(args.store):
        with ReportManager(db=args.store) as rm:
            rm.adapter.create_schemas()
            rm.save_report('distinguish', body, family=args.family, invariant=invariant)
    _emit(body, args.out)
    return EXIT_OK if rep.all_distinct else EXIT_VERIFY


def cmd_render(args) -> int:
    value, _ = _load_value(args)
    _emit(render(value, args.depth) if args.format == 'svg' else codec.dumps(value), args.out)
    return EXIT_OK


def cmd_selftest(args) -> int:
    report = run_selftest(quick=args.quick, only=args.only)
    body = codec.dumps(dict(report))
    if not empty(args.store):
        with ReportManager(db=args.store) as rm:
            rm.adapter.create_schemas()
            last = rm.last_selftest()
            digest = rm.save_selftest(body, report.passed)
            same = None if last is None else last.digest == digest
            log.info('selftest digest %s (same as previous run: %s)', digest, same)
            sys.stderr.write(json.dumps(dict(digest=digest, same_as_previous=same)) + '\n')
    _emit(body, args.out)
    return EXIT_OK if report.passed else EXIT_VERIFY


COMMANDS = dict(
    build=cmd_build, invariant=cmd_invariant, distinguish=cmd_distinguish, render=cmd_render, selftest=cmd_selftest
)


def main(argv: List[str] = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    if args.command is None:
        parser.print_help(sys.stderr)
        return EXIT_USAGE
    level = logging.DEBUG if args.verbose else logging.WARNING
    lh = LogHelper('privex.scatterlab', clear_handlers=True, level=level, handler_level=level)
    lh.add_console_handler(stream=sys.stderr)
    try:
        return COMMANDS[args.command](args)
    except VerificationFailure as e:
        sys.stderr.write(json.dumps(e.to_dict(), sort_keys=True) + "\n")
        return EXIT_VERIFY
    except ScatterLabException as e:
        sys.stderr.write(json.dumps(e.to_dict(), sort_keys=True) + "\n")
        return EXIT_USAGE
    except (OSError, ValueError) as e:
        sys.stderr.write(json.dumps(dict(error='usage', message=str(e), details={}), sort_keys=True) + '\n')
        return EXIT_USAGE


def run():
    sys.exit(main())
