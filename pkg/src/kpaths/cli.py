"""Command-line front end.

    kpaths query --input G.txt --mode longest --k 10
    kpaths gen layered --layers 16 --width 10 --seed 1
    kpaths selfcheck

Exit codes: 0 success, 2 bad input or parameters, 3 query error,
4 ZBDD node limit (``KPATHS_NODE_LIMIT``) exceeded.
"""
import argparse
import json
import logging
import os
import resource
import sys
import time

from kpaths import gen, selfcheck
from kpaths.graph import GraphError, parse
from kpaths.pathdb import QueryError, build
from kpaths.zbdd import NodeLimitError, NodeStore

log = logging.getLogger('kpaths')

EXIT_INPUT = 2
EXIT_QUERY = 3
EXIT_MEMORY = 4


class _Fail(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _node_limit():
    raw = os.environ.get('KPATHS_NODE_LIMIT')
    if not raw:
        return None
    try:
        limit = int(raw)
    except ValueError:
        raise _Fail(EXIT_INPUT, f'KPATHS_NODE_LIMIT is not an integer: {raw!r}')
    if limit <= 0:
        raise _Fail(EXIT_INPUT, 'KPATHS_NODE_LIMIT must be positive')
    return limit


def _read_input(path):
    try:
        if path == '-':
            text = sys.stdin.read()
        else:
            with open(path, encoding='utf-8') as f:
                text = f.read()
        return parse(text)
    except (OSError, UnicodeDecodeError) as e:
        raise _Fail(EXIT_INPUT, f'cannot read {path}: {e}')
    except GraphError as e:
        raise _Fail(EXIT_INPUT, str(e))


def _minutes(seconds):
    m, s = divmod(int(round(seconds)), 60)
    return f'{m}:{s:02d}'


def _memory_note():
    kib = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
    return f'peak RSS {kib / 1024:.1f} MiB'


def _path_row(names, length):
    return {'length': length, 'vertices': list(names)}


def cmd_query(args):
    if not args.count_only and args.k is None:
        raise _Fail(EXIT_INPUT, '--k is required unless --count-only is given')
    if args.prune and args.k is None:
        raise _Fail(EXIT_INPUT, '--prune needs --k')
    if args.enumerate_limit < 0:
        raise _Fail(EXIT_INPUT, '--enumerate-limit must be nonnegative')
    dag = _read_input(args.input)
    store = NodeStore(max_nodes=_node_limit())
    started = time.perf_counter()
    try:
        if args.k is not None and args.k < 1:
            raise QueryError('K must be positive')
        prune = (args.k, args.mode) if args.prune else None
        db = build(dag, prune, store=store, var_order=args.var_order)
        log.info(
            'built database for %d vertices: %d ZBDD nodes, %.2fs',
            len(dag), store.node_count(), time.perf_counter() - started)
        if args.count_only:
            print(db.count_paths())
            return 0
        report = {
            'mode': args.mode,
            'k': args.k,
            'var_order': args.var_order,
            'pruned': bool(args.prune),
        }
        if args.kth:
            term = db.kth(args.k, args.mode)
            names, length = db.path_of(term.combo, term.length)
            report['threshold'] = length
            report['path'] = _path_row(names, length)
            rows = [(names, length)]
        else:
            result = db.top_k(args.k, args.mode)
            rows = db.materialize(result, args.enumerate_limit)
            report['threshold'] = result.threshold
            report['count'] = str(result.count)
            report['iterations'] = result.iterations
            report['paths'] = [_path_row(n, l) for n, l in rows]
            report['truncated'] = len(rows) < result.count
        if not args.prune:
            report['total_paths'] = str(db.count_paths())
    except QueryError as e:
        raise _Fail(EXIT_QUERY, str(e))
    except NodeLimitError as e:
        raise _Fail(EXIT_MEMORY, f'memory guard: {e}')
    elapsed = time.perf_counter() - started
    report['nodes'] = store.node_count()
    report['seconds'] = round(elapsed, 3)
    report['time'] = _minutes(elapsed)
    report['memory'] = _memory_note()

    if args.format == 'json':
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        for key in sorted(report):
            if key in ('paths', 'path'):
                continue
            value = report[key]
            if value is None:
                value = ''
            elif isinstance(value, bool):
                value = str(value).lower()
            print(f'# {key}\t{value}')
        for names, length in rows:
            print(f'{length}\t{"->".join(names)}')
    return 0


def cmd_gen(args):
    try:
        if args.kind == 'random':
            dag = gen.random_dag(
                args.vertices, args.edge_prob, seed=args.seed,
                wmin=args.wmin, wmax=args.wmax)
        else:
            dag = gen.layered_dag(
                args.layers, args.width, seed=args.seed,
                wmin=args.wmin, wmax=args.wmax)
    except (ValueError, GraphError) as e:
        raise _Fail(EXIT_INPUT, str(e))
    sys.stdout.write(
        f'# kpaths gen {args.kind} seed={args.seed} '
        f'weights=[{args.wmin},{args.wmax}]\n')
    for u, v, w in dag.edges:
        sys.stdout.write(f'{u} {v} {w}\n')
    return 0


def cmd_selfcheck(args):
    failed = 0
    for name, ok, got, want in selfcheck.run():
        if ok:
            print(f'PASS  {name}')
        else:
            failed += 1
            print(f'FAIL  {name}: got {got!r}, expected {want!r}')
    print(f'{failed} failed' if failed else 'all checks passed')
    return 1 if failed else 0


def make_parser():
    parser = argparse.ArgumentParser(
        prog='kpaths',
        description='k longest / shortest paths of a weighted DAG '
                    'without enumerating paths')
    parser.add_argument('-v', '--verbose', action='store_true')
    sub = parser.add_subparsers(dest='command', required=True)

    q = sub.add_parser('query', help='build the path database and query it')
    q.add_argument('--input', required=True, help="edge-list file, '-' for stdin")
    q.add_argument('--mode', choices=['longest', 'shortest'], default='longest')
    q.add_argument('--k', type=int)
    q.add_argument('--kth', action='store_true',
                   help='report only the k-th path')
    q.add_argument('--prune', action='store_true',
                   help='prune partial paths to the top k while building')
    q.add_argument('--count-only', action='store_true',
                   help='print the exact number of source-to-sink paths')
    q.add_argument('--enumerate-limit', type=int, default=100)
    q.add_argument('--format', choices=['json', 'tsv'], default='json')
    q.add_argument('--var-order', choices=['topo', 'reverse'], default='reverse',
                   help='ZBDD variable order (default: reverse topological)')
    q.set_defaults(func=cmd_query)

    g = sub.add_parser('gen', help='write a seeded benchmark DAG')
    gsub = g.add_subparsers(dest='kind', required=True)
    r = gsub.add_parser('random', help='edge i->j for i<j with given probability')
    r.add_argument('--vertices', type=int, required=True)
    r.add_argument('--edge-prob', type=float, required=True)
    lay = gsub.add_parser('layered', help='single source, complete layers')
    lay.add_argument('--layers', type=int, required=True)
    lay.add_argument('--width', type=int, required=True)
    for p in (r, lay):
        p.add_argument('--seed', type=int, default=0)
        p.add_argument('--wmin', type=int, default=1)
        p.add_argument('--wmax', type=int, default=10)
        p.set_defaults(func=cmd_gen)

    s = sub.add_parser('selfcheck', help='run the golden VSOP and DAG checks')
    s.set_defaults(func=cmd_selfcheck)
    return parser


def main(argv=None):
    args = make_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format='%(levelname)s %(message)s')
    try:
        return args.func(args)
    except _Fail as e:
        print(f'kpaths: {e}', file=sys.stderr)
        return e.code


if __name__ == '__main__':
    sys.exit(main())
