"""Symbolic database of all source-to-sink paths of a DAG.

Every path is stored as a term of one VSOP: the combination is the path's
vertex set and the value is its length plus an offset ``B``.  The offset
keeps every value positive, since a term with value 0 would vanish; each
path holds exactly one source, so ``B`` is added once per path.

The database is built in topological order.  For vertex ``i`` with
predecessors ``j``::

    L_i = sum over source j:      (w_ji + B) * v_j
        + sum over non-source j:  L_j + w_ji * support(L_j)
    L_i = L_i * v_i

and the database is the sum of ``L_i`` over the sinks.  Queries select the
tie-inclusive top K by a binary search over values that only ever counts
terms above and at a threshold.
"""
import math
from dataclasses import dataclass, field

from kpaths.vsop import Vsop
from kpaths.zbdd import EMPTY, NodeStore

MODES = ('longest', 'shortest')


class QueryError(ValueError):
    """Invalid query, such as a nonpositive K or an empty database."""


def _check_mode(mode):
    if mode not in MODES:
        raise QueryError(f'unknown mode {mode!r}')


def default_offset(dag):
    return 1 + sum(-w for _, _, w in dag.edges if w < 0)


@dataclass
class Selection:
    paths: Vsop
    threshold: int
    iterations: int


def select_top_k(values, k, mode):
    """Tie-inclusive top `k` terms of `values` by data-driven binary search.

    Returns a `Selection` whose `threshold` is the K-th best value; the
    result holds every term at least that good.  When `k` reaches the term
    count, everything is returned.
    """
    if k < 1:
        raise QueryError('K must be positive')
    _check_mode(mode)
    longest = mode == 'longest'
    total = values.count_terms()
    if total == 0:
        return Selection(values, None, 0)
    lo = values.min_val()
    hi = values.max_val()
    if k >= total:
        return Selection(values, lo if longest else hi, 0)

    better = 'GT' if longest else 'LT'
    mid = None
    mid_prev = lo - 2
    iterations = 0
    while True:
        iterations += 1
        mid = (lo + hi) // 2
        if mid == mid_prev:
            # the interval has shrunk to [mid, mid + 1] with mid too good
            mid += 1
            break
        c1 = values.count_const('EQ', mid)
        c2 = values.count_const(better, mid)
        c3 = c1 + c2
        if c3 == k or (c3 > k and c2 < k):
            break
        if c3 < k:
            if longest:
                hi = mid
            else:
                lo = mid
        elif longest:
            lo = mid
        else:
            hi = mid
        mid_prev = mid

    keep = values.filter_const('GE' if longest else 'LE', mid)
    paths = values.filter_then(keep)
    # with c3 == k the cut may fall between values; report the K-th value
    threshold = paths.min_val() if longest else paths.max_val()
    n_at = paths.count_terms()
    n_past = values.count_const(better, threshold)
    if not (n_at >= k > n_past):
        raise AssertionError(
            f'top-k threshold {threshold} violates the contract: '
            f'{n_at} terms at or past it, {n_past} strictly past it, K={k}')
    return Selection(paths, threshold, iterations)


def iteration_bound(lo, hi):
    return math.ceil(math.log2(hi - lo + 1)) + 2


@dataclass
class QueryResult:
    """Tie-inclusive top-K paths.

    `paths` keeps internal (offset) values; `threshold` is a true length,
    `None` for an empty database.
    """

    paths: Vsop
    threshold: int
    count: int
    mode: str
    k: int
    iterations: int = 0
    db: 'PathDb' = field(default=None, repr=False, compare=False)


@dataclass
class PathTerm:
    """One path as a vertex-id combination and its true length."""

    combo: frozenset
    length: int


@dataclass
class PathDb:
    dag: object
    store: NodeStore
    paths: Vsop
    offset: int
    var_of: dict
    name_of: dict
    rank: dict = field(repr=False)
    partials: dict = field(default=None, repr=False)

    # counts and extremes

    def count_paths(self):
        return self.paths.count_terms()

    def longest_length(self):
        if self.paths.is_zero():
            raise QueryError('empty database has no paths')
        return self.paths.max_val() - self.offset

    def shortest_length(self):
        if self.paths.is_zero():
            raise QueryError('empty database has no paths')
        return self.paths.min_val() - self.offset

    # top-k

    def top_k(self, k, mode):
        sel = select_top_k(self.paths, k, mode)
        threshold = None if sel.threshold is None else sel.threshold - self.offset
        return QueryResult(
            paths=sel.paths, threshold=threshold,
            count=sel.paths.count_terms(), mode=mode, k=k,
            iterations=sel.iterations, db=self)

    def top_k_longest(self, k):
        return self.top_k(k, 'longest')

    def top_k_shortest(self, k):
        return self.top_k(k, 'shortest')

    def kth(self, k, mode):
        if self.paths.is_zero():
            raise QueryError('empty database has no paths')
        res = self.top_k(k, mode)
        if mode == 'longest':
            t = res.paths.min_cover()
        else:
            t = res.paths.max_cover()
        return PathTerm(t.combo, t.value - self.offset)

    def kth_longest(self, k):
        return self.kth(k, 'longest')

    def kth_shortest(self, k):
        return self.kth(k, 'shortest')

    # output

    def path_of(self, combo, length=None):
        """Order the vertices of `combo` along the path and check it.

        Returns ``(names, length)``; raises `AssertionError` if the set does
        not induce a path or, given `length`, its weight differs.
        """
        names = sorted(
            (self.name_of[v] for v in combo), key=self.rank.__getitem__)
        dag = self.dag
        total = 0
        for u, v in zip(names, names[1:]):
            if (u, v) not in dag.weight:
                raise AssertionError(
                    'term does not induce a path: ' + ' '.join(names))
            total += dag.weight[(u, v)]
        if not (names and dag.is_source(names[0]) and dag.is_sink(names[-1])):
            raise AssertionError(
                'term does not induce a path: ' + ' '.join(names))
        if length is not None and total != length:
            raise AssertionError(
                f'path {"->".join(names)} has weight {total}, '
                f'database says {length}')
        return tuple(names), total

    def materialize(self, result, limit):
        """Up to `limit` paths of `result`, best first, as (names, length)."""
        out = []
        rest = result.paths
        longest = result.mode == 'longest'
        while len(out) < limit and not rest.is_zero():
            best = rest.max_val() if longest else rest.min_val()
            level = rest.filter_then(rest.eq_const(best))
            for t in level.terms(limit - len(out)):
                out.append(self.path_of(t.combo, t.value - self.offset))
            rest = rest.filter_then(
                rest.lt_const(best) if longest else rest.gt_const(best))
        return out


def build(dag, prune=None, *, store=None, offset=None, var_order='reverse',
          keep_partials=False):
    """Build the path database of `dag`.

    `prune` is an optional ``(K, mode)``; each vertex's partial paths are
    then cut to their tie-inclusive top K before extension, which leaves the
    answer to that same query unchanged.

    With `var_order` ``'reverse'`` later vertices get smaller variable
    ordinals and so sit nearer the ZBDD roots; each vertex is then attached
    on top of its partial paths and the shared path prefixes stay shared.
    ``'topo'`` numbers variables in topological order instead.
    """
    if store is None:
        store = NodeStore()
    base = default_offset(dag)
    if offset is None:
        offset = base
    elif offset < base:
        raise ValueError(f'offset must be at least {base}')
    if var_order not in ('topo', 'reverse'):
        raise ValueError(f'unknown variable order {var_order!r}')
    if prune is not None:
        pk, pmode = prune
        if pk < 1:
            raise QueryError('K must be positive')
        _check_mode(pmode)

    order = list(dag.topo_order)
    ranked = order if var_order == 'topo' else order[::-1]
    var_of = {name: i for i, name in enumerate(ranked)}
    name_of = {i: name for name, i in var_of.items()}

    # partials still needed by a later successor
    remaining = {v: len(dag.succ[v]) for v in order}
    live = {}
    partials = {} if keep_partials else None
    total = Vsop(store)
    for v in order:
        # each predecessor contributes paths ending in a different vertex,
        # so the terms never collide and digit-wise union adds them
        acc = []
        for u in dag.pred[v]:
            w = dag.weight[(u, v)]
            if dag.is_source(u):
                part = Vsop.from_term(store, w + offset, (var_of[u],))
            else:
                part = live[u].add_to_values(w)
            acc = _union_digits(store, acc, part.digits)
            remaining[u] -= 1
            if remaining[u] == 0:
                live.pop(u, None)
        acc = Vsop(store, acc)
        if prune is not None and not acc.is_zero():
            acc = select_top_k(acc, pk, pmode).paths
        # v is on no partial path yet
        acc = Vsop(store, [store.attach(f, var_of[v]) for f in acc.digits])
        if keep_partials:
            partials[v] = acc
        if dag.is_sink(v):
            # sinks end distinct paths, so union adds here too
            total = Vsop(store, _union_digits(store, total.digits, acc.digits))
        elif not dag.is_source(v):
            live[v] = acc
    return PathDb(
        dag=dag, store=store, paths=total, offset=offset,
        var_of=var_of, name_of=name_of,
        rank={name: i for i, name in enumerate(order)}, partials=partials)


def _union_digits(store, a, b):
    n = max(len(a), len(b))
    a = list(a) + [EMPTY] * (n - len(a))
    b = list(b) + [EMPTY] * (n - len(b))
    return [store.union(f, g) for f, g in zip(a, b)]
