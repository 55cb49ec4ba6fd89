"""Weighted DAGs: parsing, validation and topological order.

Edge-list text format, one edge per line::

    # comment
    FROM TO WEIGHT

Names match ``[A-Za-z0-9_.-]+`` and weights are signed decimal integers.
Only vertices that appear on some edge exist.
"""
import heapq
import re
from dataclasses import dataclass, field

_NAME = re.compile(r'[A-Za-z0-9_.-]+\Z')
_WEIGHT = re.compile(r'[+-]?[0-9]+\Z')
INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1


class GraphError(ValueError):
    """Invalid graph input."""


@dataclass(frozen=True)
class Dag:
    """A validated, immutable DAG with integer edge weights.

    `edges` keeps input order.  `topo_order` lists vertex names so that
    every edge points forward, ties broken by name.
    """

    edges: tuple
    vertices: tuple = field(init=False, compare=False)
    succ: dict = field(init=False, compare=False, repr=False)
    pred: dict = field(init=False, compare=False, repr=False)
    weight: dict = field(init=False, compare=False, repr=False)
    topo_order: tuple = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        edges = tuple((str(u), str(v), int(w)) for u, v, w in self.edges)
        vertices = []
        seen = set()
        succ = {}
        pred = {}
        weight = {}
        for u, v, w in edges:
            if (u, v) in weight:
                raise GraphError(f'parallel edge {u} -> {v}')
            if u == v:
                raise GraphError(f'cycle detected: {u} -> {u}')
            weight[(u, v)] = w
            for x in (u, v):
                if x not in seen:
                    seen.add(x)
                    vertices.append(x)
                    succ[x] = []
                    pred[x] = []
            succ[u].append(v)
            pred[v].append(u)
        set_ = object.__setattr__
        set_(self, 'edges', edges)
        set_(self, 'vertices', tuple(vertices))
        set_(self, 'succ', {k: tuple(vs) for k, vs in succ.items()})
        set_(self, 'pred', {k: tuple(vs) for k, vs in pred.items()})
        set_(self, 'weight', weight)
        set_(self, 'topo_order', _kahn(self))

    @property
    def sources(self):
        return tuple(v for v in self.topo_order if not self.pred[v])

    @property
    def sinks(self):
        return tuple(v for v in self.topo_order if not self.succ[v])

    def is_source(self, v):
        return not self.pred[v]

    def is_sink(self, v):
        return not self.succ[v]

    def __len__(self):
        return len(self.vertices)


def _kahn(dag):
    indeg = {v: len(dag.pred[v]) for v in dag.vertices}
    ready = [v for v, d in indeg.items() if d == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        u = heapq.heappop(ready)
        order.append(u)
        for v in dag.succ[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                heapq.heappush(ready, v)
    if len(order) < len(dag.vertices):
        cycle = _find_cycle(dag, {v for v, d in indeg.items() if d > 0})
        raise GraphError('cycle detected: ' + ' -> '.join(cycle))
    return tuple(order)


def _find_cycle(dag, remaining):
    # every remaining vertex has a remaining predecessor; walk back until
    # a vertex repeats
    v = min(remaining)
    walk = []
    index = {}
    while v not in index:
        index[v] = len(walk)
        walk.append(v)
        v = min(p for p in dag.pred[v] if p in remaining)
    cycle = walk[index[v]:]
    cycle.reverse()
    return cycle + [cycle[0]]


def topo_sort(dag):
    """Vertices in topological order, ties broken lexicographically."""
    return list(dag.topo_order)


def parse(text):
    """Parse edge-list text into a validated `Dag`."""
    edges = []
    for n, line in enumerate(text.splitlines(), start=1):
        body = line.split('#', 1)[0].strip()
        if not body:
            continue
        parts = body.split()
        if (len(parts) != 3 or not _NAME.match(parts[0])
                or not _NAME.match(parts[1]) or not _WEIGHT.match(parts[2])):
            raise GraphError(f'malformed line {n}: {line.strip()!r}')
        w = int(parts[2])
        if not INT64_MIN <= w <= INT64_MAX:
            raise GraphError(f'malformed line {n}: weight out of 64-bit range')
        edges.append((parts[0], parts[1], w))
    return Dag(tuple(edges))


def render(dag):
    """Edge-list text for `dag`; `parse(render(dag)) == dag`."""
    return ''.join(f'{u} {v} {w}\n' for u, v, w in dag.edges)


def read(path):
    with open(path, encoding='utf-8') as f:
        return parse(f.read())
