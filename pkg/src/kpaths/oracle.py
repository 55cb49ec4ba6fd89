"""Brute-force reference models used as ground truth in tests.

Everything here enumerates explicitly and may take exponential time.
"""

PATH_GUARD = 10 ** 6


class PathExplosion(RuntimeError):
    pass


def enumerate_paths(dag, guard=PATH_GUARD):
    """Every source-to-sink path as ``(vertex tuple, length)``, by DFS."""
    out = []
    # iterative DFS; each stack entry is (vertex, path so far, length)
    for s in dag.sources:
        if dag.is_sink(s):
            continue
        stack = [(s, (s,), 0)]
        while stack:
            v, path, length = stack.pop()
            if dag.is_sink(v):
                out.append((path, length))
                if len(out) > guard:
                    raise PathExplosion(
                        f'path explosion: more than {guard} paths')
                continue
            for w in reversed(dag.succ[v]):
                stack.append((w, path + (w,), length + dag.weight[(v, w)]))
    return out


def reference_top_k(paths, k, mode):
    """Tie-inclusive top `k` of ``(path, length)`` pairs by sorting."""
    if k < 1:
        raise ValueError('K must be positive')
    if mode not in ('longest', 'shortest'):
        raise ValueError(f'unknown mode {mode!r}')
    ranked = sorted(paths, key=lambda p: p[1], reverse=(mode == 'longest'))
    if k >= len(ranked):
        return list(ranked)
    cut = ranked[k - 1][1]
    if mode == 'longest':
        return [p for p in ranked if p[1] >= cut]
    return [p for p in ranked if p[1] <= cut]


def kth_length(paths, k, mode):
    """Length of the K-th ranked path (clamped to the last one)."""
    ranked = sorted((p[1] for p in paths), reverse=(mode == 'longest'))
    return ranked[min(k, len(ranked)) - 1]


def _cmp(op, a, b):
    if op == 'EQ':
        return a == b
    if op == 'NE':
        return a != b
    if op == 'LT':
        return a < b
    if op == 'LE':
        return a <= b
    if op == 'GT':
        return a > b
    if op == 'GE':
        return a >= b
    raise ValueError(op)


class ExplicitVsop:
    """Valued combination set as a plain ``{frozenset: int}`` map."""

    def __init__(self, terms=None):
        self.terms = {
            frozenset(c): v for c, v in (terms or {}).items() if v != 0}

    def __eq__(self, other):
        return isinstance(other, ExplicitVsop) and self.terms == other.terms

    def __repr__(self):
        return f'ExplicitVsop({self.terms!r})'

    def _merge(self, other, fn):
        keys = self.terms.keys() | other.terms.keys()
        return ExplicitVsop({
            c: fn(self.terms.get(c, 0), other.terms.get(c, 0)) for c in keys})

    def __add__(self, other):
        return self._merge(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._merge(other, lambda a, b: a - b)

    def __neg__(self):
        return ExplicitVsop({c: -v for c, v in self.terms.items()})

    def __mul__(self, other):
        out = {}
        for c1, v1 in self.terms.items():
            for c2, v2 in other.terms.items():
                c = c1 | c2
                out[c] = out.get(c, 0) + v1 * v2
        return ExplicitVsop(out)

    def compare(self, op, other):
        keys = self.terms.keys() | other.terms.keys()
        return ExplicitVsop({
            c: 1 for c in keys
            if _cmp(op, self.terms.get(c, 0), other.terms.get(c, 0))})

    def filter_const(self, op, k):
        return ExplicitVsop(
            {c: 1 for c, v in self.terms.items() if _cmp(op, v, k)})

    def terms_op(self, op, k):
        return ExplicitVsop(
            {c: v for c, v in self.terms.items() if _cmp(op, v, k)})

    def filter_then(self, sel):
        return ExplicitVsop(
            {c: v for c, v in self.terms.items() if c in sel.terms})

    def permit(self, other):
        return ExplicitVsop({
            c: v for c, v in self.terms.items()
            if any(c <= d for d in other.terms)})

    def restrict(self, other):
        return ExplicitVsop({
            c: v for c, v in self.terms.items()
            if any(d <= c for d in other.terms)})

    def count_terms(self):
        return len(self.terms)

    def total_val(self):
        return sum(self.terms.values())

    def max_val(self):
        if not self.terms:
            raise ValueError('empty expression')
        return max(self.terms.values())

    def min_val(self):
        if not self.terms:
            raise ValueError('empty expression')
        return min(self.terms.values())
