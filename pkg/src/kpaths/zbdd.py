"""Zero-suppressed binary decision diagrams.

A ZBDD denotes a finite family of combinations, each combination a finite
set of integer variables.  Variables are ordinals; a smaller ordinal sits
nearer the root.  Nodes live in a :class:`NodeStore` and are referred to by
plain integer handles, with two terminals:

    EMPTY = 0   the empty family
    UNIT  = 1   the family holding only the empty combination

Nodes are hash-consed through a unique table, so two handles are equal
exactly when they denote the same family.
"""
import sys
from array import array

EMPTY = 0
UNIT = 1

# level reported for terminals; larger than any variable
TERMINAL_LEVEL = sys.maxsize

_UNION = 1
_INTERSECT = 2
_DIFF = 3
_XOR = 4
_ATTACH = 5
_PERMIT = 6
_RESTRICT = 7

DEFAULT_CACHE_LIMIT = 1 << 21


class NodeLimitError(RuntimeError):
    """Raised when a store would allocate more nodes than `max_nodes`."""


class NodeStore:
    """Shared ZBDD node storage plus the set-algebra operations.

    All handles returned by a store stay valid for its lifetime; nothing is
    garbage collected.  The operation cache is lossy: it is dropped wholesale
    once it holds `cache_limit` entries.

    A store is not thread safe.
    """

    def __init__(self, max_nodes=None, cache_limit=DEFAULT_CACHE_LIMIT):
        self._var = array('q', [TERMINAL_LEVEL, TERMINAL_LEVEL])
        self._lo = array('q', [EMPTY, EMPTY])
        self._hi = array('q', [EMPTY, EMPTY])
        # packed (var, lo, hi) -> node
        self._unique = {}
        self._cache = {}
        self._counts = {EMPTY: 0, UNIT: 1}
        self.max_nodes = max_nodes
        self.cache_limit = cache_limit
        self.cache_clears = 0
        # recursion depth is bounded by the number of variables on a path
        if sys.getrecursionlimit() < 20000:
            sys.setrecursionlimit(20000)

    def __len__(self):
        return len(self._var) - 2

    def node_count(self):
        """Number of internal nodes allocated in this store."""
        return len(self._var) - 2

    def statistics(self):
        return {
            'nodes': self.node_count(),
            'cache_entries': len(self._cache),
            'cache_clears': self.cache_clears,
        }

    # node access

    def var(self, u):
        """Level of `u`, `TERMINAL_LEVEL` for terminals."""
        return self._var[u]

    def lo(self, u):
        return self._lo[u]

    def hi(self, u):
        return self._hi[u]

    def is_terminal(self, u):
        return u <= UNIT

    def node(self, var, lo, hi):
        """Return the canonical node `(var, lo, hi)`.

        Applies zero suppression: a node whose 1-edge leads to EMPTY is
        replaced by its 0-child.
        """
        if hi == EMPTY:
            return lo
        key = (var << 80) | (lo << 40) | hi
        u = self._unique.get(key)
        if u is not None:
            return u
        if var < 0:
            raise ValueError(f'variable must be nonnegative, got {var}')
        if not (var < self._var[lo] and var < self._var[hi]):
            raise ValueError(
                f'variable {var} must precede the variables of its children')
        if self.max_nodes is not None and len(self._var) - 2 >= self.max_nodes:
            raise NodeLimitError(
                f'ZBDD node limit of {self.max_nodes} exceeded')
        u = len(self._var)
        self._var.append(var)
        self._lo.append(lo)
        self._hi.append(hi)
        self._unique[key] = u
        return u

    def _remember(self, key, u):
        cache = self._cache
        if len(cache) >= self.cache_limit:
            cache.clear()
            self.cache_clears += 1
        cache[key] = u

    def clear_cache(self):
        self._cache.clear()

    # construction

    def single(self, v):
        """The family `{{v}}`."""
        return self.node(v, EMPTY, UNIT)

    def cube(self, combo):
        """The family holding the single combination `combo`."""
        u = UNIT
        for v in sorted(set(combo), reverse=True):
            u = self.node(v, EMPTY, u)
        return u

    def family(self, combos):
        """The family of the given combinations."""
        u = EMPTY
        for c in combos:
            u = self.union(u, self.cube(c))
        return u

    # set algebra

    def union(self, f, g):
        if f == g or g == EMPTY:
            return f
        if f == EMPTY:
            return g
        if f > g:
            f, g = g, f
        key = (((f << 40) | g) << 4) | _UNION
        r = self._cache.get(key)
        if r is not None:
            return r
        vf = self._var[f]
        vg = self._var[g]
        if vf < vg:
            r = self.node(vf, self.union(self._lo[f], g), self._hi[f])
        elif vf > vg:
            r = self.node(vg, self.union(f, self._lo[g]), self._hi[g])
        else:
            r = self.node(
                vf,
                self.union(self._lo[f], self._lo[g]),
                self.union(self._hi[f], self._hi[g]))
        self._remember(key, r)
        return r

    def intersect(self, f, g):
        if f == g:
            return f
        if f == EMPTY or g == EMPTY:
            return EMPTY
        if f > g:
            f, g = g, f
        key = (((f << 40) | g) << 4) | _INTERSECT
        r = self._cache.get(key)
        if r is not None:
            return r
        vf = self._var[f]
        vg = self._var[g]
        if vf < vg:
            r = self.intersect(self._lo[f], g)
        elif vf > vg:
            r = self.intersect(f, self._lo[g])
        else:
            r = self.node(
                vf,
                self.intersect(self._lo[f], self._lo[g]),
                self.intersect(self._hi[f], self._hi[g]))
        self._remember(key, r)
        return r

    def diff(self, f, g):
        if f == g or f == EMPTY:
            return EMPTY
        if g == EMPTY:
            return f
        key = (((f << 40) | g) << 4) | _DIFF
        r = self._cache.get(key)
        if r is not None:
            return r
        vf = self._var[f]
        vg = self._var[g]
        if vf < vg:
            r = self.node(vf, self.diff(self._lo[f], g), self._hi[f])
        elif vf > vg:
            r = self.diff(f, self._lo[g])
        else:
            r = self.node(
                vf,
                self.diff(self._lo[f], self._lo[g]),
                self.diff(self._hi[f], self._hi[g]))
        self._remember(key, r)
        return r

    def xor(self, f, g):
        """Symmetric difference."""
        if f == g:
            return EMPTY
        if f == EMPTY:
            return g
        if g == EMPTY:
            return f
        if f > g:
            f, g = g, f
        key = (((f << 40) | g) << 4) | _XOR
        r = self._cache.get(key)
        if r is not None:
            return r
        vf = self._var[f]
        vg = self._var[g]
        if vf < vg:
            r = self.node(vf, self.xor(self._lo[f], g), self._hi[f])
        elif vf > vg:
            r = self.node(vg, self.xor(f, self._lo[g]), self._hi[g])
        else:
            r = self.node(
                vf,
                self.xor(self._lo[f], self._lo[g]),
                self.xor(self._hi[f], self._hi[g]))
        self._remember(key, r)
        return r

    def attach(self, f, v):
        """Add `v` to every combination of `f`: `{c | {v} : c in f}`."""
        if f == EMPTY:
            return EMPTY
        vf = self._var[f]
        if v < vf:
            return self.node(v, EMPTY, f)
        key = (((f << 40) | v) << 4) | _ATTACH
        r = self._cache.get(key)
        if r is not None:
            return r
        if v == vf:
            r = self.node(v, EMPTY, self.union(self._lo[f], self._hi[f]))
        else:
            r = self.node(
                vf, self.attach(self._lo[f], v), self.attach(self._hi[f], v))
        self._remember(key, r)
        return r

    def permit(self, f, g):
        """Combinations of `f` that are subsets of some combination of `g`."""
        if f == EMPTY or g == EMPTY:
            return EMPTY
        if f == UNIT:
            return UNIT
        if g == UNIT:
            return UNIT if self.has_empty(f) else EMPTY
        key = (((f << 40) | g) << 4) | _PERMIT
        r = self._cache.get(key)
        if r is not None:
            return r
        vf = self._var[f]
        vg = self._var[g]
        if vf < vg:
            r = self.permit(self._lo[f], g)
        elif vf > vg:
            r = self.permit(f, self.union(self._lo[g], self._hi[g]))
        else:
            r = self.node(
                vf,
                self.permit(
                    self._lo[f], self.union(self._lo[g], self._hi[g])),
                self.permit(self._hi[f], self._hi[g]))
        self._remember(key, r)
        return r

    def restrict(self, f, g):
        """Combinations of `f` that are supersets of some combination of `g`."""
        if f == EMPTY or g == EMPTY:
            return EMPTY
        if self.has_empty(g):
            return f
        if f == UNIT:
            return EMPTY
        key = (((f << 40) | g) << 4) | _RESTRICT
        r = self._cache.get(key)
        if r is not None:
            return r
        vf = self._var[f]
        vg = self._var[g]
        if vf < vg:
            r = self.node(
                vf, self.restrict(self._lo[f], g),
                self.restrict(self._hi[f], g))
        elif vf > vg:
            r = self.restrict(f, self._lo[g])
        else:
            r = self.node(
                vf,
                self.restrict(self._lo[f], self._lo[g]),
                self.restrict(
                    self._hi[f], self.union(self._lo[g], self._hi[g])))
        self._remember(key, r)
        return r

    # queries

    def has_empty(self, f):
        """Whether the empty combination belongs to `f`."""
        lo = self._lo
        while f > UNIT:
            f = lo[f]
        return f == UNIT

    def contains(self, f, combo):
        """Whether the combination `combo` belongs to `f`."""
        for v in sorted(set(combo)):
            while self._var[f] < v:
                f = self._lo[f]
            if self._var[f] != v:
                return False
            f = self._hi[f]
        return self.has_empty(f)

    def count(self, f):
        """Exact number of combinations in `f`."""
        counts = self._counts
        r = counts.get(f)
        if r is None:
            r = self.count(self._lo[f]) + self.count(self._hi[f])
            counts[f] = r
        return r

    def enumerate(self, f, limit=None):
        """List up to `limit` combinations of `f` as ascending var tuples.

        The order is a depth-first traversal taking 1-edges before 0-edges.
        """
        out = []
        if limit is not None and limit <= 0:
            return out
        for c in self.iter_combos(f):
            out.append(c)
            if limit is not None and len(out) >= limit:
                break
        return out

    def iter_combos(self, f):
        """Yield the combinations of `f` in 1-edge-first depth-first order."""
        stack = [(f, ())]
        while stack:
            u, prefix = stack.pop()
            if u == EMPTY:
                continue
            if u == UNIT:
                yield prefix
                continue
            # pushed last, popped first
            stack.append((self._lo[u], prefix))
            stack.append((self._hi[u], prefix + (self._var[u],)))

    def size(self, f):
        """Number of internal nodes reachable from `f`."""
        seen = set()
        todo = [f]
        while todo:
            u = todo.pop()
            if u <= UNIT or u in seen:
                continue
            seen.add(u)
            todo.append(self._lo[u])
            todo.append(self._hi[u])
        return len(seen)

    def support_vars(self, f):
        """Set of variables occurring in some combination of `f`."""
        out = set()
        seen = set()
        todo = [f]
        while todo:
            u = todo.pop()
            if u <= UNIT or u in seen:
                continue
            seen.add(u)
            out.add(self._var[u])
            todo.append(self._lo[u])
            todo.append(self._hi[u])
        return out

    def audit(self):
        """Check the store invariants; raise `AssertionError` on violation."""
        assert len(self._unique) == len(self._var) - 2
        for u in range(2, len(self._var)):
            v, lo, hi = self._var[u], self._lo[u], self._hi[u]
            assert hi != EMPTY, f'node {u} has a 1-edge to EMPTY'
            assert v < self._var[lo] and v < self._var[hi], (
                f'node {u} violates the variable order')
            assert self._unique[(v << 80) | (lo << 40) | hi] == u
