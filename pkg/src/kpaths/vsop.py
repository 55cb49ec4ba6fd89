"""Valued sums of products over ZBDDs.

An expression maps combinations of variables to nonzero integers, for
example ``4abc + 5ab + 3bc + a``.  Addition is ordinary while multiplication
is idempotent on variables (``a * a == a``).

Values are stored in base -2: digit ``i`` is a ZBDD holding the combinations
whose value has a 1 in position ``i``, so a combination's value is
``sum(d_i * (-2) ** i)``.  Every operation below works on the digit ZBDDs
and never lists the terms.
"""
from dataclasses import dataclass

from kpaths.zbdd import EMPTY, TERMINAL_LEVEL, UNIT

def _negate(c):
    return -c


def to_negabinary(value):
    """Base -2 digits of `value`, least significant first."""
    digits = []
    while value:
        d = value & 1
        digits.append(d)
        value = (value - d) // -2
    return digits


def from_negabinary(digits):
    return sum(d * (-2) ** i for i, d in enumerate(digits))


@dataclass(frozen=True)
class Term:
    """A combination with its value."""

    combo: frozenset
    value: int


class Vsop:
    """An integer-valued combination set.

    `digits` is a tuple of ZBDD handles in `store`, least significant first,
    with no trailing EMPTY.  Because the encoding and the ZBDDs are both
    canonical, two expressions from one store are equal iff their digit
    tuples are equal, which is what ``==`` tests.  The element-wise
    comparisons of the algebra are the methods `eq`, `ne`, `lt`, `le`, `gt`
    and `ge`.
    """

    __slots__ = ('store', 'digits')

    def __init__(self, store, digits=()):
        digits = list(digits)
        while digits and digits[-1] == EMPTY:
            digits.pop()
        self.store = store
        self.digits = tuple(digits)

    # construction

    @classmethod
    def zero(cls, store):
        return cls(store)

    @classmethod
    def const(cls, store, value):
        return cls.from_set(store, UNIT, value)

    @classmethod
    def from_set(cls, store, f, value=1):
        """Give every combination of the ZBDD `f` the same `value`."""
        return cls(store, [f if d else EMPTY for d in to_negabinary(value)])

    @classmethod
    def from_term(cls, store, value, combo=()):
        return cls.from_set(store, store.cube(combo), value)

    @classmethod
    def from_dict(cls, store, mapping):
        """Build from an explicit `{combo: value}` mapping."""
        digits = []
        for combo, value in mapping.items():
            cube = None
            for i, d in enumerate(to_negabinary(value)):
                if not d:
                    continue
                if cube is None:
                    cube = store.cube(combo)
                while len(digits) <= i:
                    digits.append(EMPTY)
                digits[i] = store.union(digits[i], cube)
        return cls(store, digits)

    def _new(self, digits):
        return Vsop(self.store, digits)

    def _check(self, other):
        if not isinstance(other, Vsop):
            raise TypeError(f'expected Vsop, got {type(other).__name__}')
        if other.store is not self.store:
            raise ValueError('expressions belong to different stores')

    # structure

    def __eq__(self, other):
        return (
            isinstance(other, Vsop) and other.store is self.store
            and other.digits == self.digits)

    def __hash__(self):
        return hash(self.digits)

    def __bool__(self):
        return bool(self.digits)

    def is_zero(self):
        return not self.digits

    def is_constant(self):
        return all(f in (EMPTY, UNIT) for f in self.digits)

    def support(self):
        """ZBDD of all combinations carrying a nonzero value."""
        s = EMPTY
        for f in self.digits:
            s = self.store.union(s, f)
        return s

    def unit(self):
        """Same combinations, all valued 1 (``x == x`` in the algebra)."""
        return Vsop(self.store, (self.support(),))

    def value_of(self, combo):
        """Value of a single combination (0 when absent)."""
        return from_negabinary(
            [self.store.contains(f, combo) for f in self.digits])

    def terms(self, limit=None):
        """List up to `limit` terms in 1-edge-first traversal order."""
        combos = self.store.enumerate(self.support(), limit)
        return [Term(frozenset(c), self.value_of(c)) for c in combos]

    def to_dict(self):
        return {t.combo: t.value for t in self.terms()}

    def node_size(self):
        """Number of distinct ZBDD nodes shared by all digits."""
        s = self.store
        seen = set()
        todo = list(self.digits)
        while todo:
            u = todo.pop()
            if u <= UNIT or u in seen:
                continue
            seen.add(u)
            todo.append(s.lo(u))
            todo.append(s.hi(u))
        return len(seen)

    def format(self, names=None):
        """Render as ``4abc + 5ab - 3bc``; variables are named by `names`."""
        if not self.digits:
            return '0'
        parts = []
        for t in self.terms():
            combo = ''.join(
                str(names[v]) if names is not None else f'x{v}'
                for v in sorted(t.combo))
            mag = abs(t.value)
            body = combo if combo and mag == 1 else f'{mag}{combo}'
            sign = '-' if t.value < 0 else '+'
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ('-' if first_sign == '-' else '') + first
        for sign, body in parts[1:]:
            out += f' {sign} {body}'
        return out

    def __repr__(self):
        return f'Vsop({self.format()})'

    # arithmetic

    def shift(self, places):
        """Multiply every value by ``(-2) ** places``."""
        if not self.digits:
            return self
        return self._new((EMPTY,) * places + self.digits)

    def __add__(self, other):
        self._check(other)
        return self._new(_vadd(self.store, self.digits, other.digits))

    def __neg__(self):
        return self._new(_vmap(self.store, self.digits, 'neg', _negate))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k):
        """Multiply every value by the integer `k`."""
        if k == 0 or not self.digits:
            return Vsop(self.store)
        if k == 1:
            return self
        if len(self.digits) == 1:
            f = self.digits[0]
            return self._new([f if d else EMPTY for d in to_negabinary(k)])
        return self._new(
            _vmap(self.store, self.digits, ('*', k), lambda c: c * k))

    def add_to_values(self, k):
        """Add `k` to the value of every existing term.

        Terms whose value becomes 0 vanish.
        """
        if k == 0:
            return self
        return self._new(
            _vmap(self.store, self.digits, ('+c', k), lambda c: c + k))

    def attach(self, v):
        """Multiply by the single variable `v`."""
        s = self.store
        if not self.digits:
            return self
        if s.restrict(self.support(), s.single(v)) == EMPTY:
            return self._new([s.attach(f, v) for f in self.digits])
        # some combinations already hold v and may merge with others
        return self * Vsop.from_term(s, 1, (v,))

    def __mul__(self, other):
        self._check(other)
        return _mul(self, other)

    # comparisons and filters

    def _split(self, k):
        return _partition(self.store, self.digits, self.support(), k)

    def _cmp(self, other, op):
        self._check(other)
        d = self - other
        s = self.store.union(self.support(), other.support())
        lt, eq, gt = _partition(self.store, d.digits, s, 0)
        return Vsop(self.store, (_select(self.store, op, lt, eq, gt),))

    def eq(self, other):
        return self._cmp(other, 'EQ')

    def ne(self, other):
        return self._cmp(other, 'NE')

    def lt(self, other):
        return self._cmp(other, 'LT')

    def le(self, other):
        return self._cmp(other, 'LE')

    def gt(self, other):
        return self._cmp(other, 'GT')

    def ge(self, other):
        return self._cmp(other, 'GE')

    def filter_const(self, op, k):
        """Unit-valued set of combinations whose value `op` `k` holds."""
        lt, eq, gt = self._split(k)
        return Vsop(self.store, (_select(self.store, op, lt, eq, gt),))

    def eq_const(self, k):
        return self.filter_const('EQ', k)

    def ne_const(self, k):
        return self.filter_const('NE', k)

    def lt_const(self, k):
        return self.filter_const('LT', k)

    def le_const(self, k):
        return self.filter_const('LE', k)

    def gt_const(self, k):
        return self.filter_const('GT', k)

    def ge_const(self, k):
        return self.filter_const('GE', k)

    def count_const(self, op, k):
        """Number of terms whose value `op` `k` holds."""
        lt, eq, gt = self._split(k)
        return self.store.count(_select(self.store, op, lt, eq, gt))

    def terms_op(self, op, other):
        """Terms of self, values kept, whose value `op` the constant `other`."""
        self._check(other)
        if not other.is_constant():
            raise ValueError('not a constant expression')
        return self.filter_then(self.filter_const(op, other.get_int()))

    def terms_eq(self, other):
        return self.terms_op('EQ', other)

    def terms_ne(self, other):
        return self.terms_op('NE', other)

    def terms_lt(self, other):
        return self.terms_op('LT', other)

    def terms_le(self, other):
        return self.terms_op('LE', other)

    def terms_gt(self, other):
        return self.terms_op('GT', other)

    def terms_ge(self, other):
        return self.terms_op('GE', other)

    def filter_then(self, sel):
        """Terms of self whose combination is in the support of `sel`."""
        self._check(sel)
        s = sel.support()
        return self._new([self.store.intersect(f, s) for f in self.digits])

    def permit(self, other):
        self._check(other)
        g = other.support()
        return self._new([self.store.permit(f, g) for f in self.digits])

    def restrict(self, other):
        self._check(other)
        g = other.support()
        return self._new([self.store.restrict(f, g) for f in self.digits])

    # aggregates

    def count_terms(self):
        return self.store.count(self.support())

    def total_val(self):
        return sum(
            (-2) ** i * self.store.count(f) for i, f in enumerate(self.digits))

    def max_val(self):
        return _extreme(self, True)[0]

    def min_val(self):
        return _extreme(self, False)[0]

    def max_cover(self):
        value, cover = _extreme(self, True)
        return Term(frozenset(self.store.enumerate(cover, 1)[0]), value)

    def min_cover(self):
        value, cover = _extreme(self, False)
        return Term(frozenset(self.store.enumerate(cover, 1)[0]), value)

    def get_int(self):
        if not self.is_constant():
            raise ValueError('not a constant expression')
        return from_negabinary([f == UNIT for f in self.digits])


def _int_of(digits):
    return from_negabinary([f == UNIT for f in digits])


def _const_digits(value):
    return tuple(UNIT if d else EMPTY for d in to_negabinary(value))


def _cofactor(store, digits, v):
    """Split a digit vector on its top variable `v`."""
    var = store._var
    lo = []
    hi = []
    for f in digits:
        if var[f] == v:
            lo.append(store._lo[f])
            hi.append(store._hi[f])
        else:
            lo.append(f)
            hi.append(EMPTY)
    while lo and lo[-1] == EMPTY:
        lo.pop()
    while hi and hi[-1] == EMPTY:
        hi.pop()
    return tuple(lo), tuple(hi)


def _join(store, v, lo, hi):
    """Digit vector of ``lo + v * hi`` where neither side mentions `v`."""
    n = max(len(lo), len(hi))
    lo = lo + (EMPTY,) * (n - len(lo))
    hi = hi + (EMPTY,) * (n - len(hi))
    node = store.node
    return tuple(node(v, f, g) for f, g in zip(lo, hi))


def _vadd(store, a, b):
    """Add two digit vectors in one pass over their shared structure.

    Both vectors are cofactored on the topmost variable; once only
    terminals remain the digits spell the integer value of the empty
    combination and ordinary arithmetic takes over.
    """
    if not a:
        return b
    if not b:
        return a
    if a > b:
        a, b = b, a
    key = ('+', a, b)
    r = store._cache.get(key)
    if r is not None:
        return r
    var = store._var
    v = min(var[f] for f in a + b)
    if v == TERMINAL_LEVEL:
        r = _const_digits(_int_of(a) + _int_of(b))
    else:
        a0, a1 = _cofactor(store, a, v)
        b0, b1 = _cofactor(store, b, v)
        r = _join(store, v, _vadd(store, a0, b0), _vadd(store, a1, b1))
    store._remember(key, r)
    return r


def _vmap(store, a, tag, fn):
    """Replace every term value ``c`` by ``fn(c)``; zeros vanish.

    `tag` must identify `fn` for the operation cache.
    """
    if not a:
        return a
    key = (tag, a)
    r = store._cache.get(key)
    if r is not None:
        return r
    var = store._var
    v = min(var[f] for f in a)
    if v == TERMINAL_LEVEL:
        r = _const_digits(fn(_int_of(a)))
    else:
        a0, a1 = _cofactor(store, a, v)
        r = _join(store, v, _vmap(store, a0, tag, fn), _vmap(store, a1, tag, fn))
    store._remember(key, r)
    return r


def _partition(store, digits, support, k):
    """Split `support` by comparing each combination's value against `k`.

    Returns ZBDDs ``(lt, eq, gt)``.  Flipping the odd digits of a base -2
    numeral turns it into an ordinary binary numeral offset by a constant
    that depends only on the width, so a most-significant-first sweep
    compares values lexicographically.
    """
    kd = to_negabinary(k)
    n = max(len(digits), len(kd))
    lt = gt = EMPTY
    eq = support
    for i in reversed(range(n)):
        if eq == EMPTY:
            break
        f = digits[i] if i < len(digits) else EMPTY
        inside = store.intersect(eq, f)
        outside = store.diff(eq, f)
        kbit = kd[i] if i < len(kd) else 0
        if i % 2:
            ones, zeros, kbit = outside, inside, 1 - kbit
        else:
            ones, zeros = inside, outside
        if kbit:
            lt = store.union(lt, zeros)
            eq = ones
        else:
            gt = store.union(gt, ones)
            eq = zeros
    return lt, eq, gt


def _select(store, op, lt, eq, gt):
    if op == 'EQ':
        return eq
    if op == 'NE':
        return store.union(lt, gt)
    if op == 'LT':
        return lt
    if op == 'LE':
        return store.union(lt, eq)
    if op == 'GT':
        return gt
    if op == 'GE':
        return store.union(gt, eq)
    raise ValueError(f'unknown comparison {op!r}')


def _extreme(x, largest):
    """Return the largest (or smallest) value and the ZBDD attaining it."""
    store = x.store
    cover = x.support()
    if cover == EMPTY:
        raise ValueError('empty expression')
    bits = []
    for i in reversed(range(len(x.digits))):
        f = x.digits[i]
        # a 1 raises the value at even positions and lowers it at odd ones
        want = largest != bool(i % 2)
        inside = store.intersect(cover, f)
        outside = store.diff(cover, f)
        first, second = (inside, outside) if want else (outside, inside)
        if first != EMPTY:
            cover = first
            bits.append(int(want))
        else:
            cover = second
            bits.append(int(not want))
    return from_negabinary(bits[::-1]), cover


def _mul(x, y):
    store = x.store
    return Vsop(store, _vmul(store, x.digits, y.digits))


def _vmul(store, a, b):
    """Product of two digit vectors, splitting both on the top variable.

    With ``a = a0 + v*a1`` and ``b = b0 + v*b1`` and ``v*v == v``::

        a * b = a0*b0 + v * (a0*b1 + a1*b0 + a1*b1)
    """
    if not a or not b:
        return ()
    if a > b:
        a, b = b, a
    key = ('*', a, b)
    r = store._cache.get(key)
    if r is not None:
        return r
    var = store._var
    va = min(var[f] for f in a)
    vb = min(var[f] for f in b)
    if va == TERMINAL_LEVEL:
        k = _int_of(a)
        r = _vmap(store, b, ('*', k), lambda c: c * k)
    elif vb == TERMINAL_LEVEL:
        k = _int_of(b)
        r = _vmap(store, a, ('*', k), lambda c: c * k)
    else:
        v = min(va, vb)
        a0, a1 = _cofactor(store, a, v)
        b0, b1 = _cofactor(store, b, v)
        with_v = _vadd(
            store,
            _vadd(store, _vmul(store, a0, b1), _vmul(store, a1, b0)),
            _vmul(store, a1, b1))
        r = _join(store, v, _vmul(store, a0, b0), with_v)
    store._remember(key, r)
    return r
