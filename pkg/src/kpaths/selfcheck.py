"""Golden checks: the worked VSOP examples and the five-vertex DAG.

The expressions are F = 4abc + 5ab + 3bc + a and G = 5ab - 3bc over the
variables a < b < c.
"""
from kpaths.graph import parse
from kpaths.pathdb import build
from kpaths.vsop import Vsop
from kpaths.zbdd import NodeStore

NAMES = 'abc'

EXAMPLE_EDGES = """\
v2 v7 4
v3 v7 4
v4 v8 4
v7 v8 2
"""


def expr(store, text):
    """Parse ``'4abc + 5ab - 3bc'`` over single-letter variables a, b, c."""
    out = Vsop(store)
    text = text.replace(' ', '').replace('-', '+-')
    for part in filter(None, text.split('+')):
        sign = -1 if part.startswith('-') else 1
        part = part.lstrip('-')
        digits = ''
        while part and part[0].isdigit():
            digits += part[0]
            part = part[1:]
        value = sign * int(digits or '1')
        out = out + Vsop.from_term(store, value, [NAMES.index(ch) for ch in part])
    return out


def as_named(terms):
    """``{frozenset(var ids): value}`` to ``{'ab': 5, ...}``."""
    return {
        ''.join(NAMES[v] for v in sorted(combo)): value
        for combo, value in terms.items()}


def _named_dict(x):
    return as_named(x.to_dict())


def _expected(text):
    return _named_dict(expr(NodeStore(), text)) if text != '0' else {}


def _digit_sets(store, x):
    return [
        {''.join(NAMES[v] for v in c) for c in store.enumerate(f)}
        for f in x.digits]


def digit_checks():
    store = NodeStore()
    f = expr(store, '4abc + 5ab + 3bc + a')
    got = _digit_sets(store, f)
    want = [{'ab', 'bc', 'a'}, {'bc'}, {'abc', 'ab', 'bc'}]
    checks = []
    for i in range(3):
        value = got[i] if i < len(got) else set()
        checks.append((f'digit F_{i}', value == want[i], value, want[i]))
    checks.append(('digit count', len(got) == 3, len(got), 3))
    return checks


def operation_checks():
    store = NodeStore()
    f = expr(store, '4abc + 5ab + 3bc + a')
    g = expr(store, '5ab - 3bc')

    def e(text):
        return expr(store, text)

    rows = [
        ('F.Restrict(a)', lambda: f.restrict(e('a')), '4abc + 5ab + a'),
        ('F.Restrict(ab)', lambda: f.restrict(e('ab')), '4abc + 5ab'),
        ('F.Restrict(a+b)', lambda: f.restrict(e('a + b')),
         '4abc + 5ab + 3bc + a'),
        ('F.Permit(ab)', lambda: f.permit(e('ab')), '5ab + a'),
        ('F.Permit(abc)', lambda: f.permit(e('abc')), '4abc + 5ab + 3bc + a'),
        ('F.Permit(c)', lambda: f.permit(e('c')), '0'),
        ('F.TermsGE(3)', lambda: f.terms_ge(Vsop.const(store, 3)),
         '4abc + 5ab + 3bc'),
        ('F.TermsLT(3)', lambda: f.terms_lt(Vsop.const(store, 3)), 'a'),
        ('F+G', lambda: f + g, '4abc + 10ab + a'),
        ('F-G', lambda: f - g, '4abc + 6bc + a'),
        ('FxG', lambda: f * g, '5abc + 30ab - 9bc'),
        ('F==G', lambda: f.eq(g), 'ab'),
        ('F>G', lambda: f.gt(g), 'abc + bc + a'),
        ('G>F', lambda: g.gt(f), '0'),
        ('F<G', lambda: f.lt(g), '0'),
        ('F!=G', lambda: f.ne(g), 'abc + bc + a'),
    ]
    checks = []
    for name, fn, want_text in rows:
        got = _named_dict(fn())
        want = _expected(want_text)
        checks.append((name, got == want, got, want))

    scalars = [
        ('F.CountTerms()', f.count_terms(), 4),
        ('F.MaxVal()', f.max_val(), 5),
        ('F.MinVal()', f.min_val(), 1),
    ]
    for name, got, want in scalars:
        checks.append((name, got == want, got, want))
    for name, term, want in [
            ('F.MinCover()', f.min_cover(), {'a': 1}),
            ('F.MaxCover()', f.max_cover(), {'ab': 5})]:
        got = as_named({term.combo: term.value})
        checks.append((name, got == want, got, want))
    return checks


def dag_checks():
    dag = parse(EXAMPLE_EDGES)
    db = build(dag, keep_partials=True)

    def lengths(x):
        return {
            '.'.join(sorted(db.name_of[v] for v in t.combo)):
            t.value - db.offset for t in x.terms()}

    checks = []
    want7 = {'v2.v7': 4, 'v3.v7': 4}
    got7 = lengths(db.partials['v7'])
    checks.append(('example DAG partial paths at v7', got7 == want7, got7, want7))
    want8 = {'v4.v8': 4, 'v2.v7.v8': 6, 'v3.v7.v8': 6}
    got8 = lengths(db.paths)
    checks.append(('example DAG all paths', got8 == want8, got8, want8))
    for name, got, want in [
            ('example DAG path count', db.count_paths(), 3),
            ('example DAG longest length', db.longest_length(), 6),
            ('example DAG shortest length', db.shortest_length(), 4)]:
        checks.append((name, got == want, got, want))
    return checks


def run():
    """All checks as ``(name, ok, got, expected)`` tuples."""
    return digit_checks() + operation_checks() + dag_checks()
