import pytest

from kpaths.gen import layered_dag
from kpaths.graph import parse
from kpaths.oracle import enumerate_paths, kth_length, reference_top_k
from kpaths.pathdb import (
    QueryError, build, default_offset, iteration_bound, select_top_k)
from kpaths.vsop import Vsop
from kpaths.zbdd import NodeStore

from conftest import random_corpus

a, b, c, d = 0, 1, 2, 3


def lengths_by_vertices(db, x):
    return {
        frozenset(db.name_of[v] for v in t.combo): t.value - db.offset
        for t in x.terms()}


def oracle_set(paths):
    return {(frozenset(p), length) for p, length in paths}


def result_set(db, res):
    return {
        (frozenset(db.name_of[v] for v in t.combo), t.value - db.offset)
        for t in res.paths.terms()}


def test_example_partials(example_dag):
    db = build(example_dag, keep_partials=True)
    assert db.offset == 1
    assert lengths_by_vertices(db, db.partials['v7']) == {
        frozenset({'v2', 'v7'}): 4, frozenset({'v3', 'v7'}): 4}
    assert lengths_by_vertices(db, db.paths) == {
        frozenset({'v4', 'v8'}): 4,
        frozenset({'v2', 'v7', 'v8'}): 6,
        frozenset({'v3', 'v7', 'v8'}): 6}
    # internal values carry the offset
    assert db.partials['v7'].max_val() == 4 + db.offset
    assert db.partials['v2'].is_zero()


def test_single_edge():
    db = build(parse('a b -4'))
    assert db.offset == 5
    assert lengths_by_vertices(db, db.paths) == {frozenset({'a', 'b'}): -4}


def test_layered_5x3():
    dag = layered_dag(5, 3, wmin=1, wmax=1)
    db = build(dag)
    assert db.count_paths() == 81 == len(enumerate_paths(dag))
    assert db.longest_length() == db.shortest_length() == 4


def test_counts_and_extremes(example_dag):
    db = build(example_dag)
    assert (db.count_paths(), db.longest_length(), db.shortest_length()) == (3, 6, 4)


def test_layered_20x10_count():
    db = build(layered_dag(20, 10, wmin=1, wmax=1))
    assert db.count_paths() == 10 ** 19
    assert db.longest_length() == db.shortest_length() == 19


def test_empty_graph():
    db = build(parse(''))
    assert db.count_paths() == 0
    with pytest.raises(QueryError):
        db.longest_length()
    with pytest.raises(QueryError):
        db.kth_longest(1)
    res = db.top_k_longest(3)
    assert res.count == 0 and res.threshold is None


def values(mapping):
    s = NodeStore()
    return Vsop.from_dict(s, {frozenset(k): v for k, v in mapping.items()})


def combos(sel):
    return {t.combo for t in sel.paths.terms()}


def test_select_longest_hand_cases():
    L = values({(a, b): 5, (b, c): 3, (a,): 1})
    sel = select_top_k(L, 2, 'longest')
    assert combos(sel) == {frozenset({a, b}), frozenset({b, c})}
    assert sel.threshold == 3

    L = values({(a,): 5, (b,): 3, (c,): 3, (d,): 1})
    sel = select_top_k(L, 2, 'longest')
    assert combos(sel) == {frozenset({a}), frozenset({b}), frozenset({c})}
    assert sel.threshold == 3
    assert sel.paths.count_terms() == 3

    sel = select_top_k(L, 4, 'longest')
    assert sel.paths == L and sel.threshold == 1


def test_select_shortest_hand_cases():
    L = values({(a,): 5, (b,): 3, (d,): 1})
    sel = select_top_k(L, 1, 'shortest')
    assert combos(sel) == {frozenset({d})} and sel.threshold == 1

    L = values({(a,): 5, (b,): 3, (c,): 3, (d,): 1})
    sel = select_top_k(L, 2, 'shortest')
    assert combos(sel) == {frozenset({d}), frozenset({b}), frozenset({c})}
    assert sel.threshold == 3
    sel = select_top_k(L, 9, 'shortest')
    assert sel.paths == L and sel.threshold == 5


def test_select_rejects_bad_k():
    L = values({(a,): 5})
    with pytest.raises(QueryError, match='K must be positive'):
        select_top_k(L, 0, 'longest')
    with pytest.raises(QueryError):
        select_top_k(L, 1, 'widest')


def test_select_range_straddling_zero():
    # the first midpoint is 0 here; the search must not mistake it for a
    # previous midpoint and stop early
    L = values({(a,): -1, (b,): 1, (c,): 2})
    sel = select_top_k(L, 2, 'longest')
    assert combos(sel) == {frozenset({b}), frozenset({c})}
    assert sel.threshold == 1
    sel = select_top_k(L, 2, 'shortest')
    assert combos(sel) == {frozenset({a}), frozenset({b})}
    assert sel.threshold == 1


STAR = 's a 5\ns b 3\ns c 1\n'


def test_kth_longest():
    db = build(parse(STAR))
    t = db.kth_longest(2)
    assert t.length == 3
    assert db.path_of(t.combo, t.length) == (('s', 'b'), 3)
    assert db.kth_longest(1).length == 5
    tied = build(parse(STAR + 's d 3\n'))
    t = tied.kth_longest(2)
    assert t.length == 3
    assert tied.path_of(t.combo)[0][1] in ('b', 'd')
    assert tied.kth_longest(2) == t


def test_kth_shortest():
    db = build(parse(STAR))
    assert db.kth_shortest(2).length == 3
    assert db.kth_shortest(1).length == 1
    one = build(parse('x y 7'))
    t = one.kth_shortest(1)
    assert one.path_of(t.combo, t.length) == (('x', 'y'), 7)


def test_top_k_all(example_dag):
    db = build(example_dag)
    res = db.top_k_longest(3)
    assert res.count == 3 and res.threshold == 4
    res = db.top_k_longest(2)
    assert res.count == 2 and res.threshold == 6
    res = db.top_k_shortest(1)
    assert res.count == 1 and res.threshold == 4


def test_materialize(example_dag):
    db = build(example_dag)
    res = db.top_k_longest(1)
    rows = db.materialize(res, 10)
    assert sorted(rows) == [(('v2', 'v7', 'v8'), 6), (('v3', 'v7', 'v8'), 6)]
    assert db.materialize(res, 0) == []
    allrows = db.materialize(db.top_k_shortest(5), 10)
    assert [length for _, length in allrows] == [4, 6, 6]
    single = build(parse('a b 1'))
    assert single.materialize(single.top_k_longest(1), 5) == [(('a', 'b'), 1)]


def test_materialize_detects_non_path(example_dag):
    db = build(example_dag)
    bogus = frozenset({db.var_of['v2'], db.var_of['v8']})
    with pytest.raises(AssertionError, match='does not induce a path'):
        db.path_of(bogus)
    ok = frozenset(db.var_of[v] for v in ('v2', 'v7', 'v8'))
    with pytest.raises(AssertionError):
        db.path_of(ok, 99)


def test_zero_and_negative_lengths():
    db = build(parse('a b 3\nb c -3\na c -2\n'))
    assert db.offset == 6
    assert lengths_by_vertices(db, db.paths) == {
        frozenset('abc'): 0, frozenset('ac'): -2}
    assert db.longest_length() == 0
    assert db.kth_longest(2).length == -2


def check_oracle(dag, db=None):
    db = db or build(dag)
    paths = enumerate_paths(dag)
    assert db.count_paths() == len(paths)
    assert lengths_by_vertices(db, db.paths) == {
        frozenset(p): length for p, length in paths}
    for mode in ('longest', 'shortest'):
        for k in range(1, len(paths) + 1):
            res = db.top_k(k, mode)
            want = reference_top_k(paths, k, mode)
            assert result_set(db, res) == oracle_set(want)
            assert res.count == len(want)
            assert res.threshold == kth_length(paths, k, mode)
            assert db.kth(k, mode).length == kth_length(paths, k, mode)


def test_oracle_equivalence_sample():
    for dag in random_corpus(120, seed=11):
        check_oracle(dag)


def test_var_orders_agree():
    for dag in random_corpus(40, seed=5):
        rev = build(dag, var_order='reverse')
        topo = build(dag, var_order='topo')
        check_oracle(dag, topo)
        for k in (1, 3, 7):
            for mode in ('longest', 'shortest'):
                r1 = rev.top_k(k, mode)
                r2 = topo.top_k(k, mode)
                assert result_set(rev, r1) == result_set(topo, r2)
                assert r1.threshold == r2.threshold


def test_threshold_characterization_and_iterations():
    for dag in random_corpus(80, seed=17):
        db = build(dag)
        L = db.paths
        lo, hi = L.min_val(), L.max_val()
        n = db.count_paths()
        for k in range(1, n + 1):
            res = db.top_k_longest(k)
            t = res.threshold + db.offset
            assert L.count_const('GE', t) >= k > L.count_const('GE', t + 1)
            assert res.iterations <= iteration_bound(lo, hi)
            res = db.top_k_shortest(k)
            t = res.threshold + db.offset
            assert L.count_const('LE', t) >= k > L.count_const('LE', t - 1)
            assert res.iterations <= iteration_bound(lo, hi)


def test_offset_invariance():
    for dag in random_corpus(60, seed=23):
        base = build(dag)
        shifted = build(dag, offset=default_offset(dag) + 7)
        assert shifted.offset == base.offset + 7
        assert shifted.count_paths() == base.count_paths()
        assert shifted.longest_length() == base.longest_length()
        assert shifted.shortest_length() == base.shortest_length()
        for k in range(1, base.count_paths() + 1):
            for mode in ('longest', 'shortest'):
                r1, r2 = base.top_k(k, mode), shifted.top_k(k, mode)
                assert (r1.threshold, r1.count) == (r2.threshold, r2.count)
                assert base.materialize(r1, 1000) == shifted.materialize(r2, 1000)


def test_offset_must_cover_negative_weights():
    with pytest.raises(ValueError):
        build(parse('a b -3'), offset=2)


def test_pruning_soundness_sample():
    for dag in random_corpus(60, seed=29):
        store = NodeStore()
        full = build(dag, store=store)
        for k in range(1, full.count_paths() + 1):
            for mode in ('longest', 'shortest'):
                pruned = build(dag, (k, mode), store=store)
                r1, r2 = full.top_k(k, mode), pruned.top_k(k, mode)
                assert r1.paths == r2.paths
                assert (r1.threshold, r1.count) == (r2.threshold, r2.count)


def test_pruning_keeps_fewer_partials():
    dag = layered_dag(6, 4, seed=3)
    store = NodeStore()
    full = build(dag, store=store)
    pruned = build(dag, (5, 'longest'), store=store)
    assert pruned.count_paths() < full.count_paths()
    assert full.top_k_longest(5).paths == pruned.top_k_longest(5).paths
