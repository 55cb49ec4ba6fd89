import pytest

from kpaths.gen import layered_dag
from kpaths.graph import parse
from kpaths.oracle import (
    ExplicitVsop, PathExplosion, enumerate_paths, kth_length, reference_top_k)

from conftest import dp_path_count, random_corpus


def test_enumerate_example(example_dag):
    paths = enumerate_paths(example_dag)
    assert sorted(length for _, length in paths) == [4, 6, 6]
    assert set(paths) == {
        (('v2', 'v7', 'v8'), 6), (('v3', 'v7', 'v8'), 6), (('v4', 'v8'), 4)}


def test_enumerate_single_edge():
    assert enumerate_paths(parse('a b 5')) == [(('a', 'b'), 5)]


def test_enumerate_layered_5x3():
    paths = enumerate_paths(layered_dag(5, 3, wmin=1, wmax=1))
    assert len(paths) == 81
    assert {length for _, length in paths} == {4}


def test_guard():
    with pytest.raises(PathExplosion, match='path explosion'):
        enumerate_paths(layered_dag(6, 4), guard=100)


def test_enumerate_agrees_with_dp_count():
    for dag in random_corpus(100, seed=3):
        assert len(enumerate_paths(dag)) == dp_path_count(dag)


P = [(('a',), 5), (('b',), 3), (('c',), 3), (('d',), 1)]


def test_reference_top_k_hand_cases():
    assert reference_top_k(P, 2, 'longest') == P[:3]
    assert {p for p, _ in reference_top_k(P, 2, 'shortest')} == {('d',), ('b',), ('c',)}
    assert sorted(reference_top_k(P, 10, 'longest')) == sorted(P)
    assert reference_top_k(P, 1, 'longest') == [P[0]]
    assert reference_top_k(P, 1, 'shortest') == [P[3]]
    assert kth_length(P, 2, 'longest') == 3
    assert kth_length(P, 4, 'shortest') == 5
    with pytest.raises(ValueError):
        reference_top_k(P, 0, 'longest')


def test_explicit_model_worked_operations():
    a, b, c = 'a', 'b', 'c'
    F = ExplicitVsop({frozenset('abc'): 4, frozenset('ab'): 5,
                      frozenset('bc'): 3, frozenset('a'): 1})
    G = ExplicitVsop({frozenset('ab'): 5, frozenset('bc'): -3})
    assert (F + G).terms == {frozenset('abc'): 4, frozenset('ab'): 10, frozenset(a): 1}
    assert (F * G).terms == {frozenset('abc'): 5, frozenset('ab'): 30, frozenset('bc'): -9}
    assert F * ExplicitVsop({frozenset(): 1}) == F
    assert set(F.compare('GT', G).terms) == {frozenset('abc'), frozenset('bc'), frozenset(a)}
    assert F.permit(ExplicitVsop({frozenset((a, b)): 1})).terms == {
        frozenset('ab'): 5, frozenset(a): 1}
    assert F.restrict(ExplicitVsop({frozenset(c): 1})).terms == {
        frozenset('abc'): 4, frozenset('bc'): 3}
    assert (F.max_val(), F.min_val(), F.total_val()) == (5, 1, 13)
