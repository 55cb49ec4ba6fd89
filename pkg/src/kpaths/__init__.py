"""Nonenumerative k longest / k shortest paths in weighted DAGs."""
from kpaths.graph import Dag, GraphError, parse, render, topo_sort
from kpaths.pathdb import PathDb, QueryError, QueryResult, build
from kpaths.vsop import Term, Vsop
from kpaths.zbdd import EMPTY, UNIT, NodeLimitError, NodeStore

__all__ = [
    'Dag', 'GraphError', 'parse', 'render', 'topo_sort',
    'PathDb', 'QueryError', 'QueryResult', 'build',
    'Term', 'Vsop',
    'EMPTY', 'UNIT', 'NodeLimitError', 'NodeStore',
]
