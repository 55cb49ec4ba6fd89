import pytest
from hypothesis import strategies as st

from kpaths import selfcheck
from kpaths.gen import SplitMix64, random_dag
from kpaths.graph import parse
from kpaths.vsop import Vsop
from kpaths.zbdd import NodeStore

EXAMPLE = selfcheck.EXAMPLE_EDGES


@pytest.fixture
def store():
    return NodeStore()


@pytest.fixture
def F(store):
    return selfcheck.expr(store, '4abc + 5ab + 3bc + a')


@pytest.fixture
def G(store):
    return selfcheck.expr(store, '5ab - 3bc')


@pytest.fixture
def example_dag():
    return parse(EXAMPLE)


def named(x):
    """Vsop over a, b, c as ``{'ab': 5, ...}``."""
    return selfcheck.as_named(x.to_dict())


combos = st.frozensets(st.integers(0, 4), max_size=5)
explicit_maps = st.dictionaries(
    combos, st.integers(-9, 9).filter(bool), max_size=8)


def dp_path_count(dag):
    """Number of source-to-sink paths by dynamic programming over topo order."""
    ways = {}
    for v in dag.topo_order:
        ways[v] = 1 if dag.is_source(v) else sum(ways[u] for u in dag.pred[v])
    return sum(ways[v] for v in dag.sinks)


def random_corpus(n, seed=2024):
    """`n` random DAGs with 2..14 vertices and weights in [-10, 10].

    Graphs without any edge are skipped so each member has at least one path.
    """
    rng = SplitMix64(seed)
    out = []
    while len(out) < n:
        vertices = rng.randint(2, 14)
        prob = 0.1 + 0.4 * rng.random()
        dag = random_dag(vertices, prob, seed=rng.next(), wmin=-10, wmax=10)
        if dag.edges:
            out.append(dag)
    return out


def vsop_from(store, mapping):
    return Vsop.from_dict(store, mapping)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == 'call':
        item.call_report = rep


@pytest.fixture
def criterion(request):
    """Print one PASS/FAIL line for an acceptance criterion after it runs.

    Use as ``criterion('name')`` inside the test.
    """
    label = []
    yield label.append
    rep = getattr(request.node, 'call_report', None)
    status = 'PASS' if rep is not None and rep.passed else 'FAIL'
    name = label[0] if label else request.node.name
    terminal = request.config.pluginmanager.get_plugin('terminalreporter')
    line = f'[acceptance] {status}  {name}'
    if terminal is not None:
        terminal.write_line('')
        terminal.write_line(line)
    else:
        print(line)
