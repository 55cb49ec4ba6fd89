"""Seeded benchmark DAG generators.

Randomness comes from SplitMix64 so that a seed yields the same graph in
any language.  The seed is taken modulo 2**64 as the initial state.
Weights are drawn uniformly from ``[wmin, wmax]`` by rejection sampling;
edge coin flips compare ``(next() >> 11) * 2**-53`` against the probability.
"""
from kpaths.graph import Dag

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed):
        self.state = seed & _MASK

    def next(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def random(self):
        """Uniform float in [0, 1) with 53 bits."""
        return (self.next() >> 11) * (1.0 / (1 << 53))

    def randint(self, lo, hi):
        """Uniform integer in [lo, hi], unbiased."""
        if hi < lo:
            raise ValueError(f'empty range [{lo}, {hi}]')
        span = hi - lo + 1
        limit = (1 << 64) - (1 << 64) % span
        while True:
            r = self.next()
            if r < limit:
                return lo + r % span


def _check_weights(wmin, wmax):
    if wmin > wmax:
        raise ValueError(f'wmin {wmin} exceeds wmax {wmax}')


def random_dag(vertices, edge_prob, seed=0, wmin=1, wmax=10):
    """Each pair ``i < j`` gets edge ``v_i -> v_j`` with probability `edge_prob`.

    For every pair in order a coin is flipped, and a weight is drawn only
    when the edge is kept.  Vertices without edges do not appear.
    """
    if vertices < 0:
        raise ValueError('vertex count must be nonnegative')
    if not 0.0 <= edge_prob <= 1.0:
        raise ValueError('edge probability must lie in [0, 1]')
    _check_weights(wmin, wmax)
    rng = SplitMix64(seed)
    width = len(str(max(vertices - 1, 0)))
    names = [f'v{i:0{width}d}' for i in range(vertices)]
    edges = []
    for i in range(vertices):
        for j in range(i + 1, vertices):
            if rng.random() < edge_prob:
                edges.append((names[i], names[j], rng.randint(wmin, wmax)))
    return Dag(tuple(edges))


def layered_dag(layers, width, seed=0, wmin=1, wmax=10):
    """Layered DAG rooted at a single source.

    Layer 0 is one source vertex; layers 1 .. layers-1 hold `width` vertices
    each, and consecutive layers are completely connected.  There are
    ``width ** (layers - 1)`` source-to-sink paths, each with
    ``layers - 1`` edges.
    """
    if layers < 2 or width < 1:
        raise ValueError('need at least 2 layers of width >= 1')
    _check_weights(wmin, wmax)
    rng = SplitMix64(seed)
    lw = len(str(layers - 1))
    ww = len(str(width - 1))
    names = [[f'L{l:0{lw}d}_{i:0{ww}d}' for i in range(1 if l == 0 else width)]
             for l in range(layers)]
    edges = []
    for l in range(layers - 1):
        for u in names[l]:
            for v in names[l + 1]:
                edges.append((u, v, rng.randint(wmin, wmax)))
    return Dag(tuple(edges))
