"""Graph builders and hypothesis strategies shared by the test modules."""

import itertools
import random

from hypothesis import strategies as st

from stardecomp.graph import Graph


@st.composite
def graphs(draw, max_n: int = 9):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def no_perfect_matching_cubic() -> Graph:
    """Order-16 cubic graph without a perfect matching: a hub joined to three
    copies of K4-minus-an-edge, each through a subdividing vertex."""
    edges = []
    for b in range(3):
        base = 1 + 5 * b
        a, c, x, y, sub = base, base + 1, base + 2, base + 3, base + 4
        edges += [(a, c), (a, x), (a, y), (c, x), (c, y), (sub, x), (sub, y), (0, sub)]
    return Graph.from_edges(16, edges)
