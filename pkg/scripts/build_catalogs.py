#!/usr/bin/env python3
"""Regenerate the graph6 catalogs under src/stardecomp/data/.

Connected cubic graphs of order 4..12 are collected by sampling the pairing
model until the known isomorphism-class counts are reached. Bipartite cubic
graphs of order 8 and 16 are enumerated exhaustively as unions of three
disjoint perfect matchings (identity, a derangement up to conjugacy, and
every compatible third permutation).

Requires networkx (dev dependency) for isomorphism testing.
"""

import argparse
import itertools
import sys
from pathlib import Path

import networkx as nx
import numpy as np

from stardecomp.graph import Graph, encode_graph6, is_connected, random_cubic

DATA = Path(__file__).resolve().parents[1] / "src" / "stardecomp" / "data"

# connected cubic graphs up to isomorphism (OEIS A002851)
CONNECTED_CUBIC_COUNTS = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85}
# bipartite cubic graphs of order 8 and 16, connected (A006823) plus disconnected
BIPARTITE_CUBIC_COUNTS = {8: 1, 16: 38 + 3}


def invariant(g: Graph) -> tuple:
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1
    walks = []
    power = np.eye(g.n, dtype=np.int64)
    for _ in range(8):
        power = power @ a
        walks.append(np.diag(power).copy())
    profile = sorted(zip(*walks))
    return tuple(map(tuple, profile))


class Dedup:
    def __init__(self):
        self.buckets: dict[tuple, list[nx.Graph]] = {}
        self.kept: list[Graph] = []

    def add(self, g: Graph) -> bool:
        key = invariant(g)
        h = nx.Graph(g.edges)
        h.add_nodes_from(range(g.n))
        bucket = self.buckets.setdefault(key, [])
        if any(nx.is_isomorphic(h, other) for other in bucket):
            return False
        bucket.append(h)
        self.kept.append(g)
        return True


def connected_cubic(n: int, max_samples: int = 2_000_000) -> list[Graph]:
    target = CONNECTED_CUBIC_COUNTS[n]
    seen = Dedup()
    for seed in range(max_samples):
        g = random_cubic(n, seed)
        if is_connected(g):
            seen.add(g)
        if len(seen.kept) == target:
            return seen.kept
    raise RuntimeError(f"only {len(seen.kept)} of {target} classes found for n={n}")


def _partitions_without_ones(n: int, largest: int | None = None):
    largest = n if largest is None else largest
    if n == 0:
        yield []
        return
    for part in range(min(n, largest), 1, -1):
        for rest in _partitions_without_ones(n - part, part):
            yield [part] + rest


def _permutation_with_cycle_type(parts: list[int]) -> list[int]:
    perm, start = [], 0
    for p in parts:
        perm.extend(start + (i + 1) % p for i in range(p))
        start += p
    return perm


def bipartite_cubic(n: int) -> list[Graph]:
    half = n // 2
    seen = Dedup()
    for parts in _partitions_without_ones(half):
        pi = _permutation_with_cycle_type(parts)
        for sigma in itertools.permutations(range(half)):
            if any(sigma[i] == i or sigma[i] == pi[i] for i in range(half)):
                continue
            edges = [(i, half + j) for i in range(half) for j in (i, pi[i], sigma[i])]
            seen.add(Graph.from_edges(n, edges))
    if len(seen.kept) != BIPARTITE_CUBIC_COUNTS[n]:
        raise RuntimeError(f"found {len(seen.kept)} bipartite cubic graphs of order {n}")
    return seen.kept


def write(name: str, graphs: list[Graph]) -> None:
    lines = sorted(encode_graph6(g) for g in graphs)
    (DATA / name).write_text("".join(line + "\n" for line in lines))
    print(f"{name}: {len(lines)} graphs", file=sys.stderr)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.parse_args(argv)
    DATA.mkdir(parents=True, exist_ok=True)
    for n in CONNECTED_CUBIC_COUNTS:
        write(f"cubic_connected_{n}.g6", connected_cubic(n))
    for n in BIPARTITE_CUBIC_COUNTS:
        write(f"bipartite_cubic_{n}.g6", bipartite_cubic(n))


if __name__ == "__main__":
    main()
