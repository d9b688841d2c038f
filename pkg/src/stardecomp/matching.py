"""Bipartite and general matching.

``AuxBipartite`` is the center/edge incidence structure the decomposition
search is built on; Hopcroft-Karp decides whether its left side can be
saturated and ``hall_violator`` explains why not.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Hashable, Optional, Sequence

import numpy as np

from stardecomp.errors import ScaleExceeded, check_scale
from stardecomp.graph import Edge, Graph, canonical_edge

HALL_MAX_LEFT = 24


@dataclass(frozen=True)
class AuxBipartite:
    """Left labels, right labels, and for each left index the sorted right
    indices it is adjacent to."""

    left: tuple[Hashable, ...]
    right: tuple[Hashable, ...]
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.adjacency) != len(self.left):
            raise ValueError("one adjacency row per left vertex")
        for row in self.adjacency:
            if list(row) != sorted(set(row)) or any(not 0 <= j < len(self.right) for j in row):
                raise ValueError(f"bad adjacency row {row}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], n_right: int) -> "AuxBipartite":
        return cls(
            tuple(range(len(rows))),
            tuple(range(n_right)),
            tuple(tuple(sorted(set(r))) for r in rows),
        )


def hopcroft_karp(h: AuxBipartite) -> list[tuple[int, int]]:
    """Maximum matching as ``(left_index, right_index)`` pairs, by left index."""
    n_left = len(h.left)
    adj = h.adjacency
    match_left = [-1] * n_left
    match_right = [-1] * len(h.right)
    inf = n_left + 1
    dist = [0] * n_left

    def bfs() -> bool:
        queue = deque()
        for u in range(n_left):
            if match_left[u] < 0:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = inf
        found = False
        while queue:
            u = queue.popleft()
            for j in adj[u]:
                w = match_right[j]
                if w < 0:
                    found = True
                elif dist[w] == inf:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return found

    def dfs(u: int) -> bool:
        for j in adj[u]:
            w = match_right[j]
            if w < 0 or (dist[w] == dist[u] + 1 and dfs(w)):
                match_left[u] = j
                match_right[j] = u
                return True
        dist[u] = inf
        return False

    while bfs():
        for u in range(n_left):
            if match_left[u] < 0:
                dfs(u)
    return [(u, j) for u, j in enumerate(match_left) if j >= 0]


def saturates_left(h: AuxBipartite, matching: Sequence[tuple[int, int]]) -> bool:
    return len(matching) == len(h.left)


def hall_violator(h: AuxBipartite) -> Optional[tuple[Hashable, ...]]:
    """Smallest (then lexicographically first) left subset X with |N(X)| < |X|.

    Exhaustive over all left subsets; deliberately independent of any
    matching routine so the two can be checked against each other.
    """
    n_left = len(h.left)
    if n_left > HALL_MAX_LEFT:
        raise ScaleExceeded(f"hall_violator supports at most {HALL_MAX_LEFT} left vertices")
    if n_left == 0:
        return None
    row_masks = [sum(1 << j for j in row) for row in h.adjacency]
    size = 1 << n_left
    subset_size = np.zeros(size, dtype=np.uint8)
    if len(h.right) <= 64:
        nbhd = np.zeros(size, dtype=np.uint64)
        for i, rm in enumerate(row_masks):
            half = 1 << i
            nbhd[half:2 * half] = nbhd[:half] | np.uint64(rm)
            subset_size[half:2 * half] = subset_size[:half] + 1
        nbhd_size = np.bitwise_count(nbhd)
    else:
        nbhd_list = [0] * size
        for i, rm in enumerate(row_masks):
            half = 1 << i
            subset_size[half:2 * half] = subset_size[:half] + 1
            for x in range(half):
                nbhd_list[half + x] = nbhd_list[x] | rm
        nbhd_size = np.array([x.bit_count() for x in nbhd_list], dtype=np.uint8)
    violating = np.nonzero(nbhd_size < subset_size)[0]
    if violating.size == 0:
        return None
    k = subset_size[violating].min()
    cands = violating[subset_size[violating] == k].astype(np.int64)
    # among equal-size sets, the lexicographically least member list has the
    # largest bit-reversed mask
    reversed_masks = np.zeros_like(cands)
    for i in range(n_left):
        reversed_masks |= ((cands >> i) & 1) << (n_left - 1 - i)
    mask = int(cands[np.argmax(reversed_masks)])
    return tuple(h.left[i] for i in range(n_left) if mask >> i & 1)


def max_matching_general(g: Graph) -> list[Edge]:
    """Maximum-cardinality matching by Edmonds' blossom algorithm."""
    check_scale(g.n)
    n = g.n
    match = [-1] * n

    def find_augmenting_path(root: int) -> bool:
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if match[a] < 0:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[match[b]]

        def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in g.adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] >= 0 and parent[match[to]] >= 0):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] < 0:
                    parent[to] = v
                    if match[to] < 0:
                        # flip the alternating path ending at ``to``
                        while to >= 0:
                            pv = parent[to]
                            nxt = match[pv]
                            match[to] = pv
                            match[pv] = to
                            to = nxt
                        return True
                    used[match[to]] = True
                    queue.append(match[to])
        return False

    for v in range(n):
        if match[v] < 0:
            for u in g.adj[v]:
                if match[u] < 0:
                    match[u], match[v] = v, u
                    break
    for v in range(n):
        if match[v] < 0:
            find_augmenting_path(v)
    return sorted({canonical_edge(v, match[v]) for v in range(n) if match[v] >= 0})


def is_matching(edges: Sequence[Edge]) -> bool:
    ends = [x for e in edges for x in e]
    return len(ends) == len(set(ends))
