"""Simple undirected graphs on vertices ``0..n-1`` and the structural queries
the decomposition code needs.

Graphs are immutable; every query here is a pure function.
"""

from __future__ import annotations

import enum
import itertools
import random
from collections import defaultdict, deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

from stardecomp.errors import (
    InvalidOrder,
    MalformedGraph6,
    UnsupportedSize,
    VertexOutOfRange,
)

Edge = tuple[int, int]

GRAPH6_HEADER = ">>graph6<<"
# largest order expressible with the 4-byte size prefix
GRAPH6_MAX_N = 258047


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency length must equal n")
        for v, nbrs in enumerate(self.adj):
            if list(nbrs) != sorted(set(nbrs)):
                raise ValueError(f"neighbors of {v} must be sorted and distinct")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise VertexOutOfRange(f"neighbor {u} of {v} out of range")
                if u == v:
                    raise ValueError(f"loop at vertex {v}")
        for v, nbrs in enumerate(self.adj):
            for u in nbrs:
                if v not in self.adj[u]:
                    raise ValueError(f"adjacency not symmetric at {{{u}, {v}}}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRange(f"edge {(u, v)} out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if v in nbrs[u]:
                raise ValueError(f"parallel edge {canonical_edge(u, v)}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        """Canonical edges ``(u, v)`` with ``u < v``, in lexicographic order."""
        return tuple((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighborhood of each vertex as an integer bitmask."""
        return tuple(sum(1 << u for u in nbrs) for nbrs in self.adj)

    @cached_property
    def _edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in self._edge_set

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexOutOfRange(f"vertex {v} not in 0..{self.n - 1}")

    def neighborhood(self, vertices: Iterable[int]) -> set[int]:
        """``N(X)``: union of the neighborhoods of ``vertices``."""
        out: set[int] = set()
        for v in vertices:
            out.update(self.adj[v])
        return out

    def is_independent(self, vertices: Iterable[int]) -> bool:
        vs = set(vertices)
        return all(u not in vs for v in vs for u in self.adj[v])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------- graph6


def _size_prefix(n: int) -> str:
    if n < 0 or n > GRAPH6_MAX_N:
        raise UnsupportedSize(f"graph6 supports 0 <= n <= {GRAPH6_MAX_N}, got {n}")
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))


def encode_graph6(g: Graph) -> str:
    prefix = _size_prefix(g.n)
    bits = [
        1 if g.has_edge(i, j) else 0
        for j in range(1, g.n)
        for i in range(j)
    ]
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = (value << 1) | b
        body.append(chr(value + 63))
    return prefix + "".join(body)


def parse_graph6(line: str) -> Graph:
    text = line.strip()
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER):]
    if not text:
        raise MalformedGraph6("empty graph6 string")
    for ch in text:
        if not 63 <= ord(ch) <= 126:
            raise MalformedGraph6(f"character {ch!r} outside graph6 range")
    values = [ord(ch) - 63 for ch in text]
    if values[0] == 63:
        if len(values) >= 2 and values[1] == 63:
            raise UnsupportedSize("8-byte graph6 size prefix (n >= 2^18) not supported")
        if len(values) < 4:
            raise MalformedGraph6("truncated graph6 size prefix")
        n = (values[1] << 12) | (values[2] << 6) | values[3]
        if n < 63:
            raise MalformedGraph6(f"long-form prefix used for n={n}")
        body = values[4:]
    else:
        n = values[0]
        body = values[1:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise MalformedGraph6(
            f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}"
        )
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    if nbits % 6 and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise MalformedGraph6("nonzero padding bits")
    return Graph.from_edges(n, edges)


def read_graph6_lines(lines: Iterable[str]) -> Iterable[tuple[int, str]]:
    """Yield ``(line_number, text)`` for non-blank graph6 lines (1-based)."""
    for number, raw in enumerate(lines, start=1):
        text = raw.strip()
        if text.startswith(GRAPH6_HEADER):
            text = text[len(GRAPH6_HEADER):]
        if text:
            yield number, text


# ---------------------------------------------------------------- structure


def is_r_regular(g: Graph, r: int) -> bool:
    return all(len(nbrs) == r for nbrs in g.adj)


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    out = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in g.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    queue.append(u)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced on ``keep``, relabelled in increasing vertex order."""
    kept = sorted(set(keep))
    for v in kept:
        g.check_vertex(v)
    index = {v: i for i, v in enumerate(kept)}
    adj = tuple(tuple(index[u] for u in g.adj[v] if u in index) for v in kept)
    return Graph(len(kept), adj), index


def delete_vertices(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """``G \\ S`` together with the old->new vertex map."""
    removed = set(s)
    for v in removed:
        g.check_vertex(v)
    return induced_subgraph(g, (v for v in range(g.n) if v not in removed))


class ComponentKind(str, enum.Enum):
    ISOLATED_VERTEX = "IsolatedVertex"
    PATH = "Path"
    CYCLE = "Cycle"
    TREE = "Tree"
    OTHER = "Other"


@dataclass(frozen=True)
class ComponentInfo:
    vertices: tuple[int, ...]
    kind: ComponentKind
    count3: int


def classify_components(g: Graph) -> list[ComponentInfo]:
    out = []
    for comp in connected_components(g):
        degrees = [g.degree(v) for v in comp]
        size = len(comp)
        n_edges = sum(degrees) // 2
        count3 = sum(1 for d in degrees if d == 3)
        if size == 1:
            kind = ComponentKind.ISOLATED_VERTEX
        elif all(d == 2 for d in degrees):
            kind = ComponentKind.CYCLE
        elif n_edges == size - 1:
            leaves = sum(1 for d in degrees if d == 1)
            kind = ComponentKind.PATH if leaves == 2 else ComponentKind.TREE
        else:
            kind = ComponentKind.OTHER
        out.append(ComponentInfo(tuple(comp), kind, count3))
    return out


def in_short_odd_cycle(g: Graph, v: int, k: int) -> bool:
    """Whether some cycle of length exactly ``k`` passes through ``v``."""
    g.check_vertex(v)
    if k < 3:
        return False
    closing = set(g.adj[v])
    on_path = {v}

    # extend a simple path v=p0,...,p_depth; close it when depth == k-1
    def extend(tip: int, depth: int) -> bool:
        if depth == k - 1:
            return tip in closing
        for u in g.adj[tip]:
            if u in on_path:
                continue
            on_path.add(u)
            found = extend(u, depth + 1)
            on_path.discard(u)
            if found:
                return True
        return False

    return extend(v, 0)


def has_triangle(g: Graph) -> bool:
    masks = g.masks
    return any(masks[u] & masks[v] for u, v in g.edges)


def bipartition(g: Graph) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in g.adj[v]:
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    a = tuple(v for v in range(g.n) if color[v] == 0)
    b = tuple(v for v in range(g.n) if color[v] == 1)
    return a, b


def _local_connectivity(g: Graph, s: int, t: int, cap: int) -> int:
    """Max number of internally vertex-disjoint s-t paths, stopping at ``cap``."""
    # vertex x is split into x_in = 2x and x_out = 2x + 1
    residual: dict[tuple[int, int], int] = defaultdict(int)
    arcs: dict[int, list[int]] = defaultdict(list)

    def add_arc(a: int, b: int) -> None:
        residual[(a, b)] += 1
        arcs[a].append(b)
        arcs[b].append(a)

    for x in range(g.n):
        add_arc(2 * x, 2 * x + 1)
    for u, v in g.edges:
        add_arc(2 * u + 1, 2 * v)
        add_arc(2 * v + 1, 2 * u)

    source, sink = 2 * s + 1, 2 * t
    paths = 0
    while paths < cap:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b in arcs[a]:
                if b not in parent and residual[(a, b)] > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            break
        b = sink
        while b != source:
            a = parent[b]
            residual[(a, b)] -= 1
            residual[(b, a)] += 1
            b = a
        paths += 1
    return paths


def vertex_connectivity(g: Graph) -> int:
    """Exact vertex connectivity; K_n gives n-1, disconnected graphs give 0."""
    n = g.n
    if n <= 1:
        return 0
    if not is_connected(g):
        return 0
    if g.m == n * (n - 1) // 2:
        return n - 1
    best = min(g.degree(v) for v in range(n))
    # Even's scheme: some vertex among the first best+1 avoids a minimum separator
    i = 0
    while i <= best and i < n:
        for j in range(i + 1, n):
            if not g.has_edge(i, j):
                best = min(best, _local_connectivity(g, i, j, best))
        i += 1
    return best


# ---------------------------------------------------------------- families


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, [])


def hypercube(d: int) -> Graph:
    """Q_d on bit-strings 0..2^d-1; vertex parity = popcount parity."""
    n = 1 << d
    return Graph.from_edges(
        n, [(v, v ^ (1 << b)) for v in range(n) for b in range(d) if v < v ^ (1 << b)]
    )


def kneser_graph(n: int, k: int) -> Graph:
    subsets = list(itertools.combinations(range(n), k))
    return Graph.from_edges(
        len(subsets),
        [
            (i, j)
            for i, j in itertools.combinations(range(len(subsets)), 2)
            if not set(subsets[i]) & set(subsets[j])
        ],
    )


def petersen_graph() -> Graph:
    return kneser_graph(5, 2)


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges)
        offset += h.n
    return Graph.from_edges(offset, edges)


def random_regular(n: int, r: int, seed: int, max_tries: int = 100_000) -> Graph:
    """Uniform simple r-regular graph by the pairing model with rejection."""
    if n * r % 2 or r >= n or r < 0:
        raise InvalidOrder(f"no {r}-regular simple graph on {n} vertices")
    rng = random.Random(seed)
    stubs = [v for v in range(n) for _ in range(r)]
    for _ in range(max_tries):
        rng.shuffle(stubs)
        seen = set()
        for a, b in zip(stubs[::2], stubs[1::2]):
            e = canonical_edge(a, b)
            if a == b or e in seen:
                break
            seen.add(e)
        else:
            return Graph.from_edges(n, sorted(seen))
    raise RuntimeError(f"pairing model failed {max_tries} times for n={n}, r={r}")


def random_cubic(n: int, seed: int) -> Graph:
    if n % 2 or n < 4:
        raise InvalidOrder(f"cubic graphs need even n >= 4, got {n}")
    return random_regular(n, 3, seed)
