"""Hypothesis checkers for the known sufficient conditions, the bipartite
domination / matching characterizations, and the S_{1,1} baseline."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from stardecomp.certificate import Certificate, DoubleStar
from stardecomp.decompose import (
    normalize_centers,
    require_cubic,
    center_count,
    decompose_with_centers,
)
from stardecomp.errors import BadCenterSet, BadOrder, NotBipartite, NotRegular, PreconditionViolated
from stardecomp.graph import (
    ComponentKind,
    Graph,
    bipartition,
    canonical_edge,
    classify_components,
    delete_vertices,
    in_short_odd_cycle,
    is_r_regular,
)
from stardecomp.invariants import domination_number, independence_number
from stardecomp.matching import AuxBipartite, hopcroft_karp, max_matching_general


def is_independent_cycling_set(g: Graph, s: Iterable[int]) -> bool:
    """Independent S whose removal leaves only cycles and isolated vertices."""
    centers = normalize_centers(g, s)
    if not g.is_independent(centers):
        return False
    rest, _ = delete_vertices(g, centers)
    return all(
        c.kind in (ComponentKind.CYCLE, ComponentKind.ISOLATED_VERTEX)
        for c in classify_components(rest)
    )


def _alpha_is_three_eighths(g: Graph, alpha: Optional[int]) -> bool:
    if g.n % 8:
        return False
    if alpha is None:
        alpha = independence_number(g).size
    return alpha == 3 * g.n // 8


def theorem_cycling_applies(g: Graph, s: Iterable[int], alpha: Optional[int] = None) -> bool:
    """alpha(G) = 3n/8, S an independent cycling set of that size, and no
    center on a triangle. ``alpha`` may be passed in to skip recomputation."""
    require_cubic(g)
    centers = normalize_centers(g, s)
    if not _alpha_is_three_eighths(g, alpha) or 8 * len(centers) != 3 * g.n:
        return False
    if not is_independent_cycling_set(g, centers):
        return False
    return not any(in_short_odd_cycle(g, v, 3) for v in centers)


def theorem_main_applies(g: Graph, s: Iterable[int], alpha: Optional[int] = None) -> bool:
    """alpha(G) = 3n/8, S independent of that size, no center on a 3-, 5- or 7-cycle."""
    require_cubic(g)
    centers = normalize_centers(g, s)
    if not _alpha_is_three_eighths(g, alpha) or 8 * len(centers) != 3 * g.n:
        return False
    if not g.is_independent(centers):
        return False
    return not any(in_short_odd_cycle(g, v, k) for v in centers for k in (3, 5, 7))


def theorem_r_cycling_applies(g: Graph, s: Iterable[int], r: int) -> bool:
    # no independence-number hypothesis here, unlike the cubic version
    if r < 4:
        raise ValueError(f"r must be at least 4, got {r}")
    if not is_r_regular(g, r):
        raise NotRegular(f"graph is not {r}-regular")
    centers = normalize_centers(g, s)
    if len(centers) != center_count(g.n, r):
        return False
    if not is_independent_cycling_set(g, centers):
        return False
    return not any(in_short_odd_cycle(g, v, 3) for v in centers)


def _require_bipartite(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    parts = bipartition(g)
    if parts is None:
        raise NotBipartite("graph has an odd cycle")
    return parts


def _try_decompose(g: Graph, s: Iterable[int]) -> Optional[Certificate]:
    try:
        return decompose_with_centers(g, s, 3)
    except PreconditionViolated:
        return None


@dataclass(frozen=True)
class DominationCheck:
    gamma: int
    gamma_is_n_over_4: bool
    witness_S: Optional[tuple[int, ...]]
    both_decompositions: Optional[tuple[Certificate, Certificate]]
    dominating_split: Optional[tuple[int, int]]  # (|D & A|, |D & B|) when gamma = n/4

    @property
    def consistent(self) -> bool:
        """gamma = n/4 exactly when a center set with both decompositions exists."""
        return self.gamma_is_n_over_4 == (self.both_decompositions is not None)


def bipartite_domination_check(g: Graph) -> DominationCheck:
    require_cubic(g)
    part_a, part_b = _require_bipartite(g)
    if g.n % 8:
        raise BadOrder(f"order {g.n} is not divisible by 8")
    a_set = set(part_a)
    dom = domination_number(g)
    if 4 * dom.size == g.n:
        d_a = [v for v in dom.set if v in a_set]
        d_b = [v for v in dom.set if v not in a_set]
        # a perfect code: closed neighborhoods of D tile V, so N(D & B) is
        # the part of A outside D, and N(A minus it) = N(D & A)
        s = tuple(sorted(g.neighborhood(d_b)))
        t = tuple(sorted(g.neighborhood(d_a)))
        first, second = _try_decompose(g, s), _try_decompose(g, t)
        both = (first, second) if first is not None and second is not None else None
        return DominationCheck(dom.size, True, s, both, (len(d_a), len(d_b)))
    for s in combinations(part_a, 3 * g.n // 8):
        first = _try_decompose(g, s)
        if first is None:
            continue
        rest = a_set.difference(s)
        second = _try_decompose(g, g.neighborhood(rest))
        if second is not None:
            return DominationCheck(dom.size, False, s, (first, second), None)
    return DominationCheck(dom.size, False, None, None, None)


@dataclass(frozen=True)
class MatchingCondition:
    decomposable: bool
    matching: Optional[tuple[tuple[int, int], ...]]
    certificate: Optional[Certificate]


def bipartite_matching_condition(g: Graph, part_a: Iterable[int], s: Iterable[int]) -> MatchingCondition:
    """Decide (S_{1,2}, S)-decomposability of a bipartite cubic graph from a
    perfect matching between S and N(A minus S) in G."""
    require_cubic(g)
    a_set = set(part_a)
    if any((u in a_set) == (v in a_set) for u, v in g.edges):
        raise NotBipartite("given part does not induce a bipartition")
    centers = normalize_centers(g, s)
    if not a_set.issuperset(centers) or 8 * len(centers) != 3 * g.n:
        raise BadCenterSet(f"S must be a subset of A of size 3n/8, got {centers}")
    rest = a_set.difference(centers)
    targets = tuple(sorted(g.neighborhood(rest)))
    if len(targets) != len(centers):
        return MatchingCondition(False, None, None)
    position = {v: j for j, v in enumerate(targets)}
    rows = tuple(tuple(sorted(position[x] for x in g.adj[c] if x in position)) for c in centers)
    h = AuxBipartite(centers, targets, rows)
    matching = hopcroft_karp(h)
    if len(matching) < len(centers):
        return MatchingCondition(False, None, None)
    pairs = tuple((centers[i], targets[j]) for i, j in matching)
    stars = []
    for u, v in pairs:
        # v has exactly one neighbor left outside S; that edge extends u's claw
        (w,) = [x for x in g.adj[v] if x in rest]
        stars.append(DoubleStar.build(u, v, w, [x for x in g.adj[u] if x != v]))
    return MatchingCondition(True, pairs, Certificate(tuple(stars)))


def s11_decompose(g: Graph) -> Optional[Certificate]:
    """P4 (S_{1,1}) decomposition from a perfect matching.

    G minus a perfect matching is 2-regular; orienting each of its cycles
    gives every vertex one outgoing edge, and the matching edge uv together
    with the outgoing edges at u and at v forms a path on four vertices.
    """
    require_cubic(g)
    matching = max_matching_general(g)
    if 2 * len(matching) != g.n:
        return None
    mate = {}
    for u, v in matching:
        mate[u], mate[v] = v, u
    out = [-1] * g.n
    for start in range(g.n):
        if out[start] >= 0:
            continue
        prev, cur = None, start
        while out[cur] < 0:
            rest = [x for x in g.adj[cur] if x != mate[cur]]
            nxt = rest[0] if prev is None or rest[0] != prev else rest[1]
            out[cur] = nxt
            prev, cur = cur, nxt
    stars = [
        DoubleStar.build(u, v, out[v], [out[u]])
        for u, v in matching
    ]
    return Certificate(tuple(stars))
