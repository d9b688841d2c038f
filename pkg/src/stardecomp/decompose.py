"""Deciding S_{1,r-1}-decomposability of r-regular graphs.

The search rests on one structural fact. In any S_{1,r-1}-decomposition of
an r-regular graph the star centers have degree r inside their own star, so
a center's edges all belong to that one star; two adjacent centers would both
claim the edge between them. Centers therefore form an independent set S,
and counting edges (r+1 per star, rn/2 in total) pins |S| = rn/(2(r+1)).
Every remaining edge lies in G minus S and serves as the spine edge of exactly
one star, whose center is adjacent to exactly one of its endpoints. So G is
decomposable with centers S iff the center/edge incidence graph has a perfect
matching, and enumerating all independent sets of that size is a complete
search.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from stardecomp.certificate import Certificate, DoubleStar
from stardecomp.errors import (
    NotCubic,
    NotIndependent,
    NotRegular,
    PreconditionViolated,
    ScaleExceeded,
    scale_max,
)
from stardecomp.graph import (
    ComponentKind,
    Graph,
    canonical_edge,
    classify_components,
    connected_components,
    delete_vertices,
    induced_subgraph,
    is_r_regular,
)
from stardecomp.invariants import enumerate_independent_sets, independence_number
from stardecomp.matching import AuxBipartite, hopcroft_karp

log = logging.getLogger(__name__)

ORACLE_MAX_EDGES = 28


def center_count(n: int, r: int) -> Optional[int]:
    """rn/(2(r+1)) when it is an integer, else None."""
    if (r * n) % (2 * (r + 1)):
        return None
    return r * n // (2 * (r + 1))


def r_divisibility(n: int, r: int) -> bool:
    if r < 2:
        raise ValueError(f"r must be at least 2, got {r}")
    return center_count(n, r) is not None


def normalize_centers(g: Graph, s: Iterable[int]) -> tuple[int, ...]:
    centers = tuple(sorted(set(s)))
    for v in centers:
        g.check_vertex(v)
    return centers


def build_aux(g: Graph, s: Iterable[int], admissible: bool = False) -> AuxBipartite:
    """Centers versus edges of G minus S; a center sees an edge when it is
    adjacent to one of the edge's endpoints.

    With ``admissible=True`` a center adjacent to *both* endpoints is not
    linked to that edge: attaching it would close a triangle rather than
    extend the claw into a double-star.
    """
    centers = normalize_centers(g, s)
    if not g.is_independent(centers):
        raise NotIndependent(f"center set {centers} is not independent")
    inside = set(centers)
    right = tuple(e for e in g.edges if e[0] not in inside and e[1] not in inside)
    rows = []
    for c in centers:
        nbrs = g.masks[c]
        row = []
        for j, (a, b) in enumerate(right):
            hits = (nbrs >> a & 1) + (nbrs >> b & 1)
            if hits == 1 or (hits == 2 and not admissible):
                row.append(j)
        rows.append(tuple(row))
    return AuxBipartite(centers, right, tuple(rows))


def decompose_with_centers(g: Graph, s: Iterable[int], r: int = 3) -> Optional[Certificate]:
    centers = normalize_centers(g, s)
    if not is_r_regular(g, r):
        raise NotRegular(f"graph is not {r}-regular")
    if not g.is_independent(centers):
        raise NotIndependent(f"center set {centers} is not independent")
    expected = center_count(g.n, r)
    if expected is None or len(centers) != expected:
        raise PreconditionViolated(
            f"need |S| = {r}n/{2 * (r + 1)} for n={g.n}, got {len(centers)}"
        )
    h = build_aux(g, centers, admissible=True)
    matching = hopcroft_karp(h)
    if len(matching) < len(h.left):
        return None
    stars = []
    for i, j in matching:
        c = h.left[i]
        a, b = h.right[j]
        spine, leaf = (a, b) if g.has_edge(c, a) else (b, a)
        stars.append(DoubleStar.build(c, spine, leaf, [x for x in g.adj[c] if x != spine]))
    return Certificate(tuple(stars))


@dataclass(frozen=True)
class NecessaryReport:
    divisible_by_8: bool
    independent_ok: bool
    size_ok: bool
    components_ok: bool
    no_two_3vertices: bool
    pendant_set_exists: Optional[bool]

    @property
    def all_ok(self) -> bool:
        return all(
            flag is not False
            for flag in (
                self.divisible_by_8, self.independent_ok, self.size_ok,
                self.components_ok, self.no_two_3vertices, self.pendant_set_exists,
            )
        )


def require_cubic(g: Graph) -> None:
    if not is_r_regular(g, 3):
        raise NotCubic("graph is not cubic")


def necessary_conditions(g: Graph, s: Iterable[int], check_pendant: bool = True) -> NecessaryReport:
    """Conditions every center set of an S_{1,2}-decomposition satisfies.

    ``pendant_set_exists`` is None when ``check_pendant`` is off.
    """
    require_cubic(g)
    centers = normalize_centers(g, s)
    rest, _ = delete_vertices(g, centers)
    comps = classify_components(rest)
    pendant = None
    if check_pendant:
        pendant = g.n % 4 == 0 and independence_number(rest).size >= g.n // 4
    return NecessaryReport(
        divisible_by_8=g.n % 8 == 0,
        independent_ok=g.is_independent(centers),
        size_ok=8 * len(centers) >= 3 * g.n,
        components_ok=all(c.kind != ComponentKind.OTHER for c in comps),
        no_two_3vertices=all(c.count3 <= 1 for c in comps),
        pendant_set_exists=pendant,
    )


def _decide_component(g: Graph, r: int) -> Optional[Certificate]:
    k = center_count(g.n, r)
    if k is None:
        return None
    for centers in enumerate_independent_sets(g, k):
        if r == 3:
            report = necessary_conditions(g, centers, check_pendant=False)
            if not (report.components_ok and report.no_two_3vertices):
                continue
        cert = decompose_with_centers(g, centers, r)
        if cert is not None:
            return cert
    return None


def decide_s1r(g: Graph, r: int) -> Optional[Certificate]:
    """Exact S_{1,r-1} decision; returns a certificate iff one exists.

    Components are searched separately (stars are connected) and the first
    success in lexicographic center-set order is kept for each.
    """
    if r < 3:
        raise ValueError(f"decide_s1r needs r >= 3, got {r}")
    if not is_r_regular(g, r):
        raise NotRegular(f"graph is not {r}-regular")
    comps = connected_components(g)
    if any(center_count(len(c), r) is None for c in comps):
        return None
    limit = scale_max()
    for comp in comps:
        if len(comp) > limit:
            raise ScaleExceeded(f"component of order {len(comp)} exceeds cap {limit}")
    stars: list[DoubleStar] = []
    for comp in comps:
        sub, index = induced_subgraph(g, comp)
        cert = _decide_component(sub, r)
        if cert is None:
            return None
        back = {new: old for old, new in index.items()}
        stars.extend(st.relabel(back) for st in cert.stars)
    return Certificate(tuple(stars))


def decide_s12(g: Graph) -> Optional[Certificate]:
    require_cubic(g)
    return decide_s1r(g, 3)


def enumerate_stars(g: Graph, r: int) -> list[DoubleStar]:
    """Every S_{1,r-1} subgraph of g, one entry per edge set."""
    seen = set()
    out = []
    for c in range(g.n):
        for spine in g.adj[c]:
            others = [x for x in g.adj[c] if x != spine]
            for leaves in combinations(others, r - 1):
                for tip in g.adj[spine]:
                    if tip == c or tip in leaves:
                        continue
                    star = DoubleStar.build(c, spine, tip, leaves)
                    if star.edges not in seen:
                        seen.add(star.edges)
                        out.append(star)
    return out


def brute_force_decompose(g: Graph, r: int, centers: Optional[Iterable[int]] = None) -> Optional[Certificate]:
    """Exhaustive edge-partition search, independent of the matching route.

    Repeatedly covers the smallest uncovered edge with every S_{1,r-1} made of
    uncovered edges. ``centers`` restricts which vertices may be star centers.
    """
    if g.m > ORACLE_MAX_EDGES:
        raise ScaleExceeded(f"oracle supports at most {ORACLE_MAX_EDGES} edges, got {g.m}")
    if r < 2:
        raise ValueError("r must be at least 2")
    if g.m % (r + 1):
        return None
    allowed = None if centers is None else set(centers)
    edge_index = {e: i for i, e in enumerate(g.edges)}
    by_edge: list[list[tuple[int, DoubleStar]]] = [[] for _ in g.edges]
    for star in enumerate_stars(g, r):
        if allowed is not None and star.center not in allowed:
            continue
        mask = sum(1 << edge_index[e] for e in star.edges)
        for e in star.edges:
            by_edge[edge_index[e]].append((mask, star))
    full = (1 << g.m) - 1
    dead: set[int] = set()
    chosen: list[DoubleStar] = []

    def search(covered: int) -> bool:
        if covered == full:
            return True
        if covered in dead:
            return False
        free = ~covered & full
        e = (free & -free).bit_length() - 1
        for mask, star in by_edge[e]:
            if mask & covered:
                continue
            chosen.append(star)
            if search(covered | mask):
                return True
            chosen.pop()
        dead.add(covered)
        return False

    if search(0):
        return Certificate(tuple(chosen))
    return None
