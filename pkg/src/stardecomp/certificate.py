"""Double-stars, decomposition certificates, and their verification."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional

from stardecomp.graph import Edge, Graph, canonical_edge

CERT_VERSION = 1


@dataclass(frozen=True)
class DoubleStar:
    """S_{1,r-1}: ``center`` carries the r-1 ``center_leaves`` and the
    ``spine``; the spine carries one more pendant, ``spine_leaf``."""

    center: int
    spine: int
    spine_leaf: int
    center_leaves: tuple[int, ...]
    edges: tuple[Edge, ...]

    @classmethod
    def build(cls, center: int, spine: int, spine_leaf: int,
              center_leaves: Iterable[int]) -> "DoubleStar":
        leaves = tuple(sorted(center_leaves))
        edges = [canonical_edge(center, x) for x in (*leaves, spine)]
        edges.append(canonical_edge(spine, spine_leaf))
        return cls(center, spine, spine_leaf, leaves, tuple(sorted(edges)))

    def role_edges(self) -> set[Edge]:
        out = {canonical_edge(self.center, x) for x in (*self.center_leaves, self.spine)}
        out.add(canonical_edge(self.spine, self.spine_leaf))
        return out

    def relabel(self, mapping) -> "DoubleStar":
        return DoubleStar.build(
            mapping[self.center], mapping[self.spine], mapping[self.spine_leaf],
            [mapping[x] for x in self.center_leaves],
        )


@dataclass(frozen=True)
class Certificate:
    stars: tuple[DoubleStar, ...]

    @property
    def center_set(self) -> tuple[int, ...]:
        return tuple(sorted(st.center for st in self.stars))

    def to_json(self, order: int, r: int) -> dict:
        return {
            "version": CERT_VERSION,
            "order": order,
            "r": r,
            "stars": [
                {
                    "center": st.center,
                    "spine": st.spine,
                    "spine_leaf": st.spine_leaf,
                    "center_leaves": list(st.center_leaves),
                }
                for st in self.stars
            ],
        }

    def dumps(self, order: int, r: int) -> str:
        return json.dumps(self.to_json(order, r))

    @classmethod
    def from_json(cls, data: dict) -> "Certificate":
        if data.get("version", CERT_VERSION) != CERT_VERSION:
            raise ValueError(f"unsupported certificate version {data.get('version')}")
        return cls(tuple(
            DoubleStar.build(s["center"], s["spine"], s["spine_leaf"], s["center_leaves"])
            for s in data["stars"]
        ))

    @classmethod
    def loads(cls, text: str) -> "Certificate":
        return cls.from_json(json.loads(text))


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: Optional[str] = None  # "Overlap", "Missing" or "BadStar"
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _star_problem(g: Graph, star: DoubleStar, r: int) -> Optional[str]:
    vertices = [star.center, star.spine, star.spine_leaf, *star.center_leaves]
    if any(not 0 <= v < g.n for v in vertices):
        return "vertex out of range"
    if len(star.center_leaves) != r - 1 or len(set(vertices)) != r + 2:
        return "roles must name r+2 distinct vertices"
    edges = [canonical_edge(*e) for e in star.edges]
    if len(edges) != r + 1 or len(set(edges)) != r + 1:
        return f"expected {r + 1} distinct edges"
    if set(edges) != star.role_edges():
        return "edge list does not match the declared roles"
    missing = [e for e in edges if not g.has_edge(*e)]
    if missing:
        return f"edges {missing} not in graph"
    degrees = Counter(x for e in edges for x in e)
    if sorted(degrees.values(), reverse=True) != [r, 2] + [1] * r:
        return f"degree sequence {sorted(degrees.values(), reverse=True)}"
    return None


def verify_certificate(g: Graph, c: Certificate, r: int) -> Verdict:
    """Check that ``c`` partitions E(g) into copies of S_{1,r-1}."""
    for i, star in enumerate(c.stars):
        problem = _star_problem(g, star, r)
        if problem:
            return Verdict(False, "BadStar", f"star {i}: {problem}")
    counts = Counter(canonical_edge(*e) for st in c.stars for e in st.edges)
    repeated = sorted(e for e, k in counts.items() if k > 1)
    if repeated:
        return Verdict(False, "Overlap", f"edges used twice: {repeated}")
    uncovered = sorted(set(g.edges) - counts.keys())
    if uncovered:
        return Verdict(False, "Missing", f"edges not covered: {uncovered}")
    return Verdict(True)
