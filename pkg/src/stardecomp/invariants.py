"""Exact independence and domination solvers on bitmask graphs.

Both solvers are plain depth-first branch and bound with a fixed branching
order, so the witness returned for a given graph never changes between runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from stardecomp.errors import check_scale
from stardecomp.graph import Graph


@dataclass(frozen=True)
class IndependenceWitness:
    size: int
    set: tuple[int, ...]


@dataclass(frozen=True)
class DominatingWitness:
    size: int
    set: tuple[int, ...]


def _bits(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def _clique_cover_bound(cand: int, masks: tuple[int, ...]) -> int:
    """Greedy clique cover of ``cand``; its size bounds alpha from above."""
    cliques = 0
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        common = masks[v] & cand
        while common:
            w_low = common & -common
            cand ^= w_low
            common &= masks[w_low.bit_length() - 1]
        cliques += 1
    return cliques


def independence_number(g: Graph) -> IndependenceWitness:
    check_scale(g.n)
    masks = g.masks
    best_size = 0
    best_set = 0

    def search(cand: int, chosen: int, size: int) -> None:
        nonlocal best_size, best_set
        # vertices of residual degree <= 1 belong to some maximum set
        while True:
            forced = 0
            rest = cand
            while rest:
                low = rest & -rest
                rest ^= low
                v = low.bit_length() - 1
                if (masks[v] & cand).bit_count() <= 1:
                    forced = low
                    break
            if not forced:
                break
            v = forced.bit_length() - 1
            chosen |= forced
            size += 1
            cand &= ~(forced | masks[v])
        if not cand:
            if size > best_size:
                best_size, best_set = size, chosen
            return
        if size + _clique_cover_bound(cand, masks) <= best_size:
            return
        pick, pick_deg = -1, -1
        rest = cand
        while rest:
            low = rest & -rest
            rest ^= low
            v = low.bit_length() - 1
            d = (masks[v] & cand).bit_count()
            if d > pick_deg:
                pick, pick_deg = v, d
        bit = 1 << pick
        search(cand & ~(bit | masks[pick]), chosen | bit, size + 1)
        search(cand & ~bit, chosen, size)

    search((1 << g.n) - 1, 0, 0)
    return IndependenceWitness(best_size, _bits(best_set))


def enumerate_independent_sets(g: Graph, k: int) -> Iterator[tuple[int, ...]]:
    """All independent k-sets in lexicographic order, lazily."""
    check_scale(g.n)
    if not 0 <= k <= g.n:
        raise ValueError(f"k must lie in 0..{g.n}, got {k}")
    masks = g.masks
    n = g.n
    stack: list[int] = []

    def extend(start: int, allowed: int) -> Iterator[tuple[int, ...]]:
        need = k - len(stack)
        if need == 0:
            yield tuple(stack)
            return
        for v in range(start, n):
            if (allowed >> v).bit_count() < need:
                return
            if not (allowed >> v) & 1:
                continue
            stack.append(v)
            yield from extend(v + 1, allowed & ~masks[v] & ~(1 << v))
            stack.pop()

    yield from extend(0, (1 << n) - 1)


def is_dominating(g: Graph, vertices) -> bool:
    covered = set(vertices)
    for v in list(covered):
        covered.update(g.adj[v])
    return len(covered) == g.n


def domination_number(g: Graph) -> DominatingWitness:
    check_scale(g.n)
    n = g.n
    if n == 0:
        return DominatingWitness(0, ())
    closed = tuple(m | (1 << v) for v, m in enumerate(g.masks))
    full = (1 << n) - 1
    max_cover = max(c.bit_count() for c in closed)

    # greedy upper bound seeds the search
    greedy, covered = 0, 0
    while covered != full:
        v = max(range(n), key=lambda x: ((closed[x] & ~covered).bit_count(), -x))
        greedy |= 1 << v
        covered |= closed[v]
    best_size, best_set = greedy.bit_count(), greedy

    def search(chosen: int, size: int, covered: int, banned: int) -> None:
        nonlocal best_size, best_set
        if covered == full:
            if size < best_size:
                best_size, best_set = size, chosen
            return
        missing = (full & ~covered).bit_count()
        if size + -(-missing // max_cover) >= best_size:
            return
        # branch on the undominated vertex with fewest usable dominators
        target_opts = None
        rest = full & ~covered
        while rest:
            low = rest & -rest
            rest ^= low
            u = low.bit_length() - 1
            opts = closed[u] & ~banned
            if target_opts is None or opts.bit_count() < target_opts.bit_count():
                target_opts = opts
                if opts.bit_count() <= 1:
                    break
        if not target_opts:
            return
        options = sorted(
            _bits(target_opts),
            key=lambda w: (-(closed[w] & ~covered).bit_count(), w),
        )
        for w in options:
            search(chosen | (1 << w), size + 1, covered | closed[w], banned)
            banned |= 1 << w

    search(0, 0, 0, 0)
    return DominatingWitness(best_size, _bits(best_set))
