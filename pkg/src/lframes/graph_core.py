"""Intersection graphs, domination checks, greedy and exact solvers.

Vertices are integers 0..n-1 in instance order; labels carry the object
ids. Closed neighborhoods are cached as bitmasks, which keeps the
branch-and-bound solver usable up to a few dozen vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .epg import epg_intersect
from .errors import TooLarge
from .geometry import GeomInstance, lframe_intersect, rect_intersect


@dataclass(frozen=True)
class DominatingSet:
    """A vertex set intended to dominate some graph; members sorted."""

    members: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(self.members)))

    @property
    def size(self) -> int:
        return len(self.members)


class IntersectionGraph:
    """Static undirected graph with per-vertex sorted neighbor lists."""

    def __init__(self, n: int, edges: Iterable[tuple[int, int]], labels: Optional[Sequence[str]] = None):
        self.n = n
        self.labels = tuple(labels) if labels is not None else tuple(f"v{i}" for i in range(n))
        if len(self.labels) != n:
            raise ValueError("labels length must equal n")
        adj = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError("self-loops are not stored")
            adj[u].add(v)
            adj[v].add(u)
        self.adjacency = tuple(tuple(sorted(s)) for s in adj)
        # closed neighborhoods as bitmasks
        masks = []
        for v in range(n):
            m = 1 << v
            for u in adj[v]:
                m |= 1 << u
            masks.append(m)
        self.closed_masks = tuple(masks)
        self.full_mask = (1 << n) - 1

    def edge_set(self) -> frozenset:
        return frozenset(
            (u, v) for u in range(self.n) for v in self.adjacency[u] if u < v
        )

    def closed_neighborhood(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(self.adjacency[v] + (v,)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntersectionGraph):
            return NotImplemented
        return (
            self.n == other.n
            and self.labels == other.labels
            and self.adjacency == other.adjacency
        )

    def __hash__(self):
        return hash((self.n, self.labels, self.adjacency))

    def __repr__(self):
        return f"IntersectionGraph(n={self.n}, m={len(self.edge_set())})"


def build_intersection_graph(inst: GeomInstance) -> IntersectionGraph:
    """Pairwise-predicate graph of the instance under its model."""
    objs = inst.objects
    if inst.model == "edge":
        pred = epg_intersect
    elif inst.frames or not inst.rects:
        pred = lframe_intersect
    else:
        pred = rect_intersect
    n = len(objs)
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if pred(objs[i], objs[j])
    ]
    return IntersectionGraph(n, edges, [o.id for o in objs])


def members_mask(g: IntersectionGraph, members: Iterable[int]) -> int:
    m = 0
    for v in members:
        m |= g.closed_masks[v]
    return m


def is_dominating(g: IntersectionGraph, members: Iterable[int]) -> bool:
    """True iff the closed neighborhoods of ``members`` cover every vertex."""
    return members_mask(g, members) == g.full_mask


def greedy_mds(g: IntersectionGraph) -> DominatingSet:
    """Repeatedly take the vertex covering the most undominated vertices.

    Ties go to the smallest vertex id, so the result is deterministic.
    """
    chosen = []
    covered = 0
    while covered != g.full_mask:
        best_v = -1
        best_gain = -1
        for v in range(g.n):
            gain = (g.closed_masks[v] & ~covered).bit_count()
            if gain > best_gain:
                best_v, best_gain = v, gain
        chosen.append(best_v)
        covered |= g.closed_masks[best_v]
    return DominatingSet(tuple(chosen))


def _min_ds(
    masks: Sequence[int],
    full: int,
    forced_in: Sequence[int],
    excluded: int,
    ub_size: int,
    target: Optional[int] = None,
) -> Optional[tuple[int, ...]]:
    """Branch-and-bound minimum dominating set under constraints.

    forced_in vertices are committed; vertices in the ``excluded`` bitmask
    may not be used. Solutions of size >= ub_size are pruned. When
    ``target`` is given, the search stops as soon as a solution of size
    <= target is known. Returns the best member tuple found, or None.
    """
    n = len(masks)
    base_cover = 0
    for v in forced_in:
        base_cover |= masks[v]
    usable_mask = 0
    for v in range(n):
        if not (excluded >> v) & 1:
            usable_mask |= 1 << v
    # who may dominate each vertex
    dom = [masks[u] & usable_mask for u in range(n)]

    best: list = [ub_size, None]

    def lower_bound(undom: int) -> int:
        # undominated vertices with pairwise disjoint dominator sets each
        # need a dominator of their own
        cnt = 0
        used = 0
        rest = undom
        while rest:
            u = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            d = dom[u]
            if d == 0:
                return n + 1  # uncoverable
            if d & used == 0:
                cnt += 1
                used |= d
        return cnt

    def rec(covered: int, chosen: list) -> bool:
        """Returns True when the search should stop entirely."""
        if covered == full:
            if len(chosen) < best[0]:
                best[0] = len(chosen)
                best[1] = tuple(chosen)
                if target is not None and best[0] <= target:
                    return True
            return False
        undom = full & ~covered
        if len(chosen) + lower_bound(undom) >= best[0]:
            return False
        # branch on the undominated vertex with the fewest dominators,
        # trying high-coverage dominators first
        bu, bc = -1, n + 2
        rest = undom
        while rest:
            u = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            c = dom[u].bit_count()
            if c < bc:
                bu, bc = u, c
                if c <= 1:
                    break
        cands = []
        rest = dom[bu]
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            cands.append(v)
        cands.sort(key=lambda v: (-(masks[v] & undom).bit_count(), v))
        for v in cands:
            chosen.append(v)
            if rec(covered | masks[v], chosen):
                return True
            chosen.pop()
        return False

    rec(base_cover, list(forced_in))
    return best[1]


def exact_mds_size(g: IntersectionGraph, cap: int = 32) -> int:
    """Optimal dominating set size without the lexicographic tie-break pass.

    Raises TooLarge when g has more than ``cap`` vertices.
    """
    if g.n > cap:
        raise TooLarge(f"{g.n} vertices exceeds cap {cap}")
    if g.n == 0:
        return 0
    ub = greedy_mds(g)
    opt = _min_ds(g.closed_masks, g.full_mask, (), 0, ub.size)
    return ub.size if opt is None else len(opt)


def exact_mds(g: IntersectionGraph, cap: int = 32) -> DominatingSet:
    """Minimum dominating set; deterministic lexicographically least optimum.

    Phase one finds the optimal size by branch and bound seeded with the
    greedy upper bound. Phase two commits vertices in id order, keeping a
    vertex exactly when some optimal solution extends the committed prefix.
    Raises TooLarge when g has more than ``cap`` vertices.
    """
    if g.n > cap:
        raise TooLarge(f"{g.n} vertices exceeds cap {cap}")
    if g.n == 0:
        return DominatingSet(())
    masks = g.closed_masks
    full = g.full_mask
    ub = greedy_mds(g)
    opt = _min_ds(masks, full, (), 0, ub.size)
    if opt is None:
        opt = ub.members
    m = len(opt)

    chosen: list[int] = []
    excluded = 0
    for v in range(g.n):
        if len(chosen) == m:
            break
        trial = chosen + [v]
        sol = _min_ds(masks, full, trial, excluded, m + 1, target=m)
        if sol is not None and len(sol) <= m:
            chosen.append(v)
        else:
            excluded |= 1 << v
    return DominatingSet(tuple(chosen))
