"""Witness arcs between two disjoint dominating sets, and their drawing.

For each vertex u, the closest pair (by squared corner distance) among the
solution frames covering u contributes an arc. Arcs are classified by how
their endpoints meet a shared witness: from the left (corner x at most the
witness corner x) or from below (at least). The drawing places every arc as
one or two half-circles whose diameters lie on the diagonal, so crossing
detection reduces to strict interval interleaving.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import DegeneratePosition, NotDisjoint
from .geometry import GeomInstance, Point, corner_dist2
from .graph_core import IntersectionGraph, build_intersection_graph, is_dominating


@dataclass(frozen=True)
class Arc:
    b: int
    r: int
    witness: int
    cls: str  # "top" | "down" | "mixed"
    witnesses: tuple[int, ...] = ()
    mixed_orientation: Optional[str] = None  # "b_left" | "r_left"


@dataclass(frozen=True)
class ExchangeGraph:
    B: frozenset
    R: frozenset
    arcs: tuple[Arc, ...]

    def neighbors_of(self, b_subset: Iterable[int]) -> frozenset:
        """Arc endpoints in R adjacent to the given subset of B."""
        bs = set(b_subset)
        return frozenset(a.r for a in self.arcs if a.b in bs)


@dataclass(frozen=True)
class ArcPiece:
    """Half circle with diameter endpoints on the diagonal, p0.x < p1.x."""

    p0: Point
    p1: Point
    side: str  # "above" | "below"
    arc_index: int


@dataclass(frozen=True)
class ArcDrawing:
    pieces: tuple[ArcPiece, ...]


def choose_edge_for_witness(
    u: int,
    B: Iterable[int],
    R: Iterable[int],
    g: IntersectionGraph,
    inst: GeomInstance,
) -> tuple[int, int]:
    """The covering pair of u whose corners are closest.

    Candidates are members of B and R whose frames intersect u's frame (u
    itself qualifies when it belongs to one of the sets). Ties in squared
    distance break lexicographically on (b, r).
    """
    frames = inst.frames
    mask = g.closed_masks[u]
    bs = [b for b in B if (mask >> b) & 1]
    rs = [r for r in R if (mask >> r) & 1]
    if not bs or not rs:
        raise ValueError(f"vertex {u} lacks covering frames on one side")
    best = None
    for b in sorted(bs):
        fb = frames[b]
        for r in sorted(rs):
            key = (corner_dist2(fb, frames[r]), b, r)
            if best is None or key < best:
                best = key
    return best[1], best[2]


def build_exchange_graph(
    inst: GeomInstance, B: Iterable[int], R: Iterable[int]
) -> ExchangeGraph:
    """Arc set {chosen pair of u : u has covering frames in both sets}.

    Each arc is classified top if some witness sees both endpoints from the
    left, else down if some witness sees both from below, else mixed. The
    designated witness is the qualifying one with the smallest corner x,
    ties by smallest id.
    """
    bset, rset = frozenset(B), frozenset(R)
    if bset & rset:
        raise NotDisjoint(f"common vertices: {sorted(bset & rset)}")
    g = build_intersection_graph(inst)
    pairs: dict[tuple[int, int], list[int]] = {}
    for u in range(g.n):
        mask = g.closed_masks[u]
        if not any((mask >> b) & 1 for b in bset):
            continue
        if not any((mask >> r) & 1 for r in rset):
            continue
        pair = choose_edge_for_witness(u, bset, rset, g, inst)
        pairs.setdefault(pair, []).append(u)

    xs = [f.corner.x for f in inst.frames]
    arcs = []
    for (b, r), ws in sorted(pairs.items()):
        top = [w for w in ws if xs[b] <= xs[w] and xs[r] <= xs[w]]
        down = [w for w in ws if xs[b] >= xs[w] and xs[r] >= xs[w]]
        orientation = None
        if top:
            cls, pool = "top", top
        elif down:
            cls, pool = "down", down
        else:
            cls, pool = "mixed", ws
        witness = min(pool, key=lambda w: (xs[w], w))
        if cls == "mixed":
            orientation = "b_left" if xs[b] < xs[witness] else "r_left"
        arcs.append(Arc(b, r, witness, cls, tuple(sorted(ws)), orientation))
    return ExchangeGraph(bset, rset, tuple(arcs))


def draw_arcs(h: ExchangeGraph, inst: GeomInstance) -> ArcDrawing:
    """Half-circle drawing: top arcs above the diagonal, down arcs below,
    mixed arcs as an upper piece into the witness corner and a lower piece
    out of it.

    Raises DegeneratePosition when two involved corners share an
    x-coordinate (the drawing assumes general position on the line).
    """
    if inst.diagonal is None:
        raise ValueError("instance has no diagonal")
    frames = inst.frames
    involved = set()
    for a in h.arcs:
        involved.update((a.b, a.r))
        if a.cls == "mixed":
            involved.add(a.witness)
    seen_x: dict[int, int] = {}
    for v in involved:
        c = frames[v].corner
        if not inst.diagonal.contains(c):
            raise ValueError(f"corner of frame {frames[v].id!r} is off the diagonal")
        if c.x in seen_x and seen_x[c.x] != v:
            raise DegeneratePosition(
                f"frames {frames[seen_x[c.x]].id!r} and {frames[v].id!r} share corner x"
            )
        seen_x[c.x] = v

    def span(u: int, v: int, side: str, idx: int) -> ArcPiece:
        p, q = frames[u].corner, frames[v].corner
        if p.x > q.x:
            p, q = q, p
        return ArcPiece(p, q, side, idx)

    pieces = []
    for idx, a in enumerate(h.arcs):
        if a.cls == "top":
            pieces.append(span(a.b, a.r, "above", idx))
        elif a.cls == "down":
            pieces.append(span(a.b, a.r, "below", idx))
        else:
            left, right = (a.b, a.r) if a.mixed_orientation == "b_left" else (a.r, a.b)
            pieces.append(span(left, a.witness, "above", idx))
            pieces.append(span(a.witness, right, "below", idx))
    return ArcDrawing(tuple(pieces))


def count_crossings(drawing: ArcDrawing) -> int:
    """Crossing pairs among same-side pieces by strict interval interleaving.

    Pieces sharing an endpoint do not cross; opposite-side pieces can only
    meet on the diagonal itself, which does not count either.
    """
    crossings = 0
    ps = drawing.pieces
    for i in range(len(ps)):
        for j in range(i + 1, len(ps)):
            if ps[i].side != ps[j].side:
                continue
            a, b = ps[i].p0.x, ps[i].p1.x
            c, d = ps[j].p0.x, ps[j].p1.x
            if a < c < b < d or c < a < d < b:
                crossings += 1
    return crossings


def check_local_exchange(h: ExchangeGraph, g: IntersectionGraph) -> bool:
    """Every vertex covered by both sets has an arc inside its neighborhood."""
    for u in range(g.n):
        mask = g.closed_masks[u]
        has_b = any((mask >> b) & 1 for b in h.B)
        has_r = any((mask >> r) & 1 for r in h.R)
        if not (has_b and has_r):
            continue
        if not any((mask >> a.b) & 1 and (mask >> a.r) & 1 for a in h.arcs):
            return False
    return True


def swap_is_dominating(
    g: IntersectionGraph,
    h: ExchangeGraph,
    base_members: Iterable[int],
    removed: Iterable[int],
) -> bool:
    """Whether (base minus removed) plus the arc neighbors of removed dominates.

    ``base_members`` is the full solution the arcs' B side came from,
    including any vertices shared with the other solution; ``removed`` must
    be a subset of h.B.
    """
    removed = set(removed)
    kept = set(base_members) - removed
    return is_dominating(g, kept | h.neighbors_of(removed))
