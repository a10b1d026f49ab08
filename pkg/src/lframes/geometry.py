"""Exact integer geometry: L-frames, rectangles, reference lines, predicates.

Everything here is pure integer arithmetic on closed segments. There is no
floating point anywhere; distance comparisons use squared distances.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .errors import NotAnchored


class Point(NamedTuple):
    x: int
    y: int


@dataclass(frozen=True)
class LFrame:
    """Union of a horizontal and a vertical closed segment sharing a corner.

    The horizontal segment runs from ``corner`` to ``corner + (hspan, 0)``,
    the vertical one from ``corner`` to ``corner + (0, vspan)``. Both spans
    are nonzero; the sign pair picks one of the four orientations.
    """

    id: str
    corner: Point
    hspan: int
    vspan: int

    def __post_init__(self):
        object.__setattr__(self, "corner", Point(*self.corner))
        if self.hspan == 0 or self.vspan == 0:
            raise ValueError(f"frame {self.id!r}: spans must be nonzero")

    def hseg(self) -> tuple[int, int, int]:
        """Horizontal arm as (y, x_lo, x_hi) with x_lo <= x_hi."""
        x2 = self.corner.x + self.hspan
        lo, hi = (self.corner.x, x2) if self.corner.x <= x2 else (x2, self.corner.x)
        return self.corner.y, lo, hi

    def vseg(self) -> tuple[int, int, int]:
        """Vertical arm as (x, y_lo, y_hi) with y_lo <= y_hi."""
        y2 = self.corner.y + self.vspan
        lo, hi = (self.corner.y, y2) if self.corner.y <= y2 else (y2, self.corner.y)
        return self.corner.x, lo, hi

    def hand(self) -> Point:
        """Free endpoint of the horizontal arm."""
        return Point(self.corner.x + self.hspan, self.corner.y)

    def vhand(self) -> Point:
        """Free endpoint of the vertical arm."""
        return Point(self.corner.x, self.corner.y + self.vspan)


@dataclass(frozen=True)
class Rect:
    """Closed axis-parallel rectangle, lo strictly southwest of hi."""

    id: str
    lo: Point
    hi: Point

    def __post_init__(self):
        object.__setattr__(self, "lo", Point(*self.lo))
        object.__setattr__(self, "hi", Point(*self.hi))
        if not (self.lo.x < self.hi.x and self.lo.y < self.hi.y):
            raise ValueError(f"rect {self.id!r}: degenerate")


@dataclass(frozen=True)
class Diagonal:
    """The line {(x, y) : x + y = d}, slope -1."""

    d: int

    def contains(self, p: Point) -> bool:
        return p.x + p.y == self.d

    def side(self, p: Point) -> int:
        """+1 if p is strictly above the line, -1 below, 0 on it."""
        s = p.x + p.y - self.d
        return (s > 0) - (s < 0)


@dataclass(frozen=True)
class GeomInstance:
    """A family of frames or rectangles plus optional reference lines.

    ``model`` selects the adjacency predicate: "standard" means nonempty
    point intersection, "edge" means sharing a unit grid edge. Frames and
    rectangles are mutually exclusive.
    """

    frames: tuple[LFrame, ...] = ()
    rects: tuple[Rect, ...] = ()
    model: str = "standard"
    diagonal: Optional[Diagonal] = None
    vline: Optional[int] = None
    hline: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "frames", tuple(self.frames))
        object.__setattr__(self, "rects", tuple(self.rects))
        if self.frames and self.rects:
            raise ValueError("frames and rects are mutually exclusive")
        if self.model not in ("standard", "edge"):
            raise ValueError(f"unknown model {self.model!r}")
        if self.model == "edge" and self.rects:
            raise ValueError("edge model is defined for frames only")
        ids = [o.id for o in self.objects]
        if len(set(ids)) != len(ids):
            raise ValueError("object ids must be unique")

    @property
    def objects(self) -> tuple:
        return self.frames if self.frames else self.rects

    @property
    def n(self) -> int:
        return len(self.objects)


def _overlap(a_lo: int, a_hi: int, b_lo: int, b_hi: int) -> bool:
    return max(a_lo, b_lo) <= min(a_hi, b_hi)


def _h_meets_v(h: tuple[int, int, int], v: tuple[int, int, int]) -> bool:
    hy, hx0, hx1 = h
    vx, vy0, vy1 = v
    return hx0 <= vx <= hx1 and vy0 <= hy <= vy1


def lframe_intersect(a: LFrame, b: LFrame) -> bool:
    """True iff the closed point sets of the two frames share a point.

    Symmetric and reflexive. A single shared point (including an endpoint
    touching the other segment) counts.
    """
    ah, av = a.hseg(), a.vseg()
    bh, bv = b.hseg(), b.vseg()
    if ah[0] == bh[0] and _overlap(ah[1], ah[2], bh[1], bh[2]):
        return True
    if av[0] == bv[0] and _overlap(av[1], av[2], bv[1], bv[2]):
        return True
    return _h_meets_v(ah, bv) or _h_meets_v(bh, av)


def rect_intersect(a: Rect, b: Rect) -> bool:
    """Closed-box overlap, boundary touch included."""
    return _overlap(a.lo.x, a.hi.x, b.lo.x, b.hi.x) and _overlap(
        a.lo.y, a.hi.y, b.lo.y, b.hi.y
    )


def rect_to_lframe(r: Rect, diag: Diagonal) -> LFrame:
    """Replace a diagonal-anchored rectangle by the equivalent L-frame.

    The rectangle must meet the diagonal in exactly one corner. The result
    keeps the two sides incident to that corner (the boundary facing the
    line); replacing every rectangle of an anchored family this way leaves
    the intersection graph unchanged.

    Raises NotAnchored when the rectangle misses the line or the line cuts
    through its interior.
    """
    lo_sum = r.lo.x + r.lo.y
    hi_sum = r.hi.x + r.hi.y
    w = r.hi.x - r.lo.x
    h = r.hi.y - r.lo.y
    if diag.d == lo_sum:
        return LFrame(r.id, r.lo, w, h)
    if diag.d == hi_sum:
        return LFrame(r.id, r.hi, -w, -h)
    raise NotAnchored(f"rect {r.id!r} is not anchored at x+y={diag.d}")


def is_anchored(f: LFrame, diag: Diagonal, side: str) -> bool:
    """True iff f's corner lies on the diagonal and f opens into ``side``.

    side="above" means both arms point into the open halfplane x+y > d
    (positive spans); side="below" means both point into x+y < d. This is
    the configuration produced by rect_to_lframe and assumed by the
    exchange-graph drawing, where arc endpoints are frame corners on the
    line.
    """
    if side not in ("above", "below"):
        raise ValueError(f"side must be 'above' or 'below', got {side!r}")
    if not diag.contains(f.corner):
        return False
    if side == "above":
        return f.hspan > 0 and f.vspan > 0
    return f.hspan < 0 and f.vspan < 0


def corner_dist2(a: LFrame, b: LFrame) -> int:
    """Squared Euclidean distance between the two corners."""
    dx = a.corner.x - b.corner.x
    dy = a.corner.y - b.corner.y
    return dx * dx + dy * dy


def rotate_cw(f: LFrame) -> LFrame:
    """Rotate a frame 90 degrees clockwise about the origin: (x,y) -> (y,-x)."""
    c = f.corner
    return LFrame(f.id, Point(c.y, -c.x), f.vspan, -f.hspan)
