"""Seeded instance families.

Every generator takes an explicit integer seed (64-bit values welcome) and
drives a private ``random.Random`` instance, so outputs are reproducible
across platforms and interpreter versions. Nothing here reads global RNG
state.
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import Callable

from .geometry import Diagonal, GeomInstance, LFrame, Point, Rect
from .reductions import (
    ChordDiagram,
    circle_to_diagonal,
    circle_to_vertical,
    eds_to_epg,
    monotone3sat_to_lframes,
    sat_corpus,
    vc_to_epg,
)

_ARM_MAX = 12


def _anchor_xs(rng: random.Random, count: int, d: int) -> list[int]:
    return rng.sample(range(d + 1), count)


def gen_anchored_one_sided(seed: int, n: int, side: str = "above") -> GeomInstance:
    """Frames with corners on the diagonal x + y = d, all arms on one side."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if side not in ("above", "below"):
        raise ValueError(f"unknown side {side!r}")
    rng = random.Random(seed)
    d = max(2 * n, 12)
    sgn = 1 if side == "above" else -1
    frames = []
    for i, x in enumerate(_anchor_xs(rng, n, d)):
        h = sgn * rng.randint(1, _ARM_MAX)
        v = sgn * rng.randint(1, _ARM_MAX)
        frames.append(LFrame(f"f{i + 1}", Point(x, d - x), h, v))
    return GeomInstance(frames=tuple(frames), diagonal=Diagonal(d))


def gen_anchored_two_sided(seed: int, n: int) -> GeomInstance:
    """Diagonal-anchored frames on both sides.

    Anchor abscissas are distinct within each side; occasionally one below
    frame reuses an above anchor so touching cross-side pairs occur.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = random.Random(seed)
    d = max(2 * n, 12)
    sides = [rng.random() < 0.5 for _ in range(n)]
    xs_above = _anchor_xs(rng, sum(sides), d)
    xs_below = _anchor_xs(rng, n - sum(sides), d)
    if xs_above and xs_below and rng.random() < 0.4:
        x = rng.choice(xs_above)
        if x not in xs_below:
            xs_below[rng.randrange(len(xs_below))] = x
    above, below = iter(xs_above), iter(xs_below)
    frames = []
    for i in range(n):
        sgn = 1 if sides[i] else -1
        x = next(above) if sides[i] else next(below)
        h = sgn * rng.randint(1, _ARM_MAX)
        v = sgn * rng.randint(1, _ARM_MAX)
        frames.append(LFrame(f"f{i + 1}", Point(x, d - x), h, v))
    return GeomInstance(frames=tuple(frames), diagonal=Diagonal(d))


def gen_anchored_rects(seed: int, n: int) -> GeomInstance:
    """Axis-parallel rectangles anchored at the diagonal, both sides.

    An above rectangle meets the diagonal in its lower-left corner, a below
    one in its upper-right corner. Same sharing rule as the two-sided frame
    family.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = random.Random(seed)
    d = max(2 * n, 12)
    sides = [rng.random() < 0.5 for _ in range(n)]
    xs_above = _anchor_xs(rng, sum(sides), d)
    xs_below = _anchor_xs(rng, n - sum(sides), d)
    if xs_above and xs_below and rng.random() < 0.4:
        x = rng.choice(xs_above)
        if x not in xs_below:
            xs_below[rng.randrange(len(xs_below))] = x
    above, below = iter(xs_above), iter(xs_below)
    rects = []
    for i in range(n):
        w = rng.randint(1, _ARM_MAX)
        h = rng.randint(1, _ARM_MAX)
        if sides[i]:
            x = next(above)
            lo = Point(x, d - x)
            hi = Point(x + w, d - x + h)
        else:
            x = next(below)
            hi = Point(x, d - x)
            lo = Point(x - w, d - x - h)
        rects.append(Rect(f"r{i + 1}", lo, hi))
    return GeomInstance(rects=tuple(rects), diagonal=Diagonal(d))


def gen_chord_diagram(seed: int, n: int) -> ChordDiagram:
    """Uniformly shuffled order of 2n chord endpoints."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = random.Random(seed)
    order = list(range(1, n + 1)) * 2
    rng.shuffle(order)
    return ChordDiagram(n, tuple(order))


def gen_circle(seed: int, n: int, variant: str = "diagonal") -> GeomInstance:
    """Random chord diagram pushed through a circle-graph reduction."""
    cd = gen_chord_diagram(seed, n)
    if variant == "diagonal":
        return circle_to_diagonal(cd)
    if variant == "vertical":
        return circle_to_vertical(cd)
    raise ValueError(f"unknown variant {variant!r}")


def gen_sat(seed: int, n: int = 0) -> GeomInstance:
    """One of the committed monotone drawings; the seed cycles the corpus."""
    corpus = sat_corpus()
    inst, _ = monotone3sat_to_lframes(corpus[seed % len(corpus)])
    return inst


def gen_graph(seed: int, n: int, p: float = 0.5) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Random simple graph on vertices 1..n, each edge kept with probability p."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = random.Random(seed)
    edges = tuple(e for e in combinations(range(1, n + 1), 2) if rng.random() < p)
    return n, edges


def gen_vc_epg(seed: int, n: int) -> GeomInstance:
    nv, edges = gen_graph(seed, n)
    inst, _ = vc_to_epg(nv, edges)
    return inst


def gen_bipartite(
    seed: int, n_a: int, n_b: int, max_edges: int = 8
) -> tuple[tuple[int, int], ...]:
    """Random nonempty bipartite edge set over {1..n_a} x {1..n_b}."""
    if n_a < 1 or n_b < 1:
        raise ValueError("both sides must be nonempty")
    rng = random.Random(seed)
    pairs = [(i, j) for i in range(1, n_a + 1) for j in range(1, n_b + 1)]
    k = rng.randint(1, min(max_edges, len(pairs)))
    return tuple(sorted(rng.sample(pairs, k)))


def gen_eds_epg(seed: int, n: int) -> GeomInstance:
    n_a = max(1, n // 2)
    n_b = max(1, n - n_a)
    edges = gen_bipartite(seed, n_a, n_b)
    inst, _ = eds_to_epg(n_a, n_b, edges)
    return inst


def gen_two_line(seed: int, n: int) -> GeomInstance:
    """Frames crossing the vertical line x = 0 and the horizontal line y = 0.

    Corners sit strictly inside the upper-left quadrant with distinct x and
    distinct y so both crossing orders are total.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = random.Random(seed)
    span = n + 5
    cxs = rng.sample(range(-span, 0), n)
    cys = rng.sample(range(1, span + 1), n)
    frames = []
    for i in range(n):
        cx, cy = cxs[i], cys[i]
        h = -cx + rng.randint(0, 6)
        v = -cy - rng.randint(0, 6)
        frames.append(LFrame(f"f{i + 1}", Point(cx, cy), h, v))
    return GeomInstance(frames=tuple(frames), vline=0, hline=0)


# family name -> generator with the uniform (seed, n) signature
FAMILIES: dict[str, Callable[[int, int], GeomInstance]] = {
    "anchored-one-sided": gen_anchored_one_sided,
    "anchored-two-sided": gen_anchored_two_sided,
    "circle-diagonal": lambda seed, n: gen_circle(seed, n, "diagonal"),
    "circle-vertical": lambda seed, n: gen_circle(seed, n, "vertical"),
    "sat": gen_sat,
    "vc-epg": gen_vc_epg,
    "eds-epg": gen_eds_epg,
    "two-line": gen_two_line,
}


def generate(family: str, seed: int, n: int) -> GeomInstance:
    """Dispatch by family name; raises ValueError on an unknown family."""
    try:
        fn = FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}") from None
    return fn(seed, n)
