"""Shared test fixtures and independent brute-force oracles.

Oracles here recompute answers from raw vertex/edge data by exhaustive
enumeration. They deliberately share no code with the library so that
agreement between the two is meaningful.
"""

import itertools

import pytest

from lframes.geometry import Diagonal, GeomInstance, LFrame, Point


def closed_masks(n, edges):
    masks = [1 << v for v in range(n)]
    for u, v in edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def brute_mds_size(n, edges):
    """Minimum dominating set size by subset enumeration."""
    masks = closed_masks(n, edges)
    full = (1 << n) - 1
    for size in range(n + 1):
        for combo in itertools.combinations(range(n), size):
            cov = 0
            for v in combo:
                cov |= masks[v]
            if cov == full:
                return size
    raise AssertionError("no dominating set found")


def brute_is_dominating(n, edges, members):
    masks = closed_masks(n, edges)
    cov = 0
    for v in members:
        cov |= masks[v]
    return cov == (1 << n) - 1


def brute_vertex_cover_size(n, edges):
    """Minimum vertex cover size by subset enumeration (vertices 1..n)."""
    es = list(edges)
    for size in range(n + 1):
        for combo in itertools.combinations(range(1, n + 1), size):
            chosen = set(combo)
            if all(u in chosen or v in chosen for u, v in es):
                return size
    raise AssertionError("no vertex cover found")


def brute_edge_dominating_size(edges):
    """Minimum edge dominating set size by edge-subset enumeration.

    Edges are (a, b) pairs of a bipartite graph; the two sides use
    independent index ranges, so endpoints are tagged before comparing.
    """
    es = [frozenset((("a", a), ("b", b))) for a, b in edges]
    if not es:
        return 0
    for size in range(1, len(es) + 1):
        for combo in itertools.combinations(es, size):
            if all(any(e & f for f in combo) for e in es):
                return size
    raise AssertionError("no edge dominating set found")


# A realization of the five-frame instance used throughout the unit
# tests: a long flat frame, a medium square, a wide mid frame, a small
# one, and a tall thin one, all anchored above the diagonal x + y = 20.
STAIR5_FRAMES = (
    LFrame("a", Point(2, 18), 13, 1),
    LFrame("b", Point(5, 15), 4, 4),
    LFrame("c", Point(8, 12), 7, 3),
    LFrame("d", Point(11, 9), 4, 3),
    LFrame("e", Point(14, 6), 1, 13),
)

STAIR5_EDGES = {(0, 1), (0, 4), (1, 2), (2, 3), (2, 4), (3, 4)}


# A hub frame x touching five slab frames a..e; the closest pair of
# corners among {d, e} makes (d, e) the canonical exchange edge for the
# witness x.
HUB6_FRAMES = (
    LFrame("x", Point(10, 10), 9, 9),
    LFrame("a", Point(1, 19), 10, 1),
    LFrame("b", Point(4, 16), 7, 1),
    LFrame("c", Point(6, 14), 5, 1),
    LFrame("d", Point(9, 11), 2, 1),
    LFrame("e", Point(11, 9), 1, 2),
)


@pytest.fixture
def stair5():
    return GeomInstance(frames=STAIR5_FRAMES, diagonal=Diagonal(20))


@pytest.fixture
def hub6():
    return GeomInstance(frames=HUB6_FRAMES, diagonal=Diagonal(20))
