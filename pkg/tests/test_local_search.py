"""Local-search solver and the one-sided / two-sided anchored drivers."""

import random

import pytest

from conftest import brute_mds_size
from lframes.errors import NotAnchored, NotOneSided
from lframes.generators import gen_anchored_one_sided, gen_anchored_two_sided
from lframes.geometry import Diagonal, GeomInstance, LFrame, Point, is_anchored
from lframes.graph_core import (
    IntersectionGraph,
    build_intersection_graph,
    exact_mds,
    greedy_mds,
    is_dominating,
)
from lframes.local_search import (
    LocalSearchConfig,
    anchoring_side,
    approx_two_sided,
    is_k_locally_optimal,
    local_search_mds,
    ptas_one_sided,
    split_two_sided,
)


def anchored_above(fid, x, d, h, v):
    return LFrame(fid, Point(x, d - x), h, v)


def anchored_below(fid, x, d, h, v):
    return LFrame(fid, Point(x, d - x), -h, -v)


STAR = IntersectionGraph(4, [(0, 1), (0, 2), (0, 3)])


def test_star_from_full_vertex_set():
    ds = local_search_mds(STAR, LocalSearchConfig(k=3, initial="full"))
    assert ds.members == (0,)


def test_already_optimal_is_unchanged(stair5):
    g = build_intersection_graph(stair5)
    start = greedy_mds(g).members
    ds = local_search_mds(g, LocalSearchConfig(k=2))
    assert ds.members == start == (0, 2)


def test_stair5_result_is_locally_optimal(stair5):
    g = build_intersection_graph(stair5)
    ds = local_search_mds(g, LocalSearchConfig(k=2))
    assert ds.size == 2
    assert is_k_locally_optimal(g, ds.members, 2)


def test_full_star_set_is_not_locally_optimal():
    assert not is_k_locally_optimal(STAR, range(4), 1)


def test_iteration_cap_stops_early():
    ds = local_search_mds(STAR, LocalSearchConfig(k=3, initial="full", max_iterations=1))
    assert ds.size == 3
    ds0 = local_search_mds(STAR, LocalSearchConfig(k=3, initial="full", max_iterations=0))
    assert ds0.members == (0, 1, 2, 3)


def test_config_validation():
    with pytest.raises(ValueError):
        LocalSearchConfig(k=0)
    with pytest.raises(ValueError):
        LocalSearchConfig(initial="empty")


def test_large_k_warns():
    with pytest.warns(UserWarning):
        local_search_mds(STAR, LocalSearchConfig(k=4))


def test_never_worse_than_greedy_and_always_dominating():
    rng = random.Random(31)
    for _ in range(40):
        n = rng.randint(1, 9)
        edges = [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if rng.random() < 0.3
        ]
        g = IntersectionGraph(n, edges)
        ds = local_search_mds(g, LocalSearchConfig(k=2))
        assert is_dominating(g, ds.members)
        assert ds.size <= greedy_mds(g).size
        assert local_search_mds(g, LocalSearchConfig(k=1)).size >= ds.size


def test_anchoring_side():
    d = Diagonal(10)
    above = GeomInstance(frames=(anchored_above("a", 2, 10, 3, 3),), diagonal=d)
    below = GeomInstance(frames=(anchored_below("b", 2, 10, 3, 3),), diagonal=d)
    mixed = GeomInstance(
        frames=(anchored_above("a", 2, 10, 3, 3), anchored_below("b", 4, 10, 3, 3)),
        diagonal=d,
    )
    assert anchoring_side(above) == "above"
    assert anchoring_side(below) == "below"
    assert anchoring_side(mixed) is None
    assert anchoring_side(GeomInstance()) is None


def test_ptas_disjoint_frames():
    frames = tuple(anchored_above(f"f{i}", 5 * i, 20, 4, 4) for i in range(4))
    inst = GeomInstance(frames=frames, diagonal=Diagonal(20))
    assert ptas_one_sided(inst, 2).size == 4


def test_ptas_all_intersecting():
    frames = tuple(anchored_above(f"f{i}", i, 10, 10, 10) for i in range(4))
    inst = GeomInstance(frames=frames, diagonal=Diagonal(10))
    assert ptas_one_sided(inst, 2).size == 1


def test_ptas_generated_instance_golden():
    inst = gen_anchored_one_sided(12, 12)
    ds = ptas_one_sided(inst, 2)
    g = build_intersection_graph(inst)
    assert is_dominating(g, ds.members)
    assert ds.size == 3
    assert exact_mds(g).size == 3


def test_ptas_rejects_mixed_sides():
    inst = GeomInstance(
        frames=(anchored_above("a", 2, 10, 3, 3), anchored_below("b", 4, 10, 3, 3)),
        diagonal=Diagonal(10),
    )
    with pytest.raises(NotOneSided):
        ptas_one_sided(inst, 2)


def test_split_two_sided():
    inst = GeomInstance(
        frames=(
            anchored_above("a", 2, 10, 3, 3),
            anchored_below("b", 4, 10, 3, 3),
            anchored_above("c", 6, 10, 2, 2),
        ),
        diagonal=Diagonal(10),
    )
    above, below = split_two_sided(inst)
    assert [f.id for f in above.frames] == ["a", "c"]
    assert [f.id for f in below.frames] == ["b"]


def test_split_rejects_unanchored():
    inst = GeomInstance(
        frames=(LFrame("a", Point(0, 0), 3, 3),), diagonal=Diagonal(10)
    )
    with pytest.raises(NotAnchored):
        split_two_sided(inst)
    with pytest.raises(NotAnchored):
        split_two_sided(GeomInstance(frames=(LFrame("a", Point(0, 0), 3, 3),)))


def test_two_sided_above_only_equals_one_sided():
    inst = gen_anchored_one_sided(3, 8)
    assert approx_two_sided(inst, 2).members == ptas_one_sided(inst, 2).members


def test_two_sided_disjoint_pair():
    inst = GeomInstance(
        frames=(anchored_above("a", 0, 10, 3, 3), anchored_below("b", 5, 10, 3, 3)),
        diagonal=Diagonal(10),
    )
    assert approx_two_sided(inst, 2).members == (0, 1)


def test_two_sided_generated_instance_golden():
    inst = gen_anchored_two_sided(14, 14)
    ds = approx_two_sided(inst, 2)
    g = build_intersection_graph(inst)
    assert is_dominating(g, ds.members)
    assert ds.size == 6
    assert exact_mds(g).size == 6


def test_two_sided_size_bound():
    # the union is never larger than the two one-sided solutions together
    for seed in range(20):
        inst = gen_anchored_two_sided(seed, 10)
        above, below = split_two_sided(inst)
        total = 0
        for part in (above, below):
            if part.frames:
                total += ptas_one_sided(part, 2).size
        assert approx_two_sided(inst, 2).size <= total


def test_cross_side_adjacency_needs_shared_anchor():
    for seed in range(30):
        inst = gen_anchored_two_sided(seed, 10)
        g = build_intersection_graph(inst)
        side = [is_anchored(f, inst.diagonal, "above") for f in inst.frames]
        for i in range(inst.n):
            for j in range(i + 1, inst.n):
                if side[i] == side[j]:
                    continue
                touching = (i, j) in g.edge_set()
                shared = inst.frames[i].corner == inst.frames[j].corner
                assert touching == shared


def test_local_beats_or_matches_brute_on_one_sided():
    # k=2 local search is close to optimal on small anchored instances
    for seed in range(25):
        inst = gen_anchored_one_sided(seed, 7)
        g = build_intersection_graph(inst)
        ds = ptas_one_sided(inst, 2)
        opt = brute_mds_size(g.n, g.edge_set())
        assert opt <= ds.size <= 2 * opt
