"""Seeded instance families: determinism and structural invariants."""

import pytest

from lframes.generators import (
    FAMILIES,
    gen_anchored_one_sided,
    gen_anchored_rects,
    gen_anchored_two_sided,
    gen_bipartite,
    gen_chord_diagram,
    gen_graph,
    gen_two_line,
    generate,
)
from lframes.geometry import is_anchored
from lframes.local_search import anchoring_side
from lframes.permutation import two_line_vertex_order


def test_known_families():
    assert sorted(FAMILIES) == [
        "anchored-one-sided",
        "anchored-two-sided",
        "circle-diagonal",
        "circle-vertical",
        "eds-epg",
        "sat",
        "two-line",
        "vc-epg",
    ]
    with pytest.raises(ValueError):
        generate("triangles", 0, 5)


def test_determinism():
    for family in sorted(FAMILIES):
        assert generate(family, 11, 6) == generate(family, 11, 6)


def test_seeds_differ():
    a = gen_anchored_one_sided(0, 8)
    b = gen_anchored_one_sided(1, 8)
    assert a != b


def test_large_seed():
    inst = gen_anchored_one_sided(2**63 - 1, 6)
    assert inst.n == 6


def test_one_sided_all_above():
    for seed in range(10):
        inst = gen_anchored_one_sided(seed, 9, side="above")
        assert inst.n == 9
        assert anchoring_side(inst) == "above"
    below = gen_anchored_one_sided(3, 5, side="below")
    assert anchoring_side(below) == "below"


def test_two_sided_every_frame_anchored():
    for seed in range(10):
        inst = gen_anchored_two_sided(seed, 10)
        for f in inst.frames:
            assert is_anchored(f, inst.diagonal, "above") or is_anchored(
                f, inst.diagonal, "below"
            )


def test_rect_family_is_anchored():
    for seed in range(10):
        inst = gen_anchored_rects(seed, 8)
        d = inst.diagonal
        for r in inst.rects:
            corners_on_line = (r.lo.x + r.lo.y == d.d) + (r.hi.x + r.hi.y == d.d)
            assert corners_on_line == 1


def test_chord_diagram_is_valid():
    for seed in range(10):
        cd = gen_chord_diagram(seed, 7)
        assert cd.n == 7
        assert len(cd.order) == 14


def test_two_line_family_reads_as_permutation():
    for seed in range(10):
        inst = gen_two_line(seed, 12)
        assert inst.vline == 0 and inst.hline == 0
        order = two_line_vertex_order(inst)
        assert sorted(order) == list(range(12))


def test_graph_generator_edges_in_range():
    n, edges = gen_graph(5, 6)
    assert n == 6
    for i, j in edges:
        assert 1 <= i < j <= 6


def test_bipartite_generator_bounds():
    for seed in range(10):
        edges = gen_bipartite(seed, 3, 4, max_edges=8)
        assert 1 <= len(edges) <= 8
        assert len(set(edges)) == len(edges)
        for i, j in edges:
            assert 1 <= i <= 3 and 1 <= j <= 4


def test_sat_family_cycles_through_corpus():
    a = generate("sat", 0, 1)
    b = generate("sat", 12, 1)
    assert a == b
