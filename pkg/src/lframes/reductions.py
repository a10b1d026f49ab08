"""Gadget constructions mapping classic hard problems onto frame families.

Four sources are supported: chord diagrams of a circle (two target
geometries, one family of frames hanging below a diagonal and one pinned to
a vertical line), planar monotone rectilinear 3SAT drawings, vertex cover,
and edge dominating set on bipartite graphs. Each construction ships a
certificate tying the source instance to the produced frame family, and
verify_equivalence recomputes both optima by brute force to check the
claimed relation.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Any, Iterable, Optional

from .errors import InvalidDrawing, SourceTooLarge
from .geometry import Diagonal, GeomInstance, LFrame, Point, rotate_cw
from .graph_core import IntersectionGraph, build_intersection_graph, exact_mds_size


@dataclass(frozen=True)
class ReductionCertificate:
    """Links a source instance to the frame family built from it.

    ``forward`` and ``backward`` are JSON-ready dicts describing how
    solutions translate between the two sides; ``offset`` is the claimed
    difference between the reduced optimum and the source optimum (for the
    sat kind it is the domination number that satisfiability pins down).
    """

    kind: str
    source: Any
    instance: GeomInstance
    forward: dict
    backward: dict
    offset: int


@dataclass(frozen=True)
class EquivalenceReport:
    """Both recomputed optima plus the verdict on the claimed offset."""

    kind: str
    source_value: int
    reduced_value: int
    offset: int
    ok: bool


# -- chord diagrams ----------------------------------------------------------


@dataclass(frozen=True)
class ChordDiagram:
    """n chords of a circle given by the cyclic order of their 2n endpoints.

    ``order`` lists chord ids 1..n, each appearing exactly twice.
    """

    n: int
    order: tuple[int, ...]

    def __post_init__(self):
        order = tuple(int(c) for c in self.order)
        object.__setattr__(self, "order", order)
        if self.n < 1:
            raise ValueError("a chord diagram needs at least one chord")
        if len(order) != 2 * self.n:
            raise ValueError(f"expected {2 * self.n} endpoints, got {len(order)}")
        for c in range(1, self.n + 1):
            if order.count(c) != 2:
                raise ValueError(f"chord {c} must appear exactly twice")

    def positions(self, c: int) -> tuple[int, int]:
        """The two 1-based endpoint positions of chord c, ascending."""
        first = self.order.index(c) + 1
        second = self.order.index(c, first) + 1
        return first, second


def chords_interleave(cd: ChordDiagram, a: int, b: int) -> bool:
    """True iff the endpoints of the two chords alternate around the circle."""
    j, k = cd.positions(a)
    l, m = cd.positions(b)
    return j < l < k < m or l < j < m < k


def circle_graph(cd: ChordDiagram) -> IntersectionGraph:
    """Interleaving graph of the diagram; labels match the frame ids."""
    edges = [
        (a - 1, b - 1)
        for a in range(1, cd.n + 1)
        for b in range(a + 1, cd.n + 1)
        if chords_interleave(cd, a, b)
    ]
    return IntersectionGraph(cd.n, edges, [f"c{c}" for c in range(1, cd.n + 1)])


def circle_to_diagonal(cd: ChordDiagram) -> GeomInstance:
    """Frames below x+y = 2n+1 whose intersections mirror chord interleaving.

    Endpoint position i becomes the anchor ((2n+1)-i, i) on the diagonal. A
    chord occupying positions j < k becomes the frame with corner at
    ((2n+1)-k, j) and both arms of length k-j, so its arm tips are exactly
    the two anchors. Two frames meet iff their position pairs alternate.
    """
    m = 2 * cd.n + 1
    frames = []
    for c in range(1, cd.n + 1):
        j, k = cd.positions(c)
        frames.append(LFrame(f"c{c}", Point(m - k, j), k - j, k - j))
    return GeomInstance(frames=tuple(frames), diagonal=Diagonal(m))


def circle_to_vertical(cd: ChordDiagram) -> GeomInstance:
    """Frames through the line x = 2n+2 with the same interleaving pattern.

    Endpoint position i becomes the staircase point (i, (2n+1)-i). A chord
    at positions j < k gets its corner at (j, (2n+1)-k), a vertical arm up
    to the staircase point of j, and a horizontal arm crossing the line.
    """
    m = 2 * cd.n + 1
    frames = []
    for c in range(1, cd.n + 1):
        j, k = cd.positions(c)
        frames.append(LFrame(f"c{c}", Point(j, m - k), (m + 1) - j, k - j))
    return GeomInstance(frames=tuple(frames), vline=m + 1)


def circle_certificate(cd: ChordDiagram, variant: str = "diagonal") -> ReductionCertificate:
    """Certificate for either circle construction; the offset is zero."""
    if variant == "diagonal":
        inst = circle_to_diagonal(cd)
    elif variant == "vertical":
        inst = circle_to_vertical(cd)
    else:
        raise ValueError(f"variant must be 'diagonal' or 'vertical', got {variant!r}")
    ids = {str(c): f"c{c}" for c in range(1, cd.n + 1)}
    return ReductionCertificate(
        kind=f"circle-{variant}",
        source=cd,
        instance=inst,
        forward=ids,
        backward={v: int(k) for k, v in ids.items()},
        offset=0,
    )


# -- monotone rectilinear 3SAT -----------------------------------------------


@dataclass(frozen=True)
class ClauseSpec:
    """One clause of a monotone drawing.

    ``literals`` are variable indices (all plain for a positive clause, all
    negated for a negative one); ``legs`` gives the x position where each
    literal's vertical connection meets its variable, one per literal.
    ``depth`` is the number of same-side clauses whose leg span strictly
    contains this clause's; leave it None to have it computed.
    """

    literals: tuple[int, ...]
    positive: bool
    legs: tuple[int, ...]
    depth: Optional[int] = None

    def __post_init__(self):
        lits = tuple(int(v) for v in self.literals)
        legs = tuple(int(p) for p in self.legs)
        if not 1 <= len(lits) <= 3:
            raise InvalidDrawing("a clause carries one to three literals")
        if len(set(lits)) != len(lits):
            raise InvalidDrawing("clause literals must be distinct")
        if len(legs) != len(lits):
            raise InvalidDrawing("one leg position per literal")
        if any(p < 1 for p in legs):
            raise InvalidDrawing("leg positions are positive integers")
        pairs = sorted(zip(lits, legs))
        object.__setattr__(self, "literals", tuple(p[0] for p in pairs))
        object.__setattr__(self, "legs", tuple(p[1] for p in pairs))

    @property
    def side(self) -> str:
        return "above" if self.positive else "below"


@dataclass(frozen=True)
class Monotone3SATDrawing:
    """A planar rectilinear drawing of a monotone 3SAT formula.

    Variables sit on the x axis in index order; positive clauses live above,
    negative below. Validation rejects drawings whose legs would cross a
    clause's horizontal segment and recomputes nesting depths.
    """

    n_vars: int
    clauses: tuple[ClauseSpec, ...]

    def __post_init__(self):
        clauses = tuple(self.clauses)
        if self.n_vars < 1:
            raise InvalidDrawing("need at least one variable")
        if not clauses:
            raise InvalidDrawing("need at least one clause")
        for c in clauses:
            for v in c.literals:
                if not 1 <= v <= self.n_vars:
                    raise InvalidDrawing(f"variable {v} out of range")
        legs_all = [p for c in clauses for p in c.legs]
        if len(set(legs_all)) != len(legs_all):
            raise InvalidDrawing("leg positions must be distinct")
        clusters = _clusters(self.n_vars, clauses)
        for i in range(1, self.n_vars + 1):
            if not clusters[i]:
                raise InvalidDrawing(f"variable {i} appears in no clause")
        for i in range(1, self.n_vars):
            if clusters[i][-1] >= clusters[i + 1][0]:
                raise InvalidDrawing(
                    f"leg clusters of variables {i} and {i + 1} are out of order"
                )
        # a leg strictly inside another same-side clause's span forces
        # nesting, otherwise the leg would cross that clause's horizontal
        spans = [(min(c.legs), max(c.legs)) for c in clauses]
        for a, ca in enumerate(clauses):
            for b, cb in enumerate(clauses):
                if a == b or ca.positive != cb.positive:
                    continue
                alo, ahi = spans[a]
                blo, bhi = spans[b]
                nested = blo < alo and ahi < bhi
                if nested:
                    continue
                for p in ca.legs:
                    if blo < p < bhi:
                        raise InvalidDrawing(
                            f"a leg of clause {a + 1} crosses the horizontal "
                            f"segment of clause {b + 1}"
                        )
        fixed = []
        for a, ca in enumerate(clauses):
            depth = sum(
                1
                for b, cb in enumerate(clauses)
                if b != a
                and cb.positive == ca.positive
                and spans[b][0] < spans[a][0]
                and spans[a][1] < spans[b][1]
            )
            if ca.depth is not None and ca.depth != depth:
                raise InvalidDrawing(
                    f"clause {a + 1} claims depth {ca.depth}, drawing says {depth}"
                )
            fixed.append(ClauseSpec(ca.literals, ca.positive, ca.legs, depth))
        object.__setattr__(self, "clauses", tuple(fixed))

    @property
    def n_clauses(self) -> int:
        return len(self.clauses)


def _clusters(n_vars: int, clauses: Iterable[ClauseSpec]) -> dict[int, list[int]]:
    out: dict[int, list[int]] = {i: [] for i in range(1, n_vars + 1)}
    for c in clauses:
        for v, p in zip(c.literals, c.legs):
            out[v].append(p)
    return {i: sorted(v) for i, v in out.items()}


def satisfiable(d: Monotone3SATDrawing) -> bool:
    """Brute-force satisfiability of the drawn formula."""
    for m in range(1 << d.n_vars):
        ok = True
        for c in d.clauses:
            vals = [(m >> (v - 1)) & 1 for v in c.literals]
            if not (any(vals) if c.positive else not all(vals)):
                ok = False
                break
        if ok:
            return True
    return False


def _check_sat_embedding(d: Monotone3SATDrawing, frames: tuple[LFrame, ...]) -> None:
    """Reject embeddings where a frame contact disagrees with the formula."""
    for f in frames:
        assert abs(f.hspan) == abs(f.vspan), f"unbalanced arms on {f.id}"
        hy = f.hseg()[0]
        _, vy0, vy1 = f.vseg()
        assert hy == 0 or vy0 <= 0 <= vy1, f"{f.id} misses the axis"
    g = build_intersection_graph(GeomInstance(frames=frames))
    idx = {f.id: i for i, f in enumerate(frames)}
    es = g.edge_set()

    def touch(u: str, v: str) -> bool:
        i, j = idx[u], idx[v]
        return (min(i, j), max(i, j)) in es

    for i in range(1, d.n_vars + 1):
        for j, c in enumerate(d.clauses, start=1):
            member = i in c.literals
            if touch(f"x{i}t", f"c{j}") != (c.positive and member):
                raise InvalidDrawing(
                    f"contact between variable {i} (true side) and clause {j} "
                    f"does not match membership"
                )
            if touch(f"x{i}f", f"c{j}") != (not c.positive and member):
                raise InvalidDrawing(
                    f"contact between variable {i} (false side) and clause {j} "
                    f"does not match membership"
                )
        want = {idx[f"x{i}t"], idx[f"x{i}f"]}
        got = set(g.adjacency[idx[f"a{i}"]])
        if got != want:
            names = sorted(frames[v].id for v in got - want)
            raise InvalidDrawing(f"anchor frame a{i} touches extra frames {names}")
        assert touch(f"x{i}t", f"x{i}f"), f"variable {i} halves do not meet"


def monotone3sat_to_lframes(
    d: Monotone3SATDrawing,
) -> tuple[GeomInstance, ReductionCertificate]:
    """Frame family whose domination number is n_vars iff the formula holds.

    Each variable contributes a true-side frame, a false-side frame meeting
    it on the axis, and a short anchor frame touching only those two, so any
    dominating set needs at least one frame per variable. Each clause
    contributes one frame touching exactly the frames of its literals. All
    arms come out equal length and every frame meets the axis, which the
    final clockwise rotation turns into a common vertical line at x = 0.

    Raises InvalidDrawing when the drawing cannot be embedded without a
    spurious contact (a variable frame grazing a foreign clause's vertical).
    """
    clusters = _clusters(d.n_vars, d.clauses)
    x_pos = {i: 4 * clusters[i][-1] + 1 for i in clusters}
    spans = []
    clause_frames = []
    for j, c in enumerate(d.clauses, start=1):
        left = 4 * min(c.legs)
        span = (x_pos[max(c.literals)] + 1) - left
        spans.append(span)
        if c.positive:
            clause_frames.append(LFrame(f"c{j}", Point(left, span), span, -span))
        else:
            clause_frames.append(LFrame(f"c{j}", Point(left, -span), span, span))
    frames: list[LFrame] = []
    for i in range(1, d.n_vars + 1):
        up = 1 + max(
            [2]
            + [spans[j] for j, c in enumerate(d.clauses) if c.positive and i in c.literals]
        )
        dn = 1 + max(
            [2]
            + [
                spans[j]
                for j, c in enumerate(d.clauses)
                if not c.positive and i in c.literals
            ]
        )
        x = x_pos[i]
        frames.append(LFrame(f"x{i}t", Point(x, up), up, -up))
        frames.append(LFrame(f"x{i}f", Point(x, -dn), dn, dn))
        frames.append(LFrame(f"a{i}", Point(x, 0), 1, 1))
    frames.extend(clause_frames)
    _check_sat_embedding(d, tuple(frames))
    inst = GeomInstance(frames=tuple(rotate_cw(f) for f in frames), vline=0)
    forward = {
        str(i): {"true": f"x{i}t", "false": f"x{i}f"} for i in range(1, d.n_vars + 1)
    }
    backward: dict = {}
    for i in range(1, d.n_vars + 1):
        backward[f"x{i}t"] = {"var": i, "value": True}
        backward[f"x{i}f"] = {"var": i, "value": False}
    cert = ReductionCertificate(
        kind="sat",
        source=d,
        instance=inst,
        forward=forward,
        backward=backward,
        offset=d.n_vars,
    )
    return inst, cert


def sat_corpus() -> tuple[Monotone3SATDrawing, ...]:
    """Twelve hand-drawn formulas covering the interesting shapes.

    Entries 2, 4 and 8 are unsatisfiable; the rest are satisfiable. The
    collection exercises single-literal clauses, full triples, duplicated
    clauses, nesting up to depth two, and both sides of the axis.
    """

    def c(lits, positive, legs):
        return ClauseSpec(tuple(lits), positive, tuple(legs))

    return (
        # 1: x1
        Monotone3SATDrawing(1, (c((1,), True, (1,)),)),
        # 2: x1, !x1 (unsat)
        Monotone3SATDrawing(1, (c((1,), True, (1,)), c((1,), False, (2,)))),
        # 3: (x1|x2|x3), (!x1|!x2|!x3)
        Monotone3SATDrawing(
            3,
            (c((1, 2, 3), True, (1, 4, 7)), c((1, 2, 3), False, (2, 5, 8))),
        ),
        # 4: x1, x2, (!x1|!x2) (unsat)
        Monotone3SATDrawing(
            2,
            (c((1,), True, (1,)), c((2,), True, (3,)), c((1, 2), False, (2, 4))),
        ),
        # 5: (!x1|!x3), (!x2) nested inside it, (x1|x2)
        Monotone3SATDrawing(
            3,
            (
                c((1, 3), False, (1, 7)),
                c((2,), False, (3,)),
                c((1, 2), True, (2, 4)),
            ),
        ),
        # 6: (x1|x2), (!x2)
        Monotone3SATDrawing(2, (c((1, 2), True, (1, 3)), c((2,), False, (4,)))),
        # 7: x1 twice, spans side by side
        Monotone3SATDrawing(1, (c((1,), True, (1,)), c((1,), True, (2,)))),
        # 8: x1, x2, x3, (!x1|!x2|!x3) (unsat)
        Monotone3SATDrawing(
            3,
            (
                c((1,), True, (1,)),
                c((2,), True, (4,)),
                c((3,), True, (7,)),
                c((1, 2, 3), False, (2, 5, 8)),
            ),
        ),
        # 9: (x1|x3) with (x2) nested, (!x1|!x2)
        Monotone3SATDrawing(
            3,
            (
                c((1, 3), True, (1, 8)),
                c((2,), True, (3,)),
                c((1, 2), False, (2, 4)),
            ),
        ),
        # 10: four variables, mixed arities and sides
        Monotone3SATDrawing(
            4,
            (
                c((1, 2, 4), True, (1, 5, 16)),
                c((2, 3), True, (6, 9)),
                c((1, 4), False, (2, 17)),
                c((3,), False, (10,)),
            ),
        ),
        # 11: (x1|x2) twice nested, (!x1|!x2)
        Monotone3SATDrawing(
            2,
            (
                c((1, 2), False, (3, 6)),
                c((1, 2), True, (1, 5)),
                c((1, 2), True, (2, 4)),
            ),
        ),
        # 12: chain nested to depth two across four variables
        Monotone3SATDrawing(
            4,
            (
                c((1, 4), True, (1, 20)),
                c((2, 3), True, (5, 10)),
                c((3,), True, (9,)),
                c((1, 3), False, (2, 11)),
            ),
        ),
    )


# -- vertex cover ------------------------------------------------------------


def _norm_edges(n: int, edges: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    out = []
    for i, j in edges:
        i, j = int(i), int(j)
        if i == j:
            raise ValueError(f"self-loop at {i}")
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"edge ({i},{j}) out of range")
        out.append((min(i, j), max(i, j)))
    uniq = tuple(sorted(set(out)))
    if len(uniq) != len(out):
        raise ValueError("duplicate edges")
    return uniq


def _check_vc_neighborhoods(
    n: int, edges: tuple[tuple[int, int], ...], inst: GeomInstance
) -> None:
    g = build_intersection_graph(inst)
    idx = {f.id: v for v, f in enumerate(inst.frames)}
    expected: dict[str, set[str]] = {}
    for i in range(1, n + 1):
        expected[f"v{i}"] = {f"p{i}"} | {
            f"e{a}_{b}" for a, b in edges if i in (a, b)
        }
        expected[f"p{i}"] = {f"v{i}", f"q{i}"}
        expected[f"q{i}"] = {f"p{i}"}
    for i, j in edges:
        expected[f"e{i}_{j}"] = {f"v{i}", f"v{j}"} | {
            f"e{t}_{u}" for t, u in edges if u == j and t != i
        }
    for fid, want in expected.items():
        got = {inst.frames[u].id for u in g.adjacency[idx[fid]]}
        assert got == want, f"{fid}: expected {sorted(want)}, got {sorted(got)}"


def vc_to_epg(
    n: int, edges: Iterable[tuple[int, int]]
) -> tuple[GeomInstance, ReductionCertificate]:
    """Grid paths whose edge-sharing graph has domination number VC(G) + n.

    Vertex i gets a long path v_i touching x = 0 at height 2i; edge (i, j)
    gets a short path e_i_j riding v_i's vertical and v_j's horizontal; a
    pendant pair p_i, q_i hangs off each v_i so that every dominating set
    spends one path per vertex before it starts covering edge paths.
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    es = _norm_edges(n, edges)
    frames = []
    for i in range(1, n + 1):
        a = i - n - 1
        frames.append(LFrame(f"v{i}", Point(a, 2 * i), -a, (2 * n + 1 + i) - 2 * i))
    for i, j in es:
        a = i - n - 1
        frames.append(LFrame(f"e{i}_{j}", Point(a, 2 * j), -a, 1))
    for i in range(1, n + 1):
        a = i - n - 1
        frames.append(LFrame(f"p{i}", Point(a, 2 * n + i), -a, 1))
    for i in range(1, n + 1):
        b = -(n + 1 + i)
        frames.append(LFrame(f"q{i}", Point(b, 2 * n + i), -b, 1))
    inst = GeomInstance(frames=tuple(frames), model="edge")
    _check_vc_neighborhoods(n, es, inst)
    cert = ReductionCertificate(
        kind="vc",
        source=(n, es),
        instance=inst,
        forward={
            "cover": {str(i): f"v{i}" for i in range(1, n + 1)},
            "always": [f"p{i}" for i in range(1, n + 1)],
        },
        backward={f"v{i}": i for i in range(1, n + 1)}
        | {f"e{i}_{j}": j for i, j in es},
        offset=n,
    )
    return inst, cert


def _vertex_cover_size(n: int, edges: tuple[tuple[int, int], ...]) -> int:
    best = n
    for m in range(1 << n):
        if all((m >> (i - 1)) & 1 or (m >> (j - 1)) & 1 for i, j in edges):
            best = min(best, bin(m).count("1"))
    return best


# -- edge dominating set -----------------------------------------------------


def _check_eds_neighborhoods(
    edges: tuple[tuple[int, int], ...], inst: GeomInstance
) -> None:
    g = build_intersection_graph(inst)
    for u, (i, j) in enumerate(edges):
        want = {
            v
            for v, (k, l) in enumerate(edges)
            if v != u and (k == i or l == j)
        }
        assert set(g.adjacency[u]) == want, f"edge ({i},{j}) has wrong contacts"


def eds_to_epg(
    n_a: int, n_b: int, edges: Iterable[tuple[int, int]]
) -> tuple[GeomInstance, ReductionCertificate]:
    """Grid paths sharing an edge iff two bipartite edges share an endpoint.

    Edge (a_i, b_j) becomes the path from (-i, 0) to (0, -j) with its corner
    at (-i, -j): paths with equal i overlap on the vertical at x = -i, paths
    with equal j overlap on the horizontal at y = -j, and everything else
    meets in single points at most. Domination in the resulting graph is
    exactly edge domination, so the offset is zero.
    """
    if n_a < 1 or n_b < 1:
        raise ValueError("both sides need at least one vertex")
    seen = set()
    es = []
    for i, j in edges:
        i, j = int(i), int(j)
        if not (1 <= i <= n_a and 1 <= j <= n_b):
            raise ValueError(f"edge ({i},{j}) out of range")
        if (i, j) in seen:
            raise ValueError("duplicate edges")
        seen.add((i, j))
        es.append((i, j))
    if not es:
        raise ValueError("need at least one edge")
    es = tuple(sorted(es))
    frames = tuple(LFrame(f"e{i}_{j}", Point(-i, -j), i, j) for i, j in es)
    inst = GeomInstance(frames=frames, model="edge")
    _check_eds_neighborhoods(es, inst)
    cert = ReductionCertificate(
        kind="eds",
        source=(n_a, n_b, es),
        instance=inst,
        forward={f"{i},{j}": f"e{i}_{j}" for i, j in es},
        backward={f"e{i}_{j}": [i, j] for i, j in es},
        offset=0,
    )
    return inst, cert


def _edge_dominating_size(edges: tuple[tuple[int, int], ...]) -> int:
    for r in range(len(edges) + 1):
        for sub in combinations(edges, r):
            if all(
                any(d[0] == i or d[1] == j for d in sub) for i, j in edges
            ):
                return r
    return len(edges)


# -- verification ------------------------------------------------------------


def verify_equivalence(cert: ReductionCertificate) -> EquivalenceReport:
    """Recompute both optima by brute force and check the claimed offset.

    Raises SourceTooLarge when either side is beyond exhaustive reach.
    """
    g = build_intersection_graph(cert.instance)
    if cert.kind in ("circle-diagonal", "circle-vertical"):
        cd = cert.source
        if cd.n > 12:
            raise SourceTooLarge(f"{cd.n} chords is beyond exhaustive reach")
        src = exact_mds_size(circle_graph(cd))
        red = exact_mds_size(g)
        ok = red == src + cert.offset
    elif cert.kind == "sat":
        d = cert.source
        if d.n_vars > 16 or g.n > 64:
            raise SourceTooLarge(
                f"{d.n_vars} variables / {g.n} frames is beyond exhaustive reach"
            )
        src = 1 if satisfiable(d) else 0
        red = exact_mds_size(g, cap=max(32, g.n))
        ok = red >= cert.offset and (red == cert.offset) == (src == 1)
    elif cert.kind == "vc":
        n, es = cert.source
        if n > 16 or g.n > 64:
            raise SourceTooLarge(
                f"{n} vertices / {g.n} frames is beyond exhaustive reach"
            )
        src = _vertex_cover_size(n, es)
        red = exact_mds_size(g, cap=max(32, g.n))
        ok = red == src + cert.offset
    elif cert.kind == "eds":
        _, _, es = cert.source
        if len(es) > 16:
            raise SourceTooLarge(f"{len(es)} edges is beyond exhaustive reach")
        src = _edge_dominating_size(es)
        red = exact_mds_size(g, cap=max(32, g.n))
        ok = red == src + cert.offset
    else:
        raise ValueError(f"unknown certificate kind {cert.kind!r}")
    return EquivalenceReport(cert.kind, src, red, cert.offset, ok)
