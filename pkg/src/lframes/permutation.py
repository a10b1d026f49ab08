"""Two-line frame instances as permutations, and an exact MDS solver for them.

A frame that crosses one vertical and one horizontal line is read off as a
pair of positions: top-to-bottom on the vertical line, left-to-right on the
horizontal one. Segment crossings in the resulting diagram are exactly the
frame intersections, so dominating sets transfer verbatim.

The solver is a left-to-right scan over the diagram. Its state after a
prefix is the pair (M, F): M is the largest value taken so far, F the
smallest skipped value still waiting for a later, smaller take. States are
kept per take-count as a Pareto frontier under (count <=, M >=, F >=), and
values irrelevant to the remaining suffix are collapsed to sentinels, which
keeps the frontier near-constant on random and on block-decomposable
inputs. Worst-case width is Theta(n) on adversarial inputs; observed width
on random permutations stays below 20 up to n = 10**6.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import DegenerateOrder, NotTwoLineCrossing
from .geometry import GeomInstance
from .graph_core import DominatingSet, IntersectionGraph

_INITIAL_CAP = 24
_PARENT_BYTE_LIMIT = 2**31


@dataclass(frozen=True)
class Permutation:
    """pi[i] is the 1-based position on line two of the i-th vertex on line one."""

    pi: tuple

    def __post_init__(self):
        object.__setattr__(self, "pi", tuple(int(x) for x in self.pi))
        if sorted(self.pi) != list(range(1, len(self.pi) + 1)):
            raise ValueError("pi is not a bijection on 1..n")

    @property
    def n(self) -> int:
        return len(self.pi)


def permutation_graph(
    p: Permutation, labels: Optional[Sequence[str]] = None
) -> IntersectionGraph:
    """Inversion graph of p: i < j adjacent iff pi[i] > pi[j]. Quadratic;
    meant for cross-checks at desk scale."""
    n = p.n
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if p.pi[i] > p.pi[j]
    ]
    if labels is None:
        labels = tuple(str(i + 1) for i in range(n))
    return IntersectionGraph(n, edges, tuple(labels))


def two_line_vertex_order(inst: GeomInstance) -> tuple:
    """Frame indices in line-one order (top to bottom on the vertical line).

    Validates the two-line configuration: every frame must run rightward
    over the vertical line and downward over the horizontal one, corners
    strictly inside the upper-left region.
    """
    if inst.frames is None:
        raise NotTwoLineCrossing("two-line conversion requires a frame instance")
    if inst.vline is None:
        raise NotTwoLineCrossing("instance has no vertical line")
    if inst.hline is None:
        raise NotTwoLineCrossing("instance has no horizontal line")
    V, H = inst.vline, inst.hline
    for f in inst.frames:
        cx, cy = f.corner
        if f.hspan < 0 or f.vspan > 0:
            raise NotTwoLineCrossing(f"frame {f.id!r} is not oriented toward both lines")
        if not (cx < V <= cx + f.hspan):
            raise NotTwoLineCrossing(f"frame {f.id!r} misses the vertical line")
        if not (cy + f.vspan <= H < cy):
            raise NotTwoLineCrossing(f"frame {f.id!r} misses the horizontal line")
    ys = sorted(f.corner.y for f in inst.frames)
    for a, b in zip(ys, ys[1:]):
        if a == b:
            raise DegenerateOrder(f"tied vertical-line crossings at y={a}")
    xs = sorted(f.corner.x for f in inst.frames)
    for a, b in zip(xs, xs[1:]):
        if a == b:
            raise DegenerateOrder(f"tied horizontal-line crossings at x={a}")
    return tuple(sorted(range(len(inst.frames)), key=lambda i: -inst.frames[i].corner.y))


def lframes_to_permutation(inst: GeomInstance) -> Permutation:
    """Read a two-line instance off as a permutation.

    Line one is the vertical line read top to bottom, line two the
    horizontal line read left to right; crossings swap order exactly when
    the frames intersect.
    """
    order1 = two_line_vertex_order(inst)
    by_x = sorted(range(len(inst.frames)), key=lambda i: inst.frames[i].corner.x)
    rank2 = {v: pos + 1 for pos, v in enumerate(by_x)}
    return Permutation(tuple(rank2[v] for v in order1))


def _scan(values, cap):
    """One pass of the frontier scan. Returns (status, takes).

    status 0: takes holds the chosen 0-based positions of one optimum.
    status 1: the frontier outgrew cap; retry with a larger cap.

    Sentinels (values are 1..n): M = 0 below / n+1 above every remaining
    value, F = n+2 for "nothing pending"; a pending F below every remaining
    value can never be cleared, so that state is dropped. Candidates from a
    sorted frontier arrive sorted, so a merge replaces sorting, and
    dominance is checked against a running skyline of lower-count states.
    """
    n = values.shape[0]
    big = n + 1
    inff = n + 2
    huge = n + 3
    suffmin = np.empty(n + 1, np.int64)
    suffmax = np.empty(n + 1, np.int64)
    suffmin[n] = huge
    suffmax[n] = 0
    for p in range(n - 1, -1, -1):
        v = values[p]
        suffmin[p] = v if v < suffmin[p + 1] else suffmin[p + 1]
        suffmax[p] = v if v > suffmax[p + 1] else suffmax[p + 1]

    fc = np.empty(cap, np.int64)
    fm = np.empty(cap, np.int64)
    ff = np.empty(cap, np.int64)
    w = 1
    fc[0] = 0
    fm[0] = 0
    ff[0] = inff
    par = np.empty((n, cap), np.int32)

    # scratch: candidate streams, merged order, skyline, current group
    sc = np.empty(cap, np.int64)
    sm = np.empty(cap, np.int64)
    sf = np.empty(cap, np.int64)
    sp = np.empty(cap, np.int32)
    tc = np.empty(cap, np.int64)
    tm = np.empty(cap, np.int64)
    tf = np.empty(cap, np.int64)
    tp = np.empty(cap, np.int32)
    nc = np.empty(cap, np.int64)
    nm = np.empty(cap, np.int64)
    nf = np.empty(cap, np.int64)
    npar = np.empty(cap, np.int32)
    sky_m = np.empty(2 * cap + 2, np.int64)
    sky_f = np.empty(2 * cap + 2, np.int64)
    sky2_m = np.empty(2 * cap + 2, np.int64)
    sky2_f = np.empty(2 * cap + 2, np.int64)
    g_m = np.empty(cap + 1, np.int64)
    g_f = np.empty(cap + 1, np.int64)

    for p in range(n):
        v = values[p]
        smin = suffmin[p + 1]
        smax = suffmax[p + 1]
        ns = 0
        nt = 0
        for s in range(w):
            c, m, f = fc[s], fm[s], ff[s]
            # skip branch
            f2 = f
            if v > m and v < f:
                f2 = v
            if not (f2 != inff and f2 < smin):
                if f2 != inff and f2 > smax:
                    f2 = smax + 1
                m2 = m
                if m2 < smin:
                    m2 = 0
                elif m2 > smax:
                    m2 = big
                sc[ns] = c
                sm[ns] = m2
                sf[ns] = f2
                sp[ns] = s * 2
                ns += 1
            # take branch
            m3 = m if m > v else v
            f3 = inff if v < f else f
            if not (f3 != inff and f3 < smin):
                if f3 != inff and f3 > smax:
                    f3 = smax + 1
                if m3 < smin:
                    m3 = 0
                elif m3 > smax:
                    m3 = big
                tc[nt] = c + 1
                tm[nt] = m3
                tf[nt] = f3
                tp[nt] = s * 2 + 1
                nt += 1

        # merge the two sorted streams by (count asc, M desc, F desc),
        # pruning on the fly
        i = 0
        j = 0
        kn = 0
        skyn = 0
        gn = 0
        cur_cost = np.int64(-1)
        group_maxf = np.int64(-1)
        overflow = False
        while i < ns or j < nt:
            if j >= nt:
                use_skip = True
            elif i >= ns:
                use_skip = False
            else:
                if sc[i] != tc[j]:
                    use_skip = sc[i] < tc[j]
                elif sm[i] != tm[j]:
                    use_skip = sm[i] > tm[j]
                else:
                    use_skip = sf[i] >= tf[j]
            if use_skip:
                c, m, f, code = sc[i], sm[i], sf[i], sp[i]
                i += 1
            else:
                c, m, f, code = tc[j], tm[j], tf[j], tp[j]
                j += 1
            if c != cur_cost:
                # fold the finished group into the skyline (Pareto merge)
                a = 0
                b = 0
                ms = 0
                runf = np.int64(-1)
                while a < skyn or b < gn:
                    if b >= gn or (a < skyn and sky_m[a] >= g_m[b]):
                        mm, fv = sky_m[a], sky_f[a]
                        a += 1
                    else:
                        mm, fv = g_m[b], g_f[b]
                        b += 1
                    if fv > runf:
                        sky2_m[ms] = mm
                        sky2_f[ms] = fv
                        ms += 1
                        runf = fv
                for t in range(ms):
                    sky_m[t] = sky2_m[t]
                    sky_f[t] = sky2_f[t]
                skyn = ms
                gn = 0
                cur_cost = c
                group_maxf = np.int64(-1)
            if f <= group_maxf:
                continue
            if skyn > 0:
                lo = 0
                hi = skyn - 1
                t = -1
                while lo <= hi:
                    mid = (lo + hi) // 2
                    if sky_m[mid] >= m:
                        t = mid
                        lo = mid + 1
                    else:
                        hi = mid - 1
                if t >= 0 and sky_f[t] >= f:
                    continue
            if kn >= cap:
                overflow = True
                break
            nc[kn] = c
            nm[kn] = m
            nf[kn] = f
            npar[kn] = code
            kn += 1
            g_m[gn] = m
            g_f[gn] = f
            gn += 1
            group_maxf = f
        if overflow:
            return 1, np.empty(0, np.int64)
        for t in range(kn):
            fc[t] = nc[t]
            fm[t] = nm[t]
            ff[t] = nf[t]
            par[p, t] = npar[t]
        w = kn

    # after the last position every survivor is (count, 0, inff); the scan's
    # pruning leaves exactly the minimum count at index 0
    best = 0
    for s in range(1, w):
        if fc[s] < fc[best]:
            best = s
    k = fc[best]
    takes = np.empty(k, np.int64)
    s = best
    for p in range(n - 1, -1, -1):
        code = par[p, s]
        if code & 1:
            k -= 1
            takes[k] = p
        s = code >> 1
    return 0, takes


try:  # pragma: no cover - exercised when numba is installed
    from numba import njit

    _scan_fast = njit(cache=True)(_scan)
except ImportError:  # pragma: no cover
    _scan_fast = None


def mds_permutation(p: Permutation) -> DominatingSet:
    """A minimum dominating set of the inversion graph of p.

    Vertices are 0-based positions on line one. Runs the frontier scan,
    doubling the state capacity on the rare inputs that need more width.
    """
    n = p.n
    if n == 0:
        return DominatingSet(())
    values = np.ascontiguousarray(np.array(p.pi, dtype=np.int64))
    cap = _INITIAL_CAP
    scan = _scan_fast if _scan_fast is not None else _scan
    while True:
        if n * cap * 4 > _PARENT_BYTE_LIMIT:
            raise RuntimeError("state frontier too wide for this input size")
        status, takes = scan(values, cap)
        if status == 0:
            return DominatingSet(tuple(int(t) for t in takes))
        cap *= 2
