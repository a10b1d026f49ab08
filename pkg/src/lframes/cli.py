"""Command line front end.

Subcommands: generate, solve, verify, render. Reports go to stdout one key
per line and are byte-stable for a fixed seed; measured wall time goes to
stderr. Exit codes: 0 success, 1 usage error, 2 parse or validation error,
3 verification failure.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import replace
from pathlib import Path

from .errors import LFramesError
from .exchange import (
    build_exchange_graph,
    check_local_exchange,
    count_crossings,
    draw_arcs,
)
from .generators import (
    FAMILIES,
    gen_anchored_one_sided,
    gen_bipartite,
    gen_chord_diagram,
    gen_graph,
    generate,
)
from .geometry import GeomInstance
from .graph_core import build_intersection_graph, exact_mds, exact_mds_size, greedy_mds
from .instance_io import (
    RunReport,
    emit_instance,
    format_fields,
    format_report,
    instance_summary,
    parse_instance,
)
from .local_search import LocalSearchConfig, approx_two_sided, local_search_mds
from .permutation import lframes_to_permutation, mds_permutation, two_line_vertex_order
from .reductions import (
    circle_certificate,
    eds_to_epg,
    monotone3sat_to_lframes,
    sat_corpus,
    vc_to_epg,
    verify_equivalence,
)
from .svg import render_svg

_ALGOS = ("exact", "greedy", "local-search", "two-sided", "permutation")
_VERIFY_KINDS = ("circle-diagonal", "circle-vertical", "sat", "vc", "eds", "exchange")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lframes",
        description="dominating sets on rectangle and frame intersection graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="emit a seeded instance")
    p.add_argument("--family", required=True, choices=sorted(FAMILIES))
    p.add_argument("--n", type=_positive, default=8)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", default="-")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("solve", help="run a solver on an instance file")
    p.add_argument("--in", dest="infile", default="-")
    p.add_argument("--algo", choices=_ALGOS, default="exact")
    p.add_argument("--k", type=_positive, default=2)
    p.add_argument("--model", choices=("standard", "edge"))
    p.add_argument("--seed", type=int)
    p.add_argument("--cap", type=_positive, default=32,
                   help="vertex limit for the exact solver")
    p.add_argument("--oracle", action="store_true",
                   help="attach the optimal size ratio when n is small enough")
    p.add_argument("--oracle-cap", type=_positive, default=32)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("verify", help="check a reduction or an exchange drawing")
    p.add_argument("--kind", required=True, choices=_VERIFY_KINDS)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--n", type=_positive, default=5)
    p.add_argument("--k", type=_positive, default=2)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("render", help="draw an instance as SVG")
    p.add_argument("--in", dest="infile", default="-")
    p.add_argument("--algo", choices=_ALGOS,
                   help="solve and highlight the solution")
    p.add_argument("--k", type=_positive, default=2)
    p.add_argument("--exchange", action="store_true",
                   help="overlay exchange arcs between local search and exact")
    p.add_argument("--out", default="-")
    p.set_defaults(func=_cmd_render)

    return parser


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _solve(inst: GeomInstance, algo: str, k: int, cap: int = 32):
    """Run one solver; returns instance-index members."""
    if algo == "permutation":
        order1 = two_line_vertex_order(inst)
        ds = mds_permutation(lframes_to_permutation(inst))
        return tuple(sorted(order1[t] for t in ds.members))
    g = build_intersection_graph(inst)
    if algo == "exact":
        return exact_mds(g, cap=cap).members
    if algo == "greedy":
        return greedy_mds(g).members
    if algo == "local-search":
        return local_search_mds(g, LocalSearchConfig(k=k)).members
    if algo == "two-sided":
        return approx_two_sided(inst, k).members
    raise ValueError(f"unknown algorithm {algo!r}")


def _cmd_generate(args) -> int:
    inst = generate(args.family, args.seed, args.n)
    _write_text(args.out, emit_instance(inst))
    return 0


def _cmd_solve(args) -> int:
    inst = parse_instance(_read_text(args.infile))
    if args.model is not None:
        try:
            inst = replace(inst, model=args.model)
        except ValueError as e:
            raise LFramesError(str(e)) from None
    t0 = time.perf_counter()
    members = _solve(inst, args.algo, args.k, args.cap)
    wall = time.perf_counter() - t0

    ratio = None
    if args.oracle:
        g = build_intersection_graph(inst)
        if g.n <= args.oracle_cap:
            opt = exact_mds_size(g, cap=args.oracle_cap)
            ratio = 1.0 if opt == 0 else len(members) / opt
        else:
            print(f"oracle skipped: n={g.n} exceeds cap {args.oracle_cap}",
                  file=sys.stderr)

    report = RunReport(
        algorithm=args.algo,
        instance=instance_summary(inst),
        n=inst.n,
        size=len(members),
        members=tuple(inst.objects[i].id for i in members),
        k=args.k if args.algo in ("local-search", "two-sided") else None,
        seed=args.seed,
        oracle_ratio=ratio,
        wall_time_s=wall,
    )
    sys.stdout.write(format_report(report))
    print(f"wall_time_s {wall:.3f}", file=sys.stderr)
    return 0


def _equivalence_certificate(kind: str, seed: int, n: int):
    if kind in ("circle-diagonal", "circle-vertical"):
        cd = gen_chord_diagram(seed, n)
        return circle_certificate(cd, kind.split("-")[1])
    if kind == "sat":
        corpus = sat_corpus()
        _, cert = monotone3sat_to_lframes(corpus[seed % len(corpus)])
        return cert
    if kind == "vc":
        nv, edges = gen_graph(seed, n)
        _, cert = vc_to_epg(nv, edges)
        return cert
    n_a = max(1, n // 2)
    edges = gen_bipartite(seed, n_a, max(1, n - n_a))
    _, cert = eds_to_epg(n_a, max(1, n - n_a), edges)
    return cert


def _cmd_verify(args) -> int:
    t0 = time.perf_counter()
    if args.kind == "exchange":
        inst = gen_anchored_one_sided(args.seed, args.n)
        g = build_intersection_graph(inst)
        b_all = local_search_mds(g, LocalSearchConfig(k=args.k)).members
        r_all = exact_mds(g).members
        b_only = sorted(set(b_all) - set(r_all))
        r_only = sorted(set(r_all) - set(b_all))
        h = build_exchange_graph(inst, b_only, r_only)
        crossings = count_crossings(draw_arcs(h, inst))
        m, total = len(h.arcs), len(b_only) + len(r_only)
        planar_ok = total < 3 or m <= 2 * total - 4
        exchange_ok = check_local_exchange(h, g)
        ok = crossings == 0 and planar_ok and exchange_ok
        fields = {
            "kind": args.kind,
            "seed": str(args.seed),
            "n": str(args.n),
            "arcs": str(m),
            "crossings": str(crossings),
            "ok": "true" if ok else "false",
        }
    else:
        cert = _equivalence_certificate(args.kind, args.seed, args.n)
        rep = verify_equivalence(cert)
        ok = rep.ok
        fields = {
            "kind": args.kind,
            "seed": str(args.seed),
            "source_value": str(rep.source_value),
            "reduced_value": str(rep.reduced_value),
            "offset": str(rep.offset),
            "ok": "true" if ok else "false",
        }
    sys.stdout.write(format_fields(fields))
    print(f"wall_time_s {time.perf_counter() - t0:.3f}", file=sys.stderr)
    return 0 if ok else 3


def _cmd_render(args) -> int:
    inst = parse_instance(_read_text(args.infile))
    solution = None
    arcs = None
    if args.algo is not None:
        solution = _solve(inst, args.algo, args.k)
    if args.exchange:
        g = build_intersection_graph(inst)
        b_all = local_search_mds(g, LocalSearchConfig(k=args.k)).members
        r_all = exact_mds(g).members
        b_only = sorted(set(b_all) - set(r_all))
        r_only = sorted(set(r_all) - set(b_all))
        h = build_exchange_graph(inst, b_only, r_only)
        arcs = draw_arcs(h, inst)
        if solution is None:
            solution = b_all
    _write_text(args.out, render_svg(inst, solution, arcs))
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        code = e.code if isinstance(e.code, int) else 1
        return 0 if code == 0 else 1
    try:
        return args.func(args)
    except LFramesError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
