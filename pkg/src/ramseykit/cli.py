"""Command line front end.

Every subcommand is a thin wrapper over the library.  Tabular output is
CSV with a header row, written UTF-8 with \\n line endings, and identical
bytes no matter how many worker threads are configured.  Exit codes: 0
for success or a verified property, 1 for a property violation (a
counterexample artifact is written to a file), 2 for usage errors.

Environment: RAMSEY_SEED supplies the default seed when --seed is
omitted (0 if unset); RAMSEY_MAX_THREADS caps worker threads for the
independence experiment.
"""

from __future__ import annotations

import argparse
import math
import os
import sys

from . import construction, game, homomorphism, hypergraph, poset
from .rng import check_seed


def _usage_error(message: str) -> SystemExit:
    sys.stderr.write(f"ramseykit: {message}\n")
    return SystemExit(2)


def _env_seed() -> int:
    raw = os.environ.get("RAMSEY_SEED", "0")
    try:
        return check_seed(int(raw))
    except ValueError:
        raise _usage_error(f"bad RAMSEY_SEED value {raw!r}")


def _env_threads() -> int:
    raw = os.environ.get("RAMSEY_MAX_THREADS", "1")
    try:
        threads = int(raw)
    except ValueError:
        raise _usage_error(f"bad RAMSEY_MAX_THREADS value {raw!r}")
    if threads < 1:
        raise _usage_error(f"RAMSEY_MAX_THREADS must be >= 1, got {threads}")
    return threads


def _write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        _write_text(out, text)


# ---------------------------------------------------------------------------
# subcommands


def _cmd_construct(args) -> int:
    G = construction.sample_graph(args.k - 1, args.n, args.seed)
    if args.k == 3:
        H = construction.build_h3(G)
    else:
        H = construction.build_hk(G, args.k)
    comment = f"lifted from a random ({args.k - 1})-uniform source, seed={args.seed}"
    hypergraph.save(H, args.out, comment=comment)
    sys.stdout.write(f"wrote {args.out}: k={H.k} n={H.n} edges={len(H.edges)}\n")
    return 0


def _cmd_check_cycles(args) -> int:
    H = hypergraph.load(args.path)
    report = construction.mod_spectrum_report(H, args.max_s)
    sys.stdout.write(report.to_csv())
    if report.verdict == "PASS":
        sys.stderr.write("PASS: no tight cycle off the residue-0 lengths\n")
        return 0
    lines = ["# tight cycles violating the divisibility rule"]
    for s in report.offending:
        witness = hypergraph.find_tight_cycle(H, s)
        shown = " ".join(str(v) for v in witness) if witness else "?"
        lines.append(f"s={s} cycle: {shown}")
    cx = args.counterexample_out or args.path + ".counterexample.txt"
    _write_text(cx, "\n".join(lines) + "\n")
    sys.stderr.write(
        f"FAIL: cycle lengths {report.offending} hit; witness in {cx}\n"
    )
    return 1


def _cmd_alpha(args) -> int:
    n_values = args.n_values
    rows = construction.alpha_experiment(
        n_values,
        args.seeds_per_n,
        args.seed,
        cap=args.cap,
        max_threads=args.max_threads,
    )
    _emit(construction.alpha_rows_to_csv(rows), args.out)
    return 0


def _cmd_steiner(args) -> int:
    lines = ["t,seed,size"]
    best = None
    for i in range(args.seeds):
        seed = args.seed + i
        packing = construction.greedy_steiner_packing(args.t, seed)
        lines.append(f"{args.t},{seed},{len(packing)}")
        if best is None or len(packing) > len(best):
            best = packing
    _emit("\n".join(lines) + "\n", args.out)
    if args.packing_out and best is not None:
        body = ["# best triple packing found"] + [
            f"{a} {b} {c}" for a, b, c in best.triples
        ]
        _write_text(args.packing_out, "\n".join(body) + "\n")
    return 0


def _cmd_threshold(args) -> int:
    lines = ["n,threshold,threshold_over_log2n"]
    for n in args.n:
        t = construction.union_bound_threshold(n)
        lines.append(f"{n},{t},{t / math.log2(n):.6f}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _make_painter(args):
    if args.painter == "all-red":
        return game.all_red()
    if args.painter == "all-blue":
        return game.all_blue()
    if args.painter == "greedy":
        return game.greedy_saver()
    if args.painter == "random":
        return game.random_painter(args.seed, p_red=args.p_red)
    return game.interactive(sys.stdin, sys.stdout)


def _cmd_game(args) -> int:
    painter = _make_painter(args)
    try:
        stats, transcript = game.run_game(args.t, painter, safety_cap=args.safety_cap)
    except game.GameAborted as abort:
        if args.transcript:
            _write_text(args.transcript, game.transcript_to_jsonl(abort.transcript))
        sys.stdout.write(f"t={args.t} outcome=Aborted after {len(abort.transcript)} events\n")
        return 0
    except game.SafetyCapReached as cap:
        cx = args.transcript or "game-counterexample.jsonl"
        _write_text(cx, game.transcript_to_jsonl(cap.transcript))
        sys.stderr.write(
            f"FAIL: no win within {args.safety_cap} steps; transcript in {cx}\n"
        )
        return 1
    if args.transcript:
        _write_text(args.transcript, game.transcript_to_jsonl(transcript))
    sys.stdout.write(
        f"t={args.t} outcome={stats.outcome} vertices_used={stats.vertices_used} "
        f"red_edges={stats.red_edges} total_edges={stats.total_edges}\n"
    )
    return 0


def _cmd_game_verify(args) -> int:
    if args.t == 5 and not args.enable_t5:
        raise _usage_error("t=5 explores ~1.2e8 branches, pass --enable-t5 to confirm")
    try:
        report = game.exhaustive_verify(args.t, allow_t5=args.enable_t5)
    except game.VerificationError as err:
        cx = args.counterexample_out or "game-verify-counterexample.jsonl"
        _write_text(cx, game.transcript_to_jsonl(err.transcript))
        sys.stderr.write(f"FAIL: {err}; losing branch in {cx}\n")
        return 1
    lines = [
        "t,branches,max_vertices,max_red,max_edges",
        f"{report.t},{report.branches},{report.max_vertices},"
        f"{report.max_red},{report.max_edges}",
    ]
    _emit("\n".join(lines) + "\n", args.out)
    sys.stderr.write(
        f"verified: all painters lose within {report.vertex_bound} insertions\n"
    )
    return 0


def _parse_hypergraph_spec(spec: str) -> hypergraph.Hypergraph:
    kind, _, rest = spec.partition(":")
    if kind == "cycle":
        return hypergraph.tight_cycle(3, int(rest))
    if kind == "clique":
        return hypergraph.complete(3, int(rest))
    if kind == "file":
        return hypergraph.load(rest)
    raise ValueError(f"expected cycle:S, clique:N or file:PATH, got {spec!r}")


def _cmd_hom(args) -> int:
    F = _parse_hypergraph_spec(args.source)
    G = _parse_hypergraph_spec(args.target)
    phi = homomorphism.exists_homomorphism(F, G)
    if phi is None:
        sys.stdout.write("NONE\n")
    else:
        sys.stdout.write(" ".join(str(v) for v in phi) + "\n")
    return 0


def _cmd_poset(args) -> int:
    P = poset.build_J(args.level, args.t, args.k, cap=args.cap)
    if args.count_only:
        width = ""
    else:
        width = str(poset.max_antichain(P))
    lines = [
        "k,t,level,size,width",
        f"{args.k},{args.t},{args.level},{P.p},{width}",
    ]
    out = "\n".join(lines) + "\n"
    if args.antichain and not args.count_only:
        witness = poset.antichain_witness(P)
        out += "# antichain: " + " ".join(str(x) for x in witness) + "\n"
    _emit(out, args.out)
    return 0


def _cmd_bound(args) -> int:
    t = args.t
    vertex_cap = 2 * math.comb(t, 2) + 1
    vertices = args.vertices if args.vertices is not None else vertex_cap
    red = args.red_edges if args.red_edges is not None else 3 * vertex_cap + 1
    total = (
        args.total_edges if args.total_edges is not None else (t + 1) * vertex_cap + 2
    )
    alpha = args.alpha if args.alpha is not None else 1.0 / t
    value = game.upper_bound_estimate(t, vertices, red, total, alpha)
    lines = [
        "t,alpha,vertices,red_edges,total_edges,log2_bound",
        f"{t},{alpha:.6g},{vertices},{red},{total},{value:.6f}",
    ]
    _emit("\n".join(lines) + "\n", args.out)
    return 0


# ---------------------------------------------------------------------------
# argument plumbing


def _comma_ints(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ramseykit",
        description="tight-cycle constructions, the ordered building game, "
        "and the supporting counting machinery",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="lift a random graph and write the result")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_construct, needs_seed=True)

    p = sub.add_parser("check-cycles", help="scan a file for short tight cycles")
    p.add_argument("--in", dest="path", required=True)
    p.add_argument("--max-s", type=int, required=True)
    p.add_argument("--counterexample-out", default=None)
    p.set_defaults(func=_cmd_check_cycles)

    p = sub.add_parser("alpha", help="exact independence numbers of random lifts")
    p.add_argument("--n-values", type=_comma_ints, default=[16, 32, 64])
    p.add_argument("--seeds-per-n", type=int, default=30)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--cap", type=int, default=64)
    p.add_argument("--max-threads", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_alpha, needs_seed=True)

    p = sub.add_parser("steiner", help="randomized greedy partial triple systems")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--seeds", type=int, default=10)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default=None)
    p.add_argument("--packing-out", default=None)
    p.set_defaults(func=_cmd_steiner, needs_seed=True)

    p = sub.add_parser("threshold", help="union-bound clique threshold per order")
    p.add_argument("--n", type=int, nargs="+", required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_threshold)

    p = sub.add_parser("game", help="play one building game against a painter")
    p.add_argument("--t", type=int, required=True)
    p.add_argument(
        "--painter",
        choices=["all-red", "all-blue", "random", "greedy", "interactive"],
        required=True,
    )
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--p-red", type=float, default=0.5)
    p.add_argument("--safety-cap", type=int, default=10000)
    p.add_argument("--transcript", default=None)
    p.set_defaults(func=_cmd_game, needs_seed=True)

    p = sub.add_parser("game-verify", help="exhaust every painter reply tree")
    p.add_argument("--t", type=int, required=True, choices=[3, 4, 5])
    p.add_argument("--enable-t5", action="store_true")
    p.add_argument("--out", default=None)
    p.add_argument("--counterexample-out", default=None)
    p.set_defaults(func=_cmd_game_verify)

    p = sub.add_parser("hom", help="per-edge-injective homomorphism search")
    p.add_argument("--from", dest="source", required=True, metavar="SPEC")
    p.add_argument("--to", dest="target", required=True, metavar="SPEC")
    p.set_defaults(func=_cmd_hom)

    p = sub.add_parser("poset", help="iterated ideal posets: size and width")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--antichain", action="store_true")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--cap", type=int, default=poset.DEFAULT_IDEAL_CAP)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_poset)

    p = sub.add_parser("bound", help="evaluate the log2 upper-bound certificate")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--vertices", type=int, default=None)
    p.add_argument("--red-edges", type=int, default=None)
    p.add_argument("--total-edges", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_bound)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "needs_seed", False) and args.seed is None:
        args.seed = _env_seed()
    if getattr(args, "func", None) is _cmd_alpha and args.max_threads is None:
        args.max_threads = _env_threads()
    try:
        return args.func(args)
    except SystemExit:
        raise
    except (ValueError, poset.IdealCapExceeded) as err:
        sys.stderr.write(f"ramseykit: {err}\n")
        return 2
    except OSError as err:
        sys.stderr.write(f"ramseykit: {err}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
