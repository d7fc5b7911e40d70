"""Command-line front end.

Subcommands: ``bounds``, ``cover``, ``verify``, ``gen``, ``rank``, ``oracle``,
``tree``.  Exit codes are fixed so harnesses can tell failure classes apart:
1 parse error, 2 inconsistency (a certified bound crossing, or a cover file
that fails verification), 3 precondition failure (e.g. a non-co-chordal input
to ``cover``), 4 budget exhausted.

``BCCOVER_VERTEX_CAP`` and ``BCCOVER_TIME_CAP`` override the default oracle
budget; per-invocation flags override the environment.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import bounds as bounds_mod
from . import gen as gen_mod
from .chordal import clique_tree, clique_tree_to_text
from .cover import (
    bicliques_from_text,
    bicliques_to_text,
    cover_cochordal,
    cover_defects,
    find_partition,
    verify_cover,
    verify_partition,
)
from .errors import (
    BudgetExceededError,
    GraphFormatError,
    NotChordalError,
    TreeTooLargeError,
)
from .graph import graph_to_text, read_graph, write_graph
from .oracle import (
    DEFAULT_RANKING_BUDGET,
    DEFAULT_SEARCH_BUDGET,
    DEFAULT_VALUE_BUDGET,
    OracleBudget,
    exact_bc,
    exact_bp,
    exact_chromatic,
    exact_clique_number,
    exact_max_matching,
    exhaustive_edge_ranking,
)
from .ranking import (
    heuristic_edge_ranking,
    optimal_edge_ranking,
    ranking_to_text,
    read_tree,
)

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_INCONSISTENT = 2
EXIT_PRECONDITION = 3
EXIT_BUDGET = 4


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; keep 2 reserved for inconsistency
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, "%s: error: %s\n" % (self.prog, message))


def _budget_overrides(args, base):
    vertex = getattr(args, "vertex_cap", None)
    if vertex is None and os.environ.get("BCCOVER_VERTEX_CAP"):
        vertex = int(os.environ["BCCOVER_VERTEX_CAP"])
    time_cap = getattr(args, "time_cap", None)
    if time_cap is None and os.environ.get("BCCOVER_TIME_CAP"):
        time_cap = float(os.environ["BCCOVER_TIME_CAP"])
    if vertex is None and time_cap is None:
        return base
    vertex = vertex if vertex is not None else base.vertex_cap
    edge = max(base.edge_cap, vertex * (vertex - 1) // 2)
    return OracleBudget(
        vertex_cap=vertex,
        edge_cap=edge,
        time_cap=time_cap if time_cap is not None else base.time_cap,
    )


def _write_output(text, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- bounds -------------------------------------------------------------------


def _report_text(report):
    lines = ["n: %d  m: %d" % (report.n, report.m), "lower bounds:"]

    def entry_line(label, entry, extra=""):
        if entry is None:
            return "  %-16s -" % label
        return "  %-16s %s%s  [%s]" % (label, entry.value, extra, entry.tag)

    lines.append(entry_line("log-mc:", report.lb_log_mc))
    lines.append(entry_line("log-chi:", report.lb_log_chi))
    lines.append(entry_line("omega-conflict:", report.lb_omega_conflict))
    if report.lb_matching is not None:
        q = report.lb_matching.value
        lines.append(
            "  %-16s %s/%s (ceil %d)  [%s]"
            % (
                "matching:",
                q.numerator,
                q.denominator,
                -(-q.numerator // q.denominator),
                report.lb_matching.tag,
            )
        )
    else:
        lines.append("  matching:        -")
    lines.append("upper bounds:")
    lines.append(entry_line("mc-1:", report.ub_mc_minus_one))
    lines.append(entry_line("ranking:", report.ub_edge_ranking))
    if report.cover is not None:
        meta = report.cover_meta
        lines.append(
            "cover: size %d (ranking r=%d, %s, all-le-2=%s)"
            % (
                report.cover_size,
                meta.ranking_r,
                "optimal" if meta.ranking_optimal else "heuristic",
                meta.all_le_two,
            )
        )
        lines.extend("  " + l for l in bicliques_to_text(report.cover).splitlines())
    if report.oracle_bc is not None:
        bc = report.oracle_bc
        bp = report.oracle_bp
        lines.append(
            "oracle: bc=%s bp=%s%s"
            % (
                bc.upper if bc.exact else "[%d,%d]" % (bc.lower, bc.upper),
                "-" if bp is None else (
                    bp.upper if bp.exact else "[%d,%d]" % (bp.lower, bp.upper)
                ),
                "" if (bc.exact and bp is not None and bp.exact) else " (inexact)",
            )
        )
    if report.bp_window is not None:
        w = report.bp_window
        extra = ""
        if w.bp_upper_context is not None:
            extra = "  (context: older bound gives %d)" % w.bp_upper_context
        lines.append("bp window: upper %d%s" % (w.bp_upper, extra))
    if report.inconsistent:
        lines.append("INCONSISTENT: a certified lower bound crosses an upper bound")
    return "\n".join(lines) + "\n"


def _one_report(path, args, value_budget, search_budget):
    g = read_graph(path)
    report = bounds_mod.full_report(
        g,
        value_budget=value_budget,
        search_budget=search_budget,
        run_oracle=not args.no_oracle,
    )
    return report


def cmd_bounds(args):
    value_budget = _budget_overrides(args, DEFAULT_VALUE_BUDGET)
    search_budget = _budget_overrides(args, DEFAULT_SEARCH_BUDGET)
    if args.dir:
        files = sorted(
            f for f in os.listdir(args.input) if f.endswith(".graph")
        )
        paths = [os.path.join(args.input, f) for f in files]
        worst = EXIT_OK
        with ThreadPoolExecutor() as pool:
            results = list(
                pool.map(
                    lambda p: _safe_report(p, args, value_budget, search_budget),
                    paths,
                )
            )
        out_lines = []
        for name, payload, code in results:
            payload = dict(payload)
            payload["file"] = name
            out_lines.append(json.dumps(payload, sort_keys=True))
            worst = max(worst, code)
        _write_output("\n".join(out_lines) + "\n", args.out)
        return worst
    try:
        report = _one_report(args.input, args, value_budget, search_budget)
    except GraphFormatError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE
    if args.format == "json":
        _write_output(
            json.dumps(bounds_mod.report_to_json_dict(report), sort_keys=True) + "\n",
            args.out,
        )
    else:
        _write_output(_report_text(report), args.out)
    return EXIT_INCONSISTENT if report.inconsistent else EXIT_OK


def _safe_report(path, args, value_budget, search_budget):
    name = os.path.basename(path)
    try:
        report = _one_report(path, args, value_budget, search_budget)
    except GraphFormatError as exc:
        return name, {"error": str(exc)}, EXIT_PARSE
    payload = bounds_mod.report_to_json_dict(report)
    return name, payload, EXIT_INCONSISTENT if report.inconsistent else EXIT_OK


# -- cover / verify -----------------------------------------------------------


def cmd_cover(args):
    try:
        g = read_graph(args.input)
    except GraphFormatError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE
    try:
        cover, meta = cover_cochordal(g, ranking_mode=args.ranking_mode)
    except NotChordalError as exc:
        print("precondition failed: %s" % exc, file=sys.stderr)
        return EXIT_PRECONDITION
    if not verify_cover(g, cover):  # re-check before writing anything
        print("internal error: produced cover failed verification", file=sys.stderr)
        return EXIT_INCONSISTENT
    if args.format == "json":
        payload = {
            "size": len(cover),
            "bicliques": [
                [sorted(b.canonical().left), sorted(b.canonical().right)]
                for b in cover
            ],
            "ranking_r": meta.ranking_r,
            "ranking_optimal": meta.ranking_optimal,
            "all_leq2_flag": meta.all_le_two,
        }
        _write_output(json.dumps(payload, sort_keys=True) + "\n", args.out)
    else:
        header = (
            "c cover size %d | mc(complement) %d | ranking r %d (%s) | all-le-2 %s\n"
            "c levels before merge %s | after %s\n"
            % (
                len(cover),
                meta.mc_complement,
                meta.ranking_r,
                "optimal" if meta.ranking_optimal else "heuristic",
                meta.all_le_two,
                [meta.level_sizes_before[k] for k in sorted(meta.level_sizes_before)],
                [meta.level_sizes_after[k] for k in sorted(meta.level_sizes_after)],
            )
        )
        _write_output(header + bicliques_to_text(cover), args.out)
    return EXIT_OK


def cmd_verify(args):
    try:
        g = read_graph(args.graph)
    except GraphFormatError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE
    try:
        with open(args.cover_file, "r", encoding="utf-8") as fh:
            bicliques = bicliques_from_text(fh.read())
    except (OSError, ValueError) as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE
    partition = args.mode == "partition"
    ok = (verify_partition if partition else verify_cover)(g, bicliques)
    if ok:
        print("ok: valid %s with %d bicliques" % (args.mode, len(bicliques)))
        return EXIT_OK
    for problem in cover_defects(g, bicliques, partition=partition):
        print(problem)
    return EXIT_INCONSISTENT


# -- gen ------------------------------------------------------------------


def cmd_gen(args):
    try:
        if args.family == "copath":
            inst = gen_mod.gen_copath(args.n)
        elif args.family == "cowindmill":
            inst = gen_mod.gen_cowindmill(args.m, args.k)
        elif args.family == "fig":
            inst = gen_mod.gen_fig_graph(args.id)
        elif args.family == "random-chordal":
            g = gen_mod.gen_random_chordal(args.n, args.density, args.seed)
            inst = gen_mod.NamedInstance(
                name="random-chordal-%d-%s" % (args.n, args.seed),
                graph=g,
                labels=tuple("v%d" % i for i in range(g.n)),
                expected={},
                source="seeded random chordal",
            )
        else:  # two-membership
            shape = _shape_tree(args.shape, args.nodes, args.seed)
            inst = gen_mod.gen_two_membership_cochordal(
                shape,
                [args.node_size] * shape.n,
                [args.mid_size] * len(shape.edges),
                seed=args.seed,
            )
    except ValueError as exc:
        print("precondition failed: %s" % exc, file=sys.stderr)
        return EXIT_PRECONDITION
    text = graph_to_text(inst.graph)
    if args.out:
        write_graph(inst.graph, args.out)
        sidecar = {
            "name": inst.name,
            "labels": list(inst.labels),
            "expected": inst.expected,
            "source": inst.source,
        }
        with open(args.out + ".expected.json", "w", encoding="utf-8") as fh:
            json.dump(sidecar, fh, sort_keys=True, indent=2)
            fh.write("\n")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _shape_tree(shape, nodes, seed):
    if shape == "path":
        return gen_mod.path_tree(nodes)
    if shape == "star":
        return gen_mod.star_tree(nodes)
    if shape == "caterpillar":
        spine = max(2, nodes // 2)
        return gen_mod.caterpillar_tree(spine, nodes - spine)
    return gen_mod.random_tree(nodes, seed)


# -- rank / oracle / tree -------------------------------------------------


def cmd_rank(args):
    try:
        tree = read_tree(args.tree)
    except GraphFormatError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE
    try:
        if args.mode == "heuristic":
            ranking, r = heuristic_edge_ranking(tree)
        elif args.mode == "exact":
            ranking, r = optimal_edge_ranking(tree, max_edges=len(tree.edges))
        else:
            try:
                ranking, r = optimal_edge_ranking(tree)
            except TreeTooLargeError:
                ranking, r = heuristic_edge_ranking(tree)
    except TreeTooLargeError as exc:
        print("budget: %s" % exc, file=sys.stderr)
        return EXIT_BUDGET
    _write_output("r = %d\n" % r + ranking_to_text(ranking), args.out)
    return EXIT_OK


def cmd_oracle(args):
    if args.problem == "ranking":
        try:
            tree = read_tree(args.input)
        except GraphFormatError as exc:
            print("parse error: %s" % exc, file=sys.stderr)
            return EXIT_PARSE
        try:
            r = exhaustive_edge_ranking(
                tree, _budget_overrides(args, DEFAULT_RANKING_BUDGET)
            )
        except BudgetExceededError as exc:
            print("budget: %s" % exc, file=sys.stderr)
            return EXIT_BUDGET
        print("ranking = %d" % r)
        return EXIT_OK

    try:
        g = read_graph(args.input)
    except GraphFormatError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE
    search = _budget_overrides(args, DEFAULT_SEARCH_BUDGET)
    value = _budget_overrides(args, DEFAULT_VALUE_BUDGET)
    try:
        if args.problem == "bc":
            result = exact_bc(g, search)
            label = "bc"
        elif args.problem == "bp":
            result = exact_bp(g, search)
            label = "bp"
        elif args.problem == "chi":
            result = exact_chromatic(g, value)
            label = "chi"
        elif args.problem == "matching":
            result = exact_max_matching(g, value)
            label = "matching"
        else:
            result = exact_clique_number(g, value)
            label = "clique"
    except BudgetExceededError as exc:
        print("budget: %s" % exc, file=sys.stderr)
        return EXIT_BUDGET
    if not result.exact:
        print("%s in [%d, %d] (inexact)" % (label, result.lower, result.upper))
        return EXIT_BUDGET
    print("%s = %d" % (label, result.value))
    if args.problem in ("bc", "bp") and result.certificate:
        sys.stdout.write(bicliques_to_text(result.certificate))
    return EXIT_OK


def cmd_tree(args):
    try:
        g = read_graph(args.input)
    except GraphFormatError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE
    try:
        tree = clique_tree(g)
    except NotChordalError as exc:
        print("precondition failed: %s" % exc, file=sys.stderr)
        return EXIT_PRECONDITION
    _write_output(clique_tree_to_text(tree), args.out)
    return EXIT_OK


def cmd_partition(args):
    try:
        g = read_graph(args.input)
    except GraphFormatError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE
    try:
        tree = clique_tree(g.complement())
    except NotChordalError as exc:
        print("precondition failed: complement not chordal: %s" % exc, file=sys.stderr)
        return EXIT_PRECONDITION
    parts = find_partition(tree, policy=args.policy)
    if not verify_partition(g, parts):
        print("internal error: partition failed verification", file=sys.stderr)
        return EXIT_INCONSISTENT
    _write_output(bicliques_to_text(parts), args.out)
    return EXIT_OK


# -- parser ---------------------------------------------------------------


def build_parser():
    parser = _Parser(prog="bccover", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--out", "-o", default=None, help="output file (default stdout)")
        p.add_argument("--vertex-cap", type=int, default=None)
        p.add_argument("--time-cap", type=float, default=None)

    p = sub.add_parser("bounds", help="bound report for a graph")
    p.add_argument("input", help="graph file, or a directory with --dir")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--no-oracle", action="store_true")
    p.add_argument("--dir", action="store_true", help="batch: analyze every *.graph file, JSONL output")
    add_common(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("cover", help="biclique cover of a co-chordal graph")
    p.add_argument("input")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--ranking-mode", choices=("auto", "exact", "heuristic"), default="auto")
    add_common(p)
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("partition", help="biclique partition of a co-chordal graph")
    p.add_argument("input")
    p.add_argument("--policy", choices=("balanced", "first"), default="balanced")
    add_common(p)
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("verify", help="verify a cover or partition file")
    p.add_argument("graph")
    p.add_argument("cover_file")
    p.add_argument("--mode", choices=("cover", "partition"), default="cover")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate instances")
    gen_sub = p.add_subparsers(dest="family", required=True)
    q = gen_sub.add_parser("copath")
    q.add_argument("--n", type=int, required=True)
    add_common(q)
    q.set_defaults(func=cmd_gen)
    q = gen_sub.add_parser("cowindmill")
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    add_common(q)
    q.set_defaults(func=cmd_gen)
    q = gen_sub.add_parser("fig")
    q.add_argument("--id", required=True)
    add_common(q)
    q.set_defaults(func=cmd_gen)
    q = gen_sub.add_parser("random-chordal")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--density", type=float, default=0.5)
    q.add_argument("--seed", type=int, required=True)
    add_common(q)
    q.set_defaults(func=cmd_gen)
    q = gen_sub.add_parser("two-membership")
    q.add_argument("--shape", choices=("path", "star", "caterpillar", "random"), required=True)
    q.add_argument("--nodes", type=int, required=True)
    q.add_argument("--node-size", type=int, default=3)
    q.add_argument("--mid-size", type=int, default=1)
    q.add_argument("--seed", type=int, required=True)
    add_common(q)
    q.set_defaults(func=cmd_gen)

    p = sub.add_parser("rank", help="edge-ranking of a tree file")
    p.add_argument("--tree", required=True)
    p.add_argument("--mode", choices=("auto", "exact", "heuristic"), default="auto")
    add_common(p)
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("oracle", help="exact brute-force values")
    p.add_argument("problem", choices=("bc", "bp", "chi", "matching", "clique", "ranking"))
    p.add_argument("input")
    add_common(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("tree", help="clique tree of a chordal graph")
    p.add_argument("input")
    add_common(p)
    p.set_defaults(func=cmd_tree)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_PARSE
    try:
        return args.func(args)
    except OSError as exc:
        print("io error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceededError as exc:
        print("budget: %s" % exc, file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
