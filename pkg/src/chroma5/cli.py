"""Batch command-line front end.

Exit codes: 0 success / member / bound held; 1 violation found (witness JSON
on stdout); 2 input error; 3 capability or budget exhausted.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from . import io as gio
from .engine import BranchTrace, color, phi, replay_trace
from .errors import (
    CapabilityError,
    ClassViolationError,
    InputError,
    ProofViolationError,
)
from .families import co_schlafli, g_star, g_star_H, grotzsch, mycielskian, random_member, table1, table1_declared_chi
from .graph import Graph, bits
from .oracle import Oracle, OracleLimits
from .partition import check_structural_lemmas, partition_around_c5, pick_c5
from .patterns import catalog, catalog_names, recognize_class_C, verify_class
from .subcolor import BlowupSpec, expand_blowup

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_CAPABILITY = 3


def _read_graph(args) -> Graph:
    if args.graph in (None, "-"):
        text = sys.stdin.read()
    else:
        with open(args.graph, "r", encoding="utf-8") as fh:
            text = fh.read()
    return gio.loads(text, getattr(args, "format", None))


def _emit(payload: dict) -> None:
    print(json.dumps(payload, separators=(",", ":"), sort_keys=True))


def _oracle(args) -> Oracle:
    limits = OracleLimits.from_env()
    budget = getattr(args, "budget", None)
    if budget is not None:
        limits = OracleLimits(max_chi_vertices=limits.max_chi_vertices, budget_secs=budget)
    return Oracle(limits)


def _trace_payload(trace: BranchTrace) -> list[dict]:
    out = []
    for step in trace.steps:
        entry: dict = {"branch": step.branch}
        if step.c5 is not None:
            entry["c5"] = list(step.c5)
        if step.embedding is not None:
            entry["embedding"] = list(step.embedding)
        if step.record is not None:
            rec = dataclasses.asdict(step.record)
            entry["record"] = {
                "named_sets": {k: list(v) for k, v in rec["named_sets"].items()},
                "counters": [[n, list(s), v] for n, s, v in rec["counters"]],
                "cliques": [list(c) for c in rec["cliques"]],
                "stable_sets": [list(s) for s in rec["stable_sets"]],
                "anticomplete_pairs": [[list(a), list(b)] for a, b in rec["anticomplete_pairs"]],
                "relabelings": [list(r) for r in rec["relabelings"]],
            }
        out.append(entry)
    return out


def cmd_verify(args) -> int:
    g = _read_graph(args)
    witness = verify_class(g)
    if witness is None:
        _emit({"member": True, "n": g.n})
        return EXIT_OK
    _emit({"member": False, "pattern": witness.pattern, "embedding": list(witness.embedding)})
    return EXIT_VIOLATION


def cmd_color(args) -> int:
    g = _read_graph(args)
    oracle = _oracle(args)
    coloring, trace = color(g, oracle)
    omega = oracle.clique_number(g)[0] if g.n else 0
    payload = {
        "n": g.n,
        "omega": omega,
        "num_colors": coloring.num_colors,
        "colors": list(coloring.colors),
        "branch_trace": _trace_payload(trace),
        "phi": phi(omega) if omega >= 1 else 0,
        "in_class_C": recognize_class_C(g) is not None,
    }
    if args.json_out:
        with open(args.json_out, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, separators=(",", ":"), sort_keys=True)
            fh.write("\n")
    _emit(payload)
    return EXIT_OK


def _scalar_cmd(args, which: str) -> int:
    g = _read_graph(args)
    oracle = _oracle(args)
    if which == "chi":
        value, coloring = oracle.chromatic_number(g)
        _emit({"chi": value, "n": g.n, "colors": list(coloring.colors)})
    elif which == "omega":
        value, witness = oracle.clique_number(g)
        _emit({"omega": value, "n": g.n, "witness": list(witness)})
    else:
        value, witness = oracle.independence_number(g)
        _emit({"alpha": value, "n": g.n, "witness": list(witness)})
    return EXIT_OK


def cmd_recognize(args) -> int:
    g = _read_graph(args)
    rec = recognize_class_C(g)
    if rec is None:
        _emit({"in_class_C": False, "n": g.n})
        return EXIT_VIOLATION
    ell, weights = rec
    _emit({"in_class_C": True, "isolated": ell, "weights": list(weights), "n": g.n})
    return EXIT_OK


def cmd_lemma_check(args) -> int:
    g = _read_graph(args)
    witness = verify_class(g)
    if witness is not None:
        _emit({"member": False, "pattern": witness.pattern, "embedding": list(witness.embedding)})
        return EXIT_VIOLATION
    c5 = pick_c5(g)
    if c5 is None:
        _emit({"member": True, "c5": None, "violations": []})
        return EXIT_OK
    part = partition_around_c5(g, c5)
    report = check_structural_lemmas(g, part)
    _emit(
        {
            "member": True,
            "c5": list(c5),
            "violations": [{"lemma": lemma, "witness": list(tup)} for lemma, tup in report],
        }
    )
    return EXIT_OK if not report else EXIT_VIOLATION


def cmd_gen(args) -> int:
    name = args.family
    params = args.params
    if name == "table1":
        spec = table1(int(params[0]))
        g, _ = expand_blowup(spec)
    elif name == "grotzsch":
        g = grotzsch()
    elif name == "co-schlafli":
        g = co_schlafli()
    elif name == "gstar":
        g = g_star_H(int(params[0])) if params else g_star()
    elif name == "mycielskian":
        g = mycielskian(_read_graph(args))
    elif name == "c5-blowup":
        if len(params) < 5:
            raise InputError("c5-blowup needs five weights")
        weights = tuple(int(p) for p in params[:5])
        g, _ = expand_blowup(BlowupSpec(catalog("C5"), weights, args.isolated))
    elif name == "random":
        seed = int(params[0]) if params else 0
        sample = random_member(seed, max_n=args.max_n)
        g = sample.graph
    elif name == "pattern":
        if not params:
            raise InputError(f"pattern name required; known: {catalog_names()}")
        g = catalog(params[0])
    else:
        raise InputError(
            "unknown family; known: table1, grotzsch, co-schlafli, gstar, "
            "mycielskian, c5-blowup, random, pattern"
        )
    text = gio.dumps(g, args.out_format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_reproduce_table1(args) -> int:
    oracle = _oracle(args)
    rows = []
    worst = EXIT_OK
    ks = [k for k in range(4, 4 * args.tmax + 2) if (k - k % 4) // 4 <= args.tmax and k % 4 in (0, 1)] if False else []
    ks = [k for k in range(4, 4 * args.tmax + 2)]
    print(f"{'k':>3} {'omega':>6} {'chi_engine':>11} {'chi_oracle':>11} {'phi(k)':>7} {'declared':>9} {'branch':>12} {'ok':>3}")
    for k in ks:
        spec = table1(k)
        g, _ = expand_blowup(spec)
        omega = oracle.clique_number(g)[0]
        chi_oracle = oracle.chromatic_number(g, enforce_size_limit=False)[0]
        coloring, trace = color(g, oracle)
        declared = table1_declared_chi(k)
        ok = (
            omega == k
            and chi_oracle == declared
            and coloring.num_colors == declared
            and trace.final_branch == "classC-W5"
        )
        if not ok:
            worst = EXIT_VIOLATION
        rows.append((k, omega, coloring.num_colors, chi_oracle, phi(k), declared, trace.final_branch, ok))
        print(
            f"{k:>3} {omega:>6} {coloring.num_colors:>11} {chi_oracle:>11} "
            f"{phi(k):>7} {declared:>9} {trace.final_branch:>12} {'y' if ok else 'N'}"
        )
    return worst


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chroma5",
        description="Constructive chromatic bounds for (P2+P3, gem)-free graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_arg(p):
        p.add_argument("graph", nargs="?", default=None, help="graph file (default stdin)")
        p.add_argument("--format", choices=gio.FORMATS, default=None, help="override auto-detection")

    p = sub.add_parser("verify", help="decide (P2+P3, gem)-freeness")
    add_graph_arg(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("color", help="run the constructive colorer")
    add_graph_arg(p)
    p.add_argument("--json", dest="json_out", default=None, help="also write the JSON payload here")
    p.add_argument("--budget", type=float, default=None, help="oracle budget in seconds")
    p.set_defaults(func=cmd_color)

    for which in ("chi", "omega", "alpha"):
        p = sub.add_parser(which, help=f"exact {which}")
        add_graph_arg(p)
        p.add_argument("--budget", type=float, default=None, help="oracle budget in seconds")
        p.set_defaults(func=lambda a, w=which: _scalar_cmd(a, w))

    p = sub.add_parser("recognize-c", help="detect isolated-plus-C5-blowup structure")
    add_graph_arg(p)
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("lemma-check", help="machine-check the structure theory")
    add_graph_arg(p)
    p.set_defaults(func=cmd_lemma_check)

    p = sub.add_parser("gen", help="generate a named graph or family member")
    p.add_argument("family")
    p.add_argument("params", nargs="*", default=[])
    p.add_argument("--out", default=None)
    p.add_argument("--format", dest="out_format", choices=gio.FORMATS, default="json")
    p.add_argument("--isolated", type=int, default=0, help="extra isolated vertices (c5-blowup)")
    p.add_argument("--max-n", type=int, default=120, help="size cap for random members")
    p.add_argument("--graph", default=None, help="input graph (mycielskian)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("reproduce-table1", help="reproduce the extremal table")
    p.add_argument("--tmax", type=int, default=2)
    p.add_argument("--budget", type=float, default=None)
    p.set_defaults(func=cmd_reproduce_table1)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ClassViolationError as exc:
        _emit({"error": "class-violation", "pattern": exc.pattern, "embedding": list(exc.embedding)})
        return EXIT_VIOLATION
    except ProofViolationError as exc:
        _emit({"error": "proof-violation", "fact": exc.fact, "witness": _json_safe(exc.witness)})
        return EXIT_VIOLATION
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapabilityError as exc:
        print(f"capability error: {exc}", file=sys.stderr)
        return EXIT_CAPABILITY
    except FileNotFoundError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def _json_safe(obj):
    if obj is None or isinstance(obj, (int, str, bool)):
        return obj
    if isinstance(obj, (list, tuple)):
        return [_json_safe(x) for x in obj]
    return repr(obj)


if __name__ == "__main__":
    raise SystemExit(main())
