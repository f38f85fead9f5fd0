"""Command line front end: gen, propagate, solve, verify.

Exit codes: 0 success, 1 inconsistent problem / zero solutions / failed
verification, 2 usage or parse errors.  Stdout is byte-deterministic for
fixed inputs and flags; timing and warnings go to stderr.
"""

from __future__ import annotations

import argparse
import random
import sys
import time

from . import emit
from .catalogue import BUILTIN_NAMES, builtin
from .inclusion import generate_inclusion_rules
from .parsing import ParseError, load_problem, load_relations
from .propagation import fixpoint, make_propagators
from .rules import generate_rules, merge_by_premise
from .search import solve_all
from .verify import SizeGuardError, run_verification

_MODES = {"rules": "membership", "inclusion": "inclusion", "gac": "gac"}


def _warn(message: str) -> None:
    print(f"warning: {message}", file=sys.stderr)


def _resolve_relation(args):
    if (args.builtin is None) == (args.file is None):
        raise ValueError("give either a relation file or --builtin NAME")
    if args.builtin is not None:
        rel = builtin(args.builtin)
    else:
        relations = load_relations(args.file)
        if args.relation is not None:
            by_name = {r.name: r for r in relations}
            if args.relation not in by_name:
                raise ValueError(f"no relation {args.relation!r} in {args.file}")
            rel = by_name[args.relation]
        elif len(relations) == 1:
            rel = relations[0]
        else:
            raise ValueError(f"{args.file} defines several relations; use --relation NAME")
    if not rel.tuples:
        _warn(f"relation {rel.name} has no tuples; every rule set is empty")
    return rel


def _write_output(text: str, out_path: str | None) -> None:
    if out_path is None:
        if text:
            print(text)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") or not text else text + "\n")


def cmd_gen(args) -> int:
    rel = _resolve_relation(args)
    started = time.perf_counter()
    if args.kind == "rules":
        rule_set = generate_rules(rel, args.max_premise)
    else:
        rule_set = generate_inclusion_rules(rel, args.max_premise)
    merged = merge_by_premise(rule_set)
    elapsed = time.perf_counter() - started
    if args.emit == "chr":
        emitted = (emit.emit_chr_inclusion if args.kind == "inclusion"
                   else emit.emit_chr_membership)(rel, merged)
        if args.out is not None:
            emitted = emit.chr_document(rel, merged, inclusion=args.kind == "inclusion")
    elif args.merge:
        emitted = "\n".join(emit.format_merged(rel, p, cs) for p, cs in merged)
    else:
        emitted = "\n".join(emit.format_rule(rel, r) for r in rule_set.rules)
    _write_output(emitted, args.out)
    if args.stats:
        label = "inclusion rules" if args.kind == "inclusion" else "rules"
        print(f"{label}: raw={len(rule_set)} merged={len(merged)} "
              f"elapsed={elapsed:.3f}s", file=sys.stderr)
    return 0


def _trace_printer(problem):
    def trace(scope, rule, var, old, new):
        head = f"{scope.relation.name}({','.join(scope.vars)})"
        if rule is None:
            cause = "gac"
        else:
            cause = "rule " + emit.format_rule(scope.relation, rule)
        print(f"FIRE {head} {cause} : {var} {{{','.join(old)}}} => {{{','.join(new)}}}")
    return trace


def cmd_propagate(args) -> int:
    problem = load_problem(args.problem)
    for msg in problem.junk_value_warnings:
        _warn(msg)
    props = make_propagators(problem, _MODES[args.mode], args.max_premise)
    rng = random.Random(args.seed) if args.seed is not None else None
    trace = _trace_printer(problem) if args.trace else None
    store = fixpoint(problem, props, rng=rng, trace=trace)
    if store.inconsistent:
        print("INCONSISTENT")
        return 1
    for name in problem.names:
        print(f"{name} in {{{','.join(store.domains[name])}}}")
    return 0


def cmd_solve(args) -> int:
    problem = load_problem(args.problem)
    for msg in problem.junk_value_warnings:
        _warn(msg)
    limit = None if args.all or args.limit is None else args.limit
    result = solve_all(problem, _MODES[args.mode], limit=limit,
                       max_premise=args.max_premise)
    for solution in result.solutions:
        print(", ".join(f"{n}={solution[n]}" for n in problem.names))
    print(f"solutions={len(result.solutions)} nodes={result.nodes} "
          f"failures={result.failures}")
    return 0 if result.solutions else 1


def cmd_verify(args) -> int:
    rel = _resolve_relation(args)
    results = run_verification(rel, trials=args.trials, seed=args.seed)
    failed = False
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        line = f"{status} {res.name}"
        if res.detail:
            line += f" ({res.detail})"
        print(line)
        failed = failed or not res.passed
    return 1 if failed else 0


def _add_relation_source(parser) -> None:
    parser.add_argument("file", nargs="?", help="relation file")
    parser.add_argument("--relation", metavar="NAME",
                        help="pick one relation out of a multi-relation file")
    parser.add_argument("--builtin", metavar="NAME",
                        help=f"use a built-in table ({', '.join(BUILTIN_NAMES)})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="propgen",
        description="Generate finite-domain propagation rules from relation tables, "
                    "run them, and emit them as CHR.")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate minimal rules for a relation")
    gen.add_argument("kind", choices=["rules", "inclusion"])
    _add_relation_source(gen)
    gen.add_argument("--max-premise", type=int, metavar="K",
                     help="premise size cutoff (default: arity - 1)")
    gen.add_argument("--emit", choices=["native", "chr"], default="native")
    gen.add_argument("--merge", action="store_true",
                     help="group rules sharing a premise (always on for chr)")
    gen.add_argument("--stats", action="store_true",
                     help="print raw/merged counts and timing to stderr")
    gen.add_argument("--out", metavar="FILE", help="write to FILE instead of stdout")
    gen.set_defaults(run=cmd_gen)

    prop = sub.add_parser("propagate", help="run propagation to fixpoint")
    prop.add_argument("problem", help="problem file")
    prop.add_argument("--mode", choices=sorted(_MODES), required=True)
    prop.add_argument("--max-premise", type=int, metavar="K")
    prop.add_argument("--trace", action="store_true", help="print one line per rule firing")
    prop.add_argument("--seed", type=int, help="randomize the worklist order")
    prop.set_defaults(run=cmd_propagate)

    solve = sub.add_parser("solve", help="enumerate solutions by propagate-and-label")
    solve.add_argument("problem", help="problem file")
    solve.add_argument("--mode", choices=sorted(_MODES), required=True)
    solve.add_argument("--max-premise", type=int, metavar="K")
    group = solve.add_mutually_exclusive_group()
    group.add_argument("--all", action="store_true", help="report every solution (default)")
    group.add_argument("--limit", type=int, metavar="N", help="stop after N solutions")
    solve.set_defaults(run=cmd_solve)

    ver = sub.add_parser("verify", help="check generators and propagators against oracles")
    _add_relation_source(ver)
    ver.add_argument("--trials", type=int, default=100)
    ver.add_argument("--seed", type=int, default=0)
    ver.set_defaults(run=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except (ParseError, SizeGuardError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
