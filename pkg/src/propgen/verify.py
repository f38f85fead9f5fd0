"""Randomized checks that the generators and propagators agree with their
independent oracles on a given relation.

Everything here is exhaustive or seeded, so a (relation, trials, seed) triple
always reproduces the same verdicts.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .inclusion import brute_force_minimal_inclusion_rules, generate_inclusion_rules
from .propagation import (check_rule_consistent, fixpoint, gac_filter,
                          make_propagators)
from .relation import Problem, Relation, Scope, column_values
from .rules import brute_force_minimal_rules, generate_rules

# brute-force enumeration stays tractable within these bounds
MAX_ARITY = 4
MAX_DOMAIN = 5
MAX_INCLUSION_ARITY = 3
MAX_INCLUSION_PROJECTION = 4


class SizeGuardError(ValueError):
    """Relation too large for the brute-force oracles."""


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _check_guard(rel: Relation) -> None:
    if rel.arity > MAX_ARITY or max(len(d) for d in rel.column_domains) > MAX_DOMAIN:
        raise SizeGuardError(
            f"relation {rel.name} exceeds the oracle size guard "
            f"(arity <= {MAX_ARITY}, domain size <= {MAX_DOMAIN})"
        )
    if rel.arity > MAX_INCLUSION_ARITY or any(
        len(column_values(rel, c)) > MAX_INCLUSION_PROJECTION for c in range(rel.arity)
    ):
        raise SizeGuardError(
            f"relation {rel.name} exceeds the inclusion oracle size guard "
            f"(arity <= {MAX_INCLUSION_ARITY}, column projection <= {MAX_INCLUSION_PROJECTION})"
        )


def random_subdomains(rng: random.Random, rel: Relation) -> list[tuple[str, ...]]:
    """Nonempty random subsets of the column domains, declaration order kept."""
    out = []
    for dom in rel.column_domains:
        picked = tuple(v for v in dom if rng.random() < 0.5)
        if not picked:
            picked = (rng.choice(dom),)
        out.append(picked)
    return out


def restriction_problem(rel: Relation, domains) -> Problem:
    names = tuple(f"v{i + 1}" for i in range(rel.arity))
    return Problem(tuple(zip(names, (tuple(d) for d in domains))), (Scope(rel, names),))


def same_fixpoint(a, b) -> bool:
    """Fixpoint equality: matching inconsistency verdicts, matching domains when
    consistent.  Inconsistent runs stop at the first empty domain, so their
    remaining domains are not comparable."""
    if a.inconsistent or b.inconsistent:
        return a.inconsistent == b.inconsistent
    return a.snapshot() == b.snapshot()


def run_verification(rel: Relation, trials: int = 100, seed: int = 0) -> list[CheckResult]:
    """Run the oracle suite; raises SizeGuardError for oversized relations."""
    _check_guard(rel)
    results: list[CheckResult] = []

    generated = set(generate_rules(rel).rules)
    oracle = set(brute_force_minimal_rules(rel).rules)
    results.append(CheckResult(
        "membership rules match brute-force enumeration",
        generated == oracle,
        f"{len(generated)} generated / {len(oracle)} enumerated",
    ))

    generated_inc = set(generate_inclusion_rules(rel).rules)
    oracle_inc = set(brute_force_minimal_inclusion_rules(rel).rules)
    results.append(CheckResult(
        "inclusion rules match brute-force enumeration",
        generated_inc == oracle_inc,
        f"{len(generated_inc)} generated / {len(oracle_inc)} enumerated",
    ))

    rng = random.Random(seed)
    binary = all(len(d) <= 2 for d in rel.column_domains)
    inclusion_ok = True
    membership_ok = True
    rule_cons_ok = True
    witness = None
    for _ in range(trials):
        problem = restriction_problem(rel, random_subdomains(rng, rel))
        gac = gac_filter(problem)
        inc = fixpoint(problem, make_propagators(problem, "inclusion"))
        if not same_fixpoint(inc, gac):
            inclusion_ok = False
        mem = fixpoint(problem, make_propagators(problem, "membership"))
        if binary and not same_fixpoint(mem, gac):
            membership_ok = False
        if not gac.inconsistent and not check_rule_consistent(problem, gac):
            rule_cons_ok = False
        if witness is None and not mem.inconsistent and \
                (gac.inconsistent or mem.snapshot() != gac.snapshot()):
            witness = problem.domain_map
    results.append(CheckResult(
        f"inclusion fixpoint equals GAC on {trials} random restrictions", inclusion_ok))
    if binary:
        results.append(CheckResult(
            f"membership fixpoint equals GAC on {trials} random restrictions "
            "(binary domains)", membership_ok))
    results.append(CheckResult(
        f"GAC result is rule consistent on {trials} random restrictions", rule_cons_ok))
    if witness is not None:
        detail = "domains " + " ".join(f"{n}={{{','.join(d)}}}" for n, d in witness.items())
    else:
        detail = f"none found in {trials} trials"
    results.append(CheckResult(
        "membership fixpoint strictly weaker than GAC for some restriction",
        True, detail))
    return results
