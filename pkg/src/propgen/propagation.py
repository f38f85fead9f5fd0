"""Chaotic-iteration fixpoint propagation, a GAC filter, and consistency checks.

Three propagator kinds share one worklist loop:

* membership rules fire when every premise variable's domain equals the
  premise singleton,
* inclusion rules fire when every premise variable's domain is contained in
  its premise set,
* gac shrinks each variable to the column projection of the relation
  restricted to the current domains.

The firing conditions differ on purpose: equality for membership, containment
for inclusion.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .inclusion import InclusionRule, InclusionRuleSet, generate_inclusion_rules
from .relation import Problem, Relation, Scope, Value, column_values, restrict
from .rules import Rule, RuleSet, generate_rules

MODES = ("membership", "inclusion", "gac")


@dataclass
class DomainStore:
    """Mutable per-variable domains for one propagation run."""

    domains: dict[str, list[Value]]
    inconsistent: bool = False

    @classmethod
    def from_problem(cls, problem: Problem) -> "DomainStore":
        return cls({n: list(dom) for n, dom in problem.variables})

    def copy(self) -> "DomainStore":
        return DomainStore({n: list(d) for n, d in self.domains.items()}, self.inconsistent)

    def snapshot(self) -> dict[str, tuple[Value, ...]]:
        return {n: tuple(d) for n, d in self.domains.items()}

    def remove(self, var: str, val: Value) -> bool:
        dom = self.domains[var]
        if val not in dom:
            return False
        dom.remove(val)
        if not dom:
            self.inconsistent = True
        return True


@dataclass
class PropagatorSet:
    """Per-scope rule sets (aligned with problem.constraints) plus the mode tag."""

    mode: str
    rule_sets: tuple[RuleSet | InclusionRuleSet | None, ...]


@lru_cache(maxsize=None)
def _membership_rules(rel: Relation, max_premise) -> RuleSet:
    return generate_rules(rel, max_premise)


@lru_cache(maxsize=None)
def _inclusion_rules(rel: Relation, max_premise) -> InclusionRuleSet:
    return generate_inclusion_rules(rel, max_premise)


def make_propagators(problem: Problem, mode: str, max_premise: int | None = None) -> PropagatorSet:
    if mode not in MODES:
        raise ValueError(f"unknown propagation mode {mode!r}")
    sets = []
    for sc in problem.constraints:
        if mode == "membership":
            sets.append(_membership_rules(sc.relation, max_premise))
        elif mode == "inclusion":
            sets.append(_inclusion_rules(sc.relation, max_premise))
        else:
            sets.append(None)
    return PropagatorSet(mode, tuple(sets))


def apply_rule(store: DomainStore, scope: Scope, rule: Rule, trace=None) -> bool:
    """Fire a membership rule; returns whether a value was removed."""
    if store.inconsistent:
        return False
    for c, v in rule.premise:
        if store.domains[scope.vars[c]] != [v]:
            return False
    var = scope.vars[rule.concl_col]
    old = tuple(store.domains[var])
    if not store.remove(var, rule.concl_val):
        return False
    if trace is not None:
        trace(scope, rule, var, old, tuple(store.domains[var]))
    return True


def apply_inclusion_rule(store: DomainStore, scope: Scope, rule: InclusionRule, trace=None) -> bool:
    """Fire an inclusion rule; returns whether a value was removed."""
    if store.inconsistent:
        return False
    for c, s in rule.premise:
        if not set(store.domains[scope.vars[c]]) <= s:
            return False
    var = scope.vars[rule.concl_col]
    old = tuple(store.domains[var])
    if not store.remove(var, rule.concl_val):
        return False
    if trace is not None:
        trace(scope, rule, var, old, tuple(store.domains[var]))
    return True


def gac_revise(store: DomainStore, scope: Scope, trace=None) -> list[str]:
    """Shrink every scope variable to its column projection; returns changed variables."""
    rel = restrict(scope.relation, [store.domains[v] for v in scope.vars])
    changed = []
    for i, var in enumerate(scope.vars):
        keep = set(column_values(rel, i))
        dom = store.domains[var]
        if all(v in keep for v in dom):
            continue
        old = tuple(dom)
        store.domains[var] = [v for v in dom if v in keep]
        changed.append(var)
        if trace is not None:
            trace(scope, None, var, old, tuple(store.domains[var]))
        if not store.domains[var]:
            store.inconsistent = True
            break
    return changed


def _apply_scope(store, scope, rule_set, mode, trace) -> list[str]:
    if mode == "gac":
        return gac_revise(store, scope, trace)
    changed = []
    fire = apply_rule if mode == "membership" else apply_inclusion_rule
    for rule in rule_set.rules:
        if fire(store, scope, rule, trace):
            changed.append(scope.vars[rule.concl_col])
            if store.inconsistent:
                break
    return changed


def fixpoint(problem: Problem, propagators: PropagatorSet, store: DomainStore | None = None,
             scopes=None, rng=None, trace=None) -> DomainStore:
    """Apply propagators until no domain changes; returns the (possibly
    inconsistent) store.

    `store` is pruned in place when given, otherwise taken from the problem.
    `scopes` optionally seeds the worklist (default: all constraints); follow-up
    work is still scheduled through the full constraint graph.  `rng` picks the
    worklist order at random; the resulting fixpoint is the same for any order.
    """
    if store is None:
        store = DomainStore.from_problem(problem)
    if store.inconsistent:
        return store
    touching: dict[str, list[int]] = {}
    for i, sc in enumerate(problem.constraints):
        for v in sc.vars:
            touching.setdefault(v, []).append(i)
    pending = list(range(len(problem.constraints)) if scopes is None else scopes)
    queued = [False] * len(problem.constraints)
    for i in pending:
        queued[i] = True
    while pending and not store.inconsistent:
        pos = 0 if rng is None else rng.randrange(len(pending))
        idx = pending.pop(pos)
        queued[idx] = False
        changed = _apply_scope(store, problem.constraints[idx],
                               propagators.rule_sets[idx], propagators.mode, trace)
        for var in changed:
            for j in touching.get(var, ()):
                if not queued[j]:
                    pending.append(j)
                    queued[j] = True
    return store


def gac_filter(problem: Problem, store: DomainStore | None = None) -> DomainStore:
    """Arc-consistency oracle: project restricted relations until stable."""
    return fixpoint(problem, make_propagators(problem, "gac"), store=store)


def _store_or_initial(problem, store) -> dict[str, tuple[Value, ...]]:
    return store.snapshot() if store is not None else dict(problem.variables)


def check_rule_consistent(problem: Problem, store: DomainStore | None = None) -> bool:
    """True iff no minimal valid membership rule of any scope would prune anything."""
    doms = _store_or_initial(problem, store)
    for sc in problem.constraints:
        for r in _membership_rules(sc.relation, None).rules:
            if all(doms[sc.vars[c]] == (v,) for c, v in r.premise) and \
                    r.concl_val in doms[sc.vars[r.concl_col]]:
                return False
    return True


def check_inclusion_rule_consistent(problem: Problem, store: DomainStore | None = None) -> bool:
    """True iff no minimal valid inclusion rule of any scope would prune anything."""
    doms = _store_or_initial(problem, store)
    for sc in problem.constraints:
        for r in _inclusion_rules(sc.relation, None).rules:
            if all(set(doms[sc.vars[c]]) <= s for c, s in r.premise) and \
                    r.concl_val in doms[sc.vars[r.concl_col]]:
                return False
    return True


def check_arc_consistent(problem: Problem, store: DomainStore | None = None) -> bool:
    """True iff one GAC sweep over every scope changes nothing."""
    doms = _store_or_initial(problem, store)
    for sc in problem.constraints:
        rel = restrict(sc.relation, [doms[v] for v in sc.vars])
        for i, var in enumerate(sc.vars):
            if set(doms[var]) - set(column_values(rel, i)):
                return False
    return True
