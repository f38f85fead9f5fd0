"""Labeling search on top of propagation, plus a brute-force solution oracle."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import prod

from .propagation import DomainStore, PropagatorSet, fixpoint, make_propagators
from .relation import Problem, Value

BRUTE_FORCE_LIMIT = 10**6


@dataclass
class SearchResult:
    """All solutions in search order, with node and failure counts."""

    solutions: list[dict[str, Value]] = field(default_factory=list)
    nodes: int = 0
    failures: int = 0


def _satisfies_all(problem: Problem, assignment: dict[str, Value]) -> bool:
    return all(
        tuple(assignment[v] for v in sc.vars) in sc.relation.tuple_set
        for sc in problem.constraints
    )


def solve_all(problem: Problem, mode: str = "membership", limit: int | None = None,
              max_premise: int | None = None,
              propagators: PropagatorSet | None = None) -> SearchResult:
    """Depth-first labeling: variables in declaration order, values in domain
    order, propagation after every assignment.  Returns all solutions (or the
    first `limit`) in search order; complete assignments are checked against
    every scope before being reported."""
    props = propagators if propagators is not None else \
        make_propagators(problem, mode, max_premise)
    names = problem.names
    touching: dict[str, list[int]] = {}
    for i, sc in enumerate(problem.constraints):
        for v in sc.vars:
            touching.setdefault(v, []).append(i)
    result = SearchResult()

    def dfs(store: DomainStore) -> bool:  # True means the limit was reached
        if store.inconsistent:
            result.failures += 1
            return False
        var = next((n for n in names if len(store.domains[n]) > 1), None)
        if var is None:
            assignment = {n: store.domains[n][0] for n in names}
            if _satisfies_all(problem, assignment):
                result.solutions.append(assignment)
                return limit is not None and len(result.solutions) >= limit
            result.failures += 1
            return False
        for val in list(store.domains[var]):
            result.nodes += 1
            child = store.copy()
            child.domains[var] = [val]
            fixpoint(problem, props, store=child, scopes=touching.get(var, ()))
            if dfs(child):
                return True
        return False

    dfs(fixpoint(problem, props))
    return result


def brute_force_solutions(problem: Problem) -> set[tuple[Value, ...]]:
    """Oracle: Cartesian enumeration filtered by tuple membership.  Solutions
    are value tuples in variable declaration order."""
    domains = [dom for _, dom in problem.variables]
    if prod(len(d) for d in domains) > BRUTE_FORCE_LIMIT:
        raise ValueError("domain product exceeds the brute-force guard")
    names = problem.names
    out = set()
    for combo in product(*domains):
        assignment = dict(zip(names, combo))
        if _satisfies_all(problem, assignment):
            out.add(combo)
    return out
