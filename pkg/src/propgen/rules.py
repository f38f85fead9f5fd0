"""Membership rules: premises "column = value", conclusion "column != value".

A rule is valid for a relation when no row matches the premise yet carries the
excluded conclusion value, and feasible when some row matches the premise.
The generator enumerates candidate rules by ascending premise size and keeps
only those that do not extend an already kept rule, which yields exactly the
minimal valid rules.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .relation import Relation, Value


@dataclass(frozen=True)
class Rule:
    """premise column=value pairs (strictly increasing columns) entail concl_col != concl_val."""

    premise: tuple[tuple[int, Value], ...]
    concl_col: int
    concl_val: Value

    def __post_init__(self):
        cols = [c for c, _ in self.premise]
        if any(b <= a for a, b in zip(cols, cols[1:])):
            raise ValueError(f"premise columns must be strictly increasing: {cols}")
        if self.concl_col in cols:
            raise ValueError("conclusion column occurs in the premise")


@dataclass(frozen=True)
class RuleSet:
    relation: Relation
    rules: tuple[Rule, ...]

    def __len__(self) -> int:
        return len(self.rules)

    def __iter__(self):
        return iter(self.rules)


def _premise_matches(premise, row) -> bool:
    return all(row[c] == v for c, v in premise)


def rule_is_valid(rel: Relation, r: Rule) -> bool:
    """No row of rel matches the premise while taking the excluded value."""
    return not any(
        _premise_matches(r.premise, t) and t[r.concl_col] == r.concl_val
        for t in rel.tuples
    )


def rule_is_feasible(rel: Relation, r: Rule) -> bool:
    """Some row of rel matches the premise."""
    return any(_premise_matches(r.premise, t) for t in rel.tuples)


def rule_extends(r1: Rule, r2: Rule) -> bool:
    """r1 has the same conclusion and a premise that contains r2's (reflexive)."""
    if (r1.concl_col, r1.concl_val) != (r2.concl_col, r2.concl_val):
        return False
    p1 = set(r1.premise)
    return all(entry in p1 for entry in r2.premise)


def assignments(rel: Relation, cols) -> list[tuple[Value, ...]]:
    """Distinct projections of the rows onto `cols`, in row order."""
    seen = set()
    out = []
    for t in rel.tuples:
        s = tuple(t[c] for c in cols)
        if s not in seen:
            seen.add(s)
            out.append(s)
    return out


def _check_max_premise(rel: Relation, max_premise) -> int:
    n = rel.arity
    if max_premise is None:
        return n - 1
    if not 0 <= max_premise <= n - 1:
        raise ValueError(f"max premise size must be in 0..{n - 1}, got {max_premise}")
    return max_premise


def generate_rules(rel: Relation, max_premise: int | None = None) -> RuleSet:
    """All minimal valid rules with premise size up to `max_premise` (default n-1).

    Premise sizes ascend from 0; column subsets are taken in lexicographic
    index order, assignments in row order, conclusion columns ascending and
    conclusion values in column-domain order.  A candidate is kept when it is
    valid and does not extend a kept rule; since smaller premises come first,
    the kept list is exactly the minimal valid rules in enumeration order.
    """
    max_premise = _check_max_premise(rel, max_premise)
    n = rel.arity
    kept: list[Rule] = []
    # premises of kept rules, bucketed by conclusion, for fast extension tests
    by_concl: dict[tuple[int, Value], list[frozenset]] = {}
    for size in range(max_premise + 1):
        for X in combinations(range(n), size):
            free = [y for y in range(n) if y not in X]
            for s in assignments(rel, X):
                premise = tuple(zip(X, s))
                matching = [t for t in rel.tuples if _premise_matches(premise, t)]
                premise_set = frozenset(premise)
                for y in free:
                    taken = {t[y] for t in matching}
                    for a in rel.column_domains[y]:
                        if a in taken:
                            continue  # not valid: a matching row takes value a
                        buckets = by_concl.get((y, a), ())
                        if any(p <= premise_set for p in buckets):
                            continue  # extends a kept rule
                        rule = Rule(premise, y, a)
                        kept.append(rule)
                        by_concl.setdefault((y, a), []).append(premise_set)
    return RuleSet(rel, tuple(kept))


def merge_by_premise(rs) -> list[tuple[tuple, tuple[tuple[int, Value], ...]]]:
    """Group rules sharing a premise; one (premise, conclusions) pair per group.

    Groups appear in first-occurrence order; conclusions are sorted by column,
    then by the value's position in that column's domain.  Works for both
    membership and inclusion rule sets.
    """
    rel = rs.relation
    dom_index = [{v: i for i, v in enumerate(d)} for d in rel.column_domains]
    groups: dict[tuple, list] = {}
    order = []
    for r in rs.rules:
        if r.premise not in groups:
            groups[r.premise] = []
            order.append(r.premise)
        groups[r.premise].append((r.concl_col, r.concl_val))
    out = []
    for premise in order:
        concls = sorted(groups[premise], key=lambda cv: (cv[0], dom_index[cv[0]][cv[1]]))
        out.append((premise, tuple(concls)))
    return out


def brute_force_minimal_rules(rel: Relation) -> RuleSet:
    """Independent oracle: enumerate every syntactically possible rule,
    keep the valid and feasible ones, then drop proper extensions."""
    n = rel.arity
    candidates: list[Rule] = []
    for size in range(n):
        for X in combinations(range(n), size):
            for s in product(*(rel.column_domains[c] for c in X)):
                premise = tuple(zip(X, s))
                for y in range(n):
                    if y in X:
                        continue
                    for a in rel.column_domains[y]:
                        r = Rule(premise, y, a)
                        if rule_is_feasible(rel, r) and rule_is_valid(rel, r):
                            candidates.append(r)
    minimal = [
        r for r in candidates
        if not any(q != r and rule_extends(r, q) for q in candidates)
    ]
    return RuleSet(rel, tuple(minimal))
