"""Inclusion rules: premises "column within a value set", conclusion "column != value".

Inclusion rules generalize membership rules (singleton sets recover them) and
characterize arc consistency.  Candidate premises range over weak assignments:
tuples of nonempty proper subsets of the column projections that share at
least one witnessing row.  Weak assignments are enumerated in an order that
linearizes the pointwise-superset partial order, so more general rules are
seen first and the extension filter keeps exactly the minimal valid ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator

from .relation import Relation, Value, column_values


@dataclass(frozen=True)
class InclusionRule:
    """premise (column, value set) pairs entail concl_col != concl_val."""

    premise: tuple[tuple[int, frozenset[Value]], ...]
    concl_col: int
    concl_val: Value

    def __post_init__(self):
        cols = [c for c, _ in self.premise]
        if any(b <= a for a, b in zip(cols, cols[1:])):
            raise ValueError(f"premise columns must be strictly increasing: {cols}")
        if self.concl_col in cols:
            raise ValueError("conclusion column occurs in the premise")
        if any(not s for _, s in self.premise):
            raise ValueError("empty premise set")


@dataclass(frozen=True)
class InclusionRuleSet:
    relation: Relation
    rules: tuple[InclusionRule, ...]

    def __len__(self) -> int:
        return len(self.rules)

    def __iter__(self):
        return iter(self.rules)


def _premise_matches(premise, row) -> bool:
    return all(row[c] in s for c, s in premise)


def inclusion_is_valid(rel: Relation, r: InclusionRule) -> bool:
    return not any(
        _premise_matches(r.premise, t) and t[r.concl_col] == r.concl_val
        for t in rel.tuples
    )


def inclusion_is_feasible(rel: Relation, r: InclusionRule) -> bool:
    return any(_premise_matches(r.premise, t) for t in rel.tuples)


def inclusion_extends(r1: InclusionRule, r2: InclusionRule) -> bool:
    """Same conclusion, r1 constrains every column r2 does, with smaller or equal sets."""
    if (r1.concl_col, r1.concl_val) != (r2.concl_col, r2.concl_val):
        return False
    p1 = dict(r1.premise)
    return all(c in p1 and p1[c] <= s for c, s in r2.premise)


def _size_vectors(total: int, maxes) -> Iterator[tuple[int, ...]]:
    # all per-column subset sizes (each in 1..max_i) summing to `total`,
    # lexicographically descending
    if not maxes:
        if total == 0:
            yield ()
        return
    rest_min = len(maxes) - 1
    rest_max = sum(maxes[1:])
    hi = min(maxes[0], total - rest_min)
    lo = max(1, total - rest_max)
    for first in range(hi, lo - 1, -1):
        for tail in _size_vectors(total - first, maxes[1:]):
            yield (first,) + tail


def weak_assignments(rel: Relation, cols) -> Iterator[tuple[frozenset[Value], ...]]:
    """Jointly feasible tuples of nonempty proper subsets of the column projections.

    Yields in decreasing order: total cardinality descends, so every pointwise
    superset of an assignment is yielded before it.  Ties are broken by a fixed
    deterministic order derived from the column-domain value order.  Lazy: the
    stream is generated on demand.
    """
    cols = tuple(cols)
    if any(b <= a for a, b in zip(cols, cols[1:])) or len(set(cols)) != len(cols):
        raise ValueError(f"columns must be strictly increasing: {cols}")
    if not cols:
        if rel.tuples:
            yield ()
        return
    projections = [column_values(rel, c) for c in cols]
    maxes = [len(p) - 1 for p in projections]
    if any(m < 1 for m in maxes):
        return  # a column with at most one occurring value has no proper subsets
    subsets_by_size = [
        {k: [frozenset(s) for s in combinations(p, k)] for k in range(1, len(p))}
        for p in projections
    ]
    for total in range(sum(maxes), len(cols) - 1, -1):
        for sizes in _size_vectors(total, maxes):
            pools = [subsets_by_size[i][k] for i, k in enumerate(sizes)]
            for combo in product(*pools):
                if any(
                    all(t[c] in s for c, s in zip(cols, combo)) for t in rel.tuples
                ):
                    yield combo


def generate_inclusion_rules(rel: Relation, max_premise: int | None = None) -> InclusionRuleSet:
    """All minimal valid inclusion rules with premise size up to `max_premise`.

    Same loop skeleton as the membership generator, with weak assignments in
    decreasing order in place of assignments.
    """
    from .rules import _check_max_premise

    max_premise = _check_max_premise(rel, max_premise)
    n = rel.arity
    kept: list[InclusionRule] = []
    by_concl: dict[tuple[int, Value], list[tuple]] = {}
    for size in range(max_premise + 1):
        for X in combinations(range(n), size):
            free = [y for y in range(n) if y not in X]
            for sets in weak_assignments(rel, X):
                premise = tuple(zip(X, sets))
                premise_map = dict(premise)
                matching = [t for t in rel.tuples if _premise_matches(premise, t)]
                for y in free:
                    taken = {t[y] for t in matching}
                    for a in rel.column_domains[y]:
                        if a in taken:
                            continue
                        buckets = by_concl.get((y, a), ())
                        if any(
                            all(c in premise_map and premise_map[c] <= s for c, s in q)
                            for q in buckets
                        ):
                            continue
                        rule = InclusionRule(premise, y, a)
                        kept.append(rule)
                        by_concl.setdefault((y, a), []).append(premise)
    return InclusionRuleSet(rel, tuple(kept))


def _all_nonempty_subsets(values) -> list[frozenset[Value]]:
    out = []
    for k in range(1, len(values) + 1):
        out.extend(frozenset(s) for s in combinations(values, k))
    return out


def brute_force_minimal_inclusion_rules(rel: Relation) -> InclusionRuleSet:
    """Independent oracle: full enumeration over all subset premises (including
    entire projections), filtered to valid, feasible and minimal."""
    n = rel.arity
    candidates: list[InclusionRule] = []
    for size in range(n):
        for X in combinations(range(n), size):
            pools = [_all_nonempty_subsets(column_values(rel, c)) for c in X]
            for sets in product(*pools):
                premise = tuple(zip(X, sets))
                for y in range(n):
                    if y in X:
                        continue
                    for a in rel.column_domains[y]:
                        r = InclusionRule(premise, y, a)
                        if inclusion_is_feasible(rel, r) and inclusion_is_valid(rel, r):
                            candidates.append(r)
    minimal = [
        r for r in candidates
        if not any(q != r and inclusion_extends(r, q) for q in candidates)
    ]
    return InclusionRuleSet(rel, tuple(minimal))
