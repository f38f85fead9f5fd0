"""Extensional relations over finite symbolic domains, and CSPs built from them.

A Relation is a named tuple table with one finite domain per column.  A
Problem binds relation columns to named variables through Scopes; the scope's
variable order doubles as the column permutation, so no separate permutation
bookkeeping is needed at the problem level.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

Value = str
Domain = tuple[Value, ...]

# reserved by the file formats (comments, domain separators, scopes)
_RESERVED = set("|,#()")


def check_token(token: str) -> str:
    """Reject tokens that could not round-trip through the text formats."""
    if not token or any(ch.isspace() or ch in _RESERVED for ch in token):
        raise ValueError(f"invalid token {token!r}")
    return token


def make_domain(values) -> Domain:
    vals = tuple(values)
    for v in vals:
        check_token(v)
    if len(set(vals)) != len(vals):
        raise ValueError(f"duplicate values in domain {vals}")
    return vals


@dataclass(frozen=True)
class Relation:
    """An extensional constraint: a set of rows over per-column domains.

    Declaration order of domains and tuples is preserved; every enumeration
    downstream derives its determinism from it.  `column_names`, `chr_name`
    and `chr_vars` are presentation metadata used by the rule renderers.
    """

    name: str
    column_domains: tuple[Domain, ...]
    tuples: tuple[tuple[Value, ...], ...]
    column_names: tuple[str, ...] | None = None
    chr_name: str | None = None
    chr_vars: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.arity < 1:
            raise ValueError("relation arity must be at least 1")
        for dom in self.column_domains:
            make_domain(dom)
        seen = set()
        for row in self.tuples:
            if len(row) != self.arity:
                raise ValueError(f"tuple {row} does not match arity {self.arity}")
            for i, v in enumerate(row):
                if v not in self.column_domains[i]:
                    raise ValueError(
                        f"value {v} not in column {i + 1} domain of relation {self.name}"
                    )
            if row in seen:
                raise ValueError(f"duplicate tuple {row} in relation {self.name}")
            seen.add(row)
        if self.column_names is not None and len(self.column_names) != self.arity:
            raise ValueError("column_names length does not match arity")

    @property
    def arity(self) -> int:
        return len(self.column_domains)

    @cached_property
    def tuple_set(self) -> frozenset[tuple[Value, ...]]:
        return frozenset(self.tuples)

    def column_label(self, col: int) -> str:
        """Column name for rule text: declared name, else positional x1..xn."""
        if self.column_names is not None:
            return self.column_names[col]
        return f"x{col + 1}"


def tuple_project(t: tuple[Value, ...], cols) -> tuple[Value, ...]:
    """Components of `t` at the given indices, in the given order."""
    cols = tuple(cols)
    if len(set(cols)) != len(cols):
        raise ValueError(f"duplicate projection indices {cols}")
    for c in cols:
        if not 0 <= c < len(t):
            raise ValueError(f"projection index {c} out of range for {t}")
    return tuple(t[c] for c in cols)


def column_values(rel: Relation, col: int) -> tuple[Value, ...]:
    """Values that actually occur in a column, in column-domain order."""
    present = {t[col] for t in rel.tuples}
    return tuple(v for v in rel.column_domains[col] if v in present)


def permute(rel: Relation, pi) -> Relation:
    """Reindex columns: row d is in the result iff (d[pi[0]],...,d[pi[n-1]]) is in rel."""
    pi = tuple(pi)
    n = rel.arity
    if sorted(pi) != list(range(n)):
        raise ValueError(f"{pi} is not a permutation of 0..{n - 1}")
    domains = [None] * n
    for k in range(n):
        domains[pi[k]] = rel.column_domains[k]
    names = None
    if rel.column_names is not None:
        names = [None] * n
        for k in range(n):
            names[pi[k]] = rel.column_names[k]
        names = tuple(names)
    rows = []
    for t in rel.tuples:
        row = [None] * n
        for k in range(n):
            row[pi[k]] = t[k]
        rows.append(tuple(row))
    return Relation(rel.name, tuple(domains), tuple(rows), column_names=names,
                    chr_name=rel.chr_name, chr_vars=rel.chr_vars)


def restrict(rel: Relation, doms) -> Relation:
    """Intersect the table with the product of `doms`, which become the new column domains."""
    doms = tuple(make_domain(d) for d in doms)
    if len(doms) != rel.arity:
        raise ValueError("restriction must supply one domain per column")
    for i, d in enumerate(doms):
        if not set(d) <= set(rel.column_domains[i]):
            raise ValueError(f"domain {d} is not a subset of column {i + 1} domain")
    rows = tuple(t for t in rel.tuples if all(t[i] in doms[i] for i in range(rel.arity)))
    return Relation(rel.name, doms, rows, column_names=rel.column_names,
                    chr_name=rel.chr_name, chr_vars=rel.chr_vars)


def is_based_on(c: Relation, e: Relation) -> bool:
    """True iff `c` is a domain restriction of `e` (same arity, subset domains, filtered rows)."""
    if c.arity != e.arity:
        raise ValueError("arity mismatch")
    for i in range(c.arity):
        if not set(c.column_domains[i]) <= set(e.column_domains[i]):
            return False
    return c.tuple_set == restrict(e, c.column_domains).tuple_set


@dataclass(frozen=True)
class Scope:
    """A constraint instance: relation column i constrains variable vars[i]."""

    relation: Relation
    vars: tuple[str, ...]

    def __post_init__(self):
        if len(self.vars) != self.relation.arity:
            raise ValueError(
                f"scope for {self.relation.name} has {len(self.vars)} variables, "
                f"relation arity is {self.relation.arity}"
            )
        if len(set(self.vars)) != len(self.vars):
            raise ValueError(f"repeated variable in scope {self.vars}")
        for v in self.vars:
            check_token(v)


@dataclass(frozen=True)
class Problem:
    """Variables with current domains plus the constraints over them."""

    variables: tuple[tuple[str, Domain], ...]
    constraints: tuple[Scope, ...]

    def __post_init__(self):
        names = [n for n, _ in self.variables]
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable declaration")
        for n, dom in self.variables:
            check_token(n)
            if not dom:
                raise ValueError(f"variable {n} has an empty domain")
            make_domain(dom)
        declared = dict(self.variables)
        for sc in self.constraints:
            for i, v in enumerate(sc.vars):
                if v not in declared:
                    raise ValueError(f"undeclared variable {v} in {sc.relation.name} scope")
                if not set(declared[v]) <= set(sc.relation.column_domains[i]):
                    raise ValueError(
                        f"domain of {v} is not a subset of column {i + 1} domain "
                        f"of relation {sc.relation.name}"
                    )

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self.variables)

    @cached_property
    def domain_map(self) -> dict[str, Domain]:
        return dict(self.variables)

    def with_domains(self, domains: dict) -> Problem:
        """Same constraints, domains replaced (declaration order kept)."""
        variables = tuple((n, tuple(domains[n])) for n, _ in self.variables)
        return Problem(variables, self.constraints)

    @cached_property
    def junk_value_warnings(self) -> tuple[str, ...]:
        """Domain values that no tuple of a binding relation can ever support."""
        out = []
        for sc in self.constraints:
            for i, v in enumerate(sc.vars):
                occurring = set(column_values(sc.relation, i))
                for val in self.domain_map[v]:
                    if val not in occurring:
                        out.append(
                            f"value {val} of variable {v} never occurs in column "
                            f"{sc.relation.column_label(i)} of relation {sc.relation.name}"
                        )
        return tuple(out)
