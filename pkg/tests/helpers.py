"""Seeded random generators shared by the property tests."""

from itertools import product

from propgen import Problem, Relation, Scope

VALUES = ("a", "b", "c", "d", "e")


def random_relation(rng, max_arity=3, max_domain=4, name="r", density=0.4):
    """Random table: arity 1..max_arity, per-column domains, random rows."""
    arity = rng.randint(1, max_arity)
    domains = tuple(tuple(VALUES[: rng.randint(1, max_domain)]) for _ in range(arity))
    rows = tuple(row for row in product(*domains) if rng.random() < density)
    return Relation(name, domains, rows)


def random_problem(rng, max_vars=5, max_scopes=3, max_arity=3, max_domain=3):
    """Random CSP over one shared base domain so any variable fits any column."""
    base = tuple(VALUES[: rng.randint(1, max_domain)])
    names = tuple(f"V{i}" for i in range(rng.randint(1, max_vars)))
    variables = []
    for n in names:
        sub = tuple(v for v in base if rng.random() < 0.7)
        variables.append((n, sub if sub else (rng.choice(base),)))
    scopes = []
    for j in range(rng.randint(1, max_scopes)):
        arity = rng.randint(1, min(max_arity, len(names)))
        rows = tuple(row for row in product(base, repeat=arity) if rng.random() < 0.5)
        rel = Relation(f"r{j}", (base,) * arity, rows)
        scopes.append(Scope(rel, tuple(rng.sample(names, arity))))
    return Problem(tuple(variables), tuple(scopes))
