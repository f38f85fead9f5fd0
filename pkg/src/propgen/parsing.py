"""Text formats for relations and problems.

Relation files are line oriented; `#` starts a comment anywhere:

    relation and 3
    domains: 0 1 | 0 1 | 0 1
    tuples:
    0 0 0
    ...

A file may hold several relation blocks.  Problem files start with `csp` and
mix `use FILE` (loads every relation in the file), `builtin NAME...` (loads
catalogue tables), `var NAME in V...` and `constraint name(V1, V2, ...)`.
"""

from __future__ import annotations

import os
import re

from .relation import Domain, Problem, Relation, Scope


class ParseError(Exception):
    """Syntax or invariant violation, annotated with source and line number."""

    def __init__(self, source: str, line_no: int, message: str):
        super().__init__(f"{source}:{line_no}: {message}")
        self.source = source
        self.line_no = line_no


def _logical_lines(text: str):
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield i, line


def parse_relations(text: str, source: str = "<string>") -> list[Relation]:
    """Parse every relation block in `text`."""
    relations: list[Relation] = []
    lines = list(_logical_lines(text))
    pos = 0

    def fail(line_no, msg):
        raise ParseError(source, line_no, msg)

    while pos < len(lines):
        line_no, line = lines[pos]
        tokens = line.split()
        if tokens[0] != "relation":
            fail(line_no, f"expected 'relation', found {tokens[0]!r}")
        if len(tokens) != 3:
            fail(line_no, "expected 'relation NAME ARITY'")
        name = tokens[1]
        try:
            arity = int(tokens[2])
        except ValueError:
            fail(line_no, f"arity {tokens[2]!r} is not an integer")
        if arity < 1:
            fail(line_no, "arity must be positive")
        pos += 1
        if pos >= len(lines) or not lines[pos][1].startswith("domains:"):
            fail(line_no, f"relation {name}: missing 'domains:' line")
        dom_no, dom_line = lines[pos]
        groups = dom_line[len("domains:"):].split("|")
        if len(groups) != arity:
            fail(dom_no, f"expected {arity} domain groups, found {len(groups)}")
        domains: list[Domain] = []
        for i, group in enumerate(groups):
            values = tuple(group.split())
            if not values:
                fail(dom_no, f"column {i + 1} domain is empty")
            if len(set(values)) != len(values):
                fail(dom_no, f"duplicate value in column {i + 1} domain")
            domains.append(values)
        pos += 1
        if pos >= len(lines) or lines[pos][1] != "tuples:":
            fail(dom_no, f"relation {name}: missing 'tuples:' line")
        pos += 1
        rows: list[tuple[str, ...]] = []
        seen = set()
        while pos < len(lines) and lines[pos][1].split()[0] != "relation":
            row_no, row_line = lines[pos]
            row = tuple(row_line.split())
            if len(row) != arity:
                fail(row_no, f"tuple has {len(row)} values, expected {arity}")
            for i, v in enumerate(row):
                if v not in domains[i]:
                    fail(row_no, f"value {v} not in column {i + 1} domain")
            if row in seen:
                fail(row_no, f"duplicate tuple {' '.join(row)}")
            seen.add(row)
            rows.append(row)
            pos += 1
        try:
            relations.append(Relation(name, tuple(domains), tuple(rows)))
        except ValueError as exc:
            fail(line_no, str(exc))
    if not relations:
        raise ParseError(source, 1, "no relation found")
    return relations


def parse_relation(text: str, source: str = "<string>") -> Relation:
    """Parse a text holding exactly one relation."""
    relations = parse_relations(text, source)
    if len(relations) != 1:
        raise ParseError(source, 1, f"expected one relation, found {len(relations)}")
    return relations[0]


_CONSTRAINT = re.compile(r"(\S+)\s*\(([^()]*)\)\Z")


def parse_problem(text: str, source: str = "<string>", base_dir: str | None = None,
                  relations: dict[str, Relation] | None = None) -> Problem:
    """Parse a problem file into a Problem.

    `relations` pre-populates the relation namespace; `use` lines resolve
    relative to `base_dir`.
    """
    from .catalogue import builtin

    known: dict[str, Relation] = dict(relations or {})
    variables: list[tuple[str, Domain]] = []
    declared: dict[str, Domain] = {}
    scopes: list[Scope] = []
    lines = list(_logical_lines(text))

    def fail(line_no, msg):
        raise ParseError(source, line_no, msg)

    if not lines or lines[0][1] != "csp":
        raise ParseError(source, lines[0][0] if lines else 1, "problem file must start with 'csp'")
    for line_no, line in lines[1:]:
        tokens = line.split()
        keyword = tokens[0]
        if keyword == "use":
            if len(tokens) != 2:
                fail(line_no, "expected 'use FILE'")
            path = tokens[1]
            if base_dir is not None and not os.path.isabs(path):
                path = os.path.join(base_dir, path)
            try:
                with open(path, encoding="utf-8") as fh:
                    loaded = parse_relations(fh.read(), source=path)
            except OSError as exc:
                fail(line_no, f"cannot read {path}: {exc}")
            for rel in loaded:
                if rel.name in known:
                    fail(line_no, f"relation {rel.name} already defined")
                known[rel.name] = rel
        elif keyword == "builtin":
            if len(tokens) < 2:
                fail(line_no, "expected 'builtin NAME...'")
            for name in tokens[1:]:
                try:
                    rel = builtin(name)
                except ValueError as exc:
                    fail(line_no, str(exc))
                if name in known:
                    fail(line_no, f"relation {name} already defined")
                known[name] = rel
        elif keyword == "var":
            if len(tokens) < 4 or tokens[2] != "in":
                fail(line_no, "expected 'var NAME in VALUE...'")
            name = tokens[1]
            if name in declared:
                fail(line_no, f"variable {name} already declared")
            values = tuple(tokens[3:])
            if len(set(values)) != len(values):
                fail(line_no, f"duplicate value in domain of {name}")
            declared[name] = values
            variables.append((name, values))
        elif keyword == "constraint":
            m = _CONSTRAINT.match(line[len("constraint"):].strip())
            if m is None:
                fail(line_no, "expected 'constraint name(V1, V2, ...)'")
            rel_name, arg_text = m.group(1), m.group(2)
            if rel_name not in known:
                fail(line_no, f"unknown relation {rel_name}")
            rel = known[rel_name]
            args = tuple(a.strip() for a in arg_text.split(",")) if arg_text.strip() else ()
            if len(args) != rel.arity:
                fail(line_no, f"relation {rel_name} takes {rel.arity} variables, got {len(args)}")
            for i, v in enumerate(args):
                if v not in declared:
                    fail(line_no, f"undeclared variable {v}")
                if not set(declared[v]) <= set(rel.column_domains[i]):
                    fail(line_no,
                         f"domain of {v} is not a subset of column {i + 1} domain of {rel_name}")
            try:
                scopes.append(Scope(rel, args))
            except ValueError as exc:
                fail(line_no, str(exc))
        else:
            fail(line_no, f"unknown directive {keyword!r}")
    try:
        return Problem(tuple(variables), tuple(scopes))
    except ValueError as exc:
        raise ParseError(source, lines[-1][0] if lines else 1, str(exc))


def load_problem(path: str) -> Problem:
    """Read and parse a problem file; `use` paths resolve next to it."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return parse_problem(text, source=path, base_dir=os.path.dirname(os.path.abspath(path)))


def load_relations(path: str) -> list[Relation]:
    with open(path, encoding="utf-8") as fh:
        return parse_relations(fh.read(), source=path)
