"""Rule rendering: a parseable native text format and write-only CHR output.

Native format, one rule per line:

    x=0 -> z!=1
    x1 in {0,1} -> x2!=2
    z=1 -> x!=0, y!=0        (merged: several conclusions, one premise)

CHR propagation rules follow the `head ==> guard | body.` shape.  Premise
columns appear in the head as constants (singleton sets included); other
columns become variables.  Non-singleton premise sets turn into in/2 guards.
"""

from __future__ import annotations

import re

from .inclusion import InclusionRule, InclusionRuleSet
from .relation import Relation, Value
from .rules import Rule, RuleSet

_BARE_ATOM = re.compile(r"[a-z0-9][a-zA-Z0-9_]*\Z")


def chr_atom(token: str, force_quotes: bool = False) -> str:
    """Quote a value for CHR output unless it already reads as an atom."""
    if not force_quotes and _BARE_ATOM.match(token):
        return token
    return "'" + token.replace("'", "''") + "'"


def _quoted_column(rel: Relation, col: int) -> bool:
    # columns holding any non-atom value are rendered fully quoted, so one
    # domain prints uniformly ('l' next to '-' rather than l next to '-')
    return any(not _BARE_ATOM.match(v) for v in rel.column_domains[col])


def _chr_value(rel: Relation, col: int, value: Value) -> str:
    return chr_atom(value, force_quotes=_quoted_column(rel, col))


def _ordered_set(rel: Relation, col: int, values: frozenset[Value]) -> list[Value]:
    return [v for v in rel.column_domains[col] if v in values]


# ---------------------------------------------------------------- native text

def _label(rel: Relation, col: int) -> str:
    return rel.column_label(col)


def _format_premise(rel: Relation, premise) -> str:
    parts = []
    for col, rhs in premise:
        if isinstance(rhs, frozenset):
            if len(rhs) == 1:
                parts.append(f"{_label(rel, col)}={next(iter(rhs))}")
            else:
                inner = ",".join(_ordered_set(rel, col, rhs))
                parts.append(f"{_label(rel, col)} in {{{inner}}}")
        else:
            parts.append(f"{_label(rel, col)}={rhs}")
    return ", ".join(parts)


def format_rule(rel: Relation, rule: Rule | InclusionRule) -> str:
    lhs = _format_premise(rel, rule.premise)
    rhs = f"{_label(rel, rule.concl_col)}!={rule.concl_val}"
    return f"{lhs} -> {rhs}" if lhs else f"-> {rhs}"


def format_merged(rel: Relation, premise, conclusions) -> str:
    lhs = _format_premise(rel, premise)
    rhs = ", ".join(f"{_label(rel, c)}!={v}" for c, v in conclusions)
    return f"{lhs} -> {rhs}" if lhs else f"-> {rhs}"


def _column_by_label(rel: Relation) -> dict[str, int]:
    table = {f"x{i + 1}": i for i in range(rel.arity)}
    if rel.column_names is not None:
        for i, name in enumerate(rel.column_names):
            table[name] = i
    return table


def _split_outside_braces(text: str) -> list[str]:
    parts, depth, current = [], 0, []
    for ch in text:
        if ch == "," and depth == 0:
            parts.append("".join(current))
            current = []
            continue
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
        current.append(ch)
    parts.append("".join(current))
    return parts


def _parse_line(rel: Relation, line: str, inclusion: bool):
    cols = _column_by_label(rel)

    def column(label: str) -> int:
        if label not in cols:
            raise ValueError(f"unknown column {label!r} in rule {line!r}")
        return cols[label]

    lhs, _, rhs = line.partition("->")
    if not rhs:
        raise ValueError(f"missing '->' in rule {line!r}")
    premise = []
    for part in filter(None, (p.strip() for p in _split_outside_braces(lhs))):
        m = re.fullmatch(r"(\S+)\s+in\s+\{([^}]*)\}", part)
        if m:
            values = frozenset(v.strip() for v in m.group(2).split(","))
            premise.append((column(m.group(1)), values))
            continue
        name, eq, value = part.partition("=")
        if not eq:
            raise ValueError(f"bad premise {part!r} in rule {line!r}")
        col = column(name.strip())
        premise.append((col, frozenset([value.strip()]) if inclusion else value.strip()))
    premise.sort(key=lambda e: e[0])
    conclusions = []
    for part in (p.strip() for p in rhs.split(",")):
        name, neq, value = part.partition("!=")
        if not neq:
            raise ValueError(f"bad conclusion {part!r} in rule {line!r}")
        conclusions.append((column(name.strip()), value.strip()))
    make = InclusionRule if inclusion else Rule
    return [make(tuple(premise), c, v) for c, v in conclusions]


def parse_native_rules(rel: Relation, text: str) -> RuleSet:
    """Inverse of format_rule/format_merged for membership rules."""
    rules = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rules.extend(_parse_line(rel, line, inclusion=False))
    return RuleSet(rel, tuple(rules))


def parse_native_inclusion_rules(rel: Relation, text: str) -> InclusionRuleSet:
    """Inverse of format_rule/format_merged for inclusion rules."""
    rules = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rules.extend(_parse_line(rel, line, inclusion=True))
    return InclusionRuleSet(rel, tuple(rules))


# ------------------------------------------------------------------ CHR rules

def _head_variables(rel: Relation, constant_cols) -> list[str | None]:
    """Variable name per column (None where a constant is printed).

    Relations carrying a name pool assign it to the non-constant columns left
    to right; otherwise columns are named A, B, C, ... by index.
    """
    n = rel.arity
    if rel.chr_vars is not None:
        pool = iter(rel.chr_vars)
        return [None if i in constant_cols else next(pool) for i in range(n)]
    if n > 26:
        raise ValueError("arity above 26 requires explicit variable names")
    return [None if i in constant_cols else chr(ord("A") + i) for i in range(n)]


def _chr_head(rel: Relation, constants: dict[int, Value]) -> tuple[str, list[str | None]]:
    names = _head_variables(rel, constants)
    args = ",".join(
        _chr_value(rel, i, constants[i]) if i in constants else names[i]
        for i in range(rel.arity)
    )
    return f"{rel.chr_name or rel.name}({args})", names


def emit_chr_membership(rel: Relation, merged) -> str:
    """One CHR propagation rule per merged group: `head ==> V##c,... .`"""
    lines = []
    for premise, conclusions in merged:
        head, names = _chr_head(rel, dict(premise))
        body = ",".join(f"{names[c]}##{_chr_value(rel, c, v)}" for c, v in conclusions)
        lines.append(f"{head} ==> {body}.")
    return "\n".join(lines)


def emit_chr_inclusion(rel: Relation, merged) -> str:
    """Merged inclusion groups: singleton sets print as head constants,
    larger sets as in/2 guards before the `|`."""
    lines = []
    for premise, conclusions in merged:
        constants = {c: next(iter(s)) for c, s in premise if len(s) == 1}
        head, names = _chr_head(rel, constants)
        guards = ",".join(
            "in({},[{}])".format(
                names[c], ", ".join(_chr_value(rel, c, v) for v in _ordered_set(rel, c, s)))
            for c, s in premise if len(s) > 1
        )
        body = ",".join(f"{names[c]}##{_chr_value(rel, c, v)}" for c, v in conclusions)
        if guards:
            lines.append(f"{head} ==> {guards} | {body}.")
        else:
            lines.append(f"{head} ==> {body}.")
    return "\n".join(lines)


def chr_document(rel: Relation, merged, inclusion: bool) -> str:
    """Rule file payload: a comment header plus the emitted rules."""
    kind = "inclusion rules" if inclusion else "membership rules"
    header = [
        f"% {len(merged)} {kind} for {rel.chr_name or rel.name} "
        f"({len(rel.tuples)}-tuple table, arity {rel.arity})",
    ]
    if inclusion:
        header.append("% guard helper: in(X,L) :- dom(X,D), subset(D,L).")
    body = emit_chr_inclusion(rel, merged) if inclusion else emit_chr_membership(rel, merged)
    return "\n".join(header) + ("\n" + body if body else "") + "\n"
