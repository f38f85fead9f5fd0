"""Built-in relation tables: Boolean gates, Kleene equivalence, the printed
Waltz junctions, a small demo relation, and the derived full-adder table.

The L junction, arrow junction and Allen composition tables are deliberately
not built in; sample transcriptions ship as data files under external-data/.
"""

from __future__ import annotations

from functools import lru_cache

from .relation import Problem, Relation, Scope

_BOOL = ("0", "1")
_WALTZ = ("+", "-", "l", "r")
_KLEENE = ("t", "f", "u")

BUILTIN_NAMES = ("and", "or", "xor", "kleene-equiv", "fork", "t", "line",
                 "base-c", "full-adder")


def _gate(name, rows) -> Relation:
    return Relation(name, (_BOOL,) * 3, rows,
                    column_names=("x", "y", "z"), chr_vars=("X", "Y", "Z"))


_AND = _gate("and", (("0", "0", "0"), ("0", "1", "0"), ("1", "0", "0"), ("1", "1", "1")))
_OR = _gate("or", (("0", "0", "0"), ("0", "1", "1"), ("1", "0", "1"), ("1", "1", "1")))
_XOR = _gate("xor", (("0", "0", "0"), ("0", "1", "1"), ("1", "0", "1"), ("1", "1", "0")))

# Kleene's strong equivalence over true/false/unknown: nine rows of the
# truth table t:(t,f,u) f:(f,t,u) u:(u,u,u)
_EQUIV = Relation(
    "kleene-equiv", (_KLEENE,) * 3,
    (("t", "t", "t"), ("t", "f", "f"), ("t", "u", "u"),
     ("f", "t", "f"), ("f", "f", "t"), ("f", "u", "u"),
     ("u", "t", "u"), ("u", "f", "u"), ("u", "u", "u")),
    column_names=("x", "y", "z"), chr_name="equiv", chr_vars=("X", "Y", "Z"),
)

_FORK = Relation(
    "fork", (_WALTZ,) * 3,
    (("+", "+", "+"), ("-", "-", "-"), ("l", "r", "-"), ("-", "l", "r"), ("r", "-", "l")),
    column_names=("x", "y", "z"), chr_vars=("X", "Y", "Z"),
)

# T-junction column domains are declared in the order that makes the emitted
# conclusion order match the published single-rule form.
_T = Relation(
    "t", (("r", "l", "-", "+"),) * 3,
    (("r", "l", "+"), ("r", "l", "-"), ("r", "l", "r"), ("r", "l", "l")),
    column_names=("x", "y", "z"), chr_vars=("X", "Y", "Z"),
)

# both endpoints of one drawn line, seen from either side
_LINE = Relation(
    "line", (_WALTZ,) * 2,
    (("+", "+"), ("-", "-"), ("l", "r"), ("r", "l")),
    column_names=("x", "y"), chr_vars=("X", "Y"),
)

# two-column demo relation whose restriction to x in {0,1} is rule consistent
# but not arc consistent
_BASE_C = Relation(
    "base-c", (("0", "1", "2"),) * 2,
    (("0", "1"), ("1", "0"), ("2", "2")),
    column_names=("x", "y"), chr_name="c", chr_vars=("X", "Y"),
)


def adder_network() -> Problem:
    """The full-adder gate network with free 0/1 inputs and outputs."""
    variables = tuple((v, _BOOL) for v in ("I1", "I2", "I3", "O1", "O2", "A1", "A2", "X1"))
    constraints = (
        Scope(_XOR, ("I1", "I2", "X1")),
        Scope(_AND, ("I1", "I2", "A1")),
        Scope(_XOR, ("X1", "I3", "O2")),
        Scope(_AND, ("I3", "X1", "A2")),
        Scope(_OR, ("A1", "A2", "O1")),
    )
    return Problem(variables, constraints)


@lru_cache(maxsize=1)
def _full_adder() -> Relation:
    # compound constraint: the gate network's solutions projected on the
    # visible pins, in lexicographic value order
    from .search import brute_force_solutions

    rows = sorted(sol[:5] for sol in brute_force_solutions(adder_network()))
    return Relation(
        "full-adder", (_BOOL,) * 5, tuple(rows),
        column_names=("i1", "i2", "i3", "o1", "o2"),
        chr_name="full_adder", chr_vars=("X", "Y", "Z", "U", "V"),
    )


def builtin(name: str) -> Relation:
    """Look up a built-in relation by its catalogue name."""
    fixed = {
        "and": _AND, "or": _OR, "xor": _XOR, "kleene-equiv": _EQUIV,
        "fork": _FORK, "t": _T, "line": _LINE, "base-c": _BASE_C,
    }
    if name in fixed:
        return fixed[name]
    if name == "full-adder":
        return _full_adder()
    raise ValueError(f"unknown builtin relation {name!r} (choose from {', '.join(BUILTIN_NAMES)})")
