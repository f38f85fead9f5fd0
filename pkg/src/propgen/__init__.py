"""propgen: compile extensional finite-domain constraints into propagation rules."""

from .catalogue import BUILTIN_NAMES, builtin
from .inclusion import (InclusionRule, InclusionRuleSet,
                        brute_force_minimal_inclusion_rules,
                        generate_inclusion_rules, inclusion_extends,
                        inclusion_is_feasible, inclusion_is_valid,
                        weak_assignments)
from .parsing import (ParseError, load_problem, load_relations, parse_problem,
                      parse_relation, parse_relations)
from .propagation import (DomainStore, PropagatorSet, apply_inclusion_rule,
                          apply_rule, check_arc_consistent,
                          check_inclusion_rule_consistent,
                          check_rule_consistent, fixpoint, gac_filter,
                          make_propagators)
from .relation import (Problem, Relation, Scope, column_values, is_based_on,
                       permute, restrict, tuple_project)
from .rules import (Rule, RuleSet, brute_force_minimal_rules, generate_rules,
                    merge_by_premise, rule_extends, rule_is_feasible,
                    rule_is_valid)
from .search import SearchResult, brute_force_solutions, solve_all
from .verify import SizeGuardError, run_verification

__all__ = [
    "BUILTIN_NAMES", "builtin",
    "InclusionRule", "InclusionRuleSet", "brute_force_minimal_inclusion_rules",
    "generate_inclusion_rules", "inclusion_extends", "inclusion_is_feasible",
    "inclusion_is_valid", "weak_assignments",
    "ParseError", "load_problem", "load_relations", "parse_problem",
    "parse_relation", "parse_relations",
    "DomainStore", "PropagatorSet", "apply_inclusion_rule", "apply_rule",
    "check_arc_consistent", "check_inclusion_rule_consistent",
    "check_rule_consistent", "fixpoint", "gac_filter", "make_propagators",
    "Problem", "Relation", "Scope", "column_values", "is_based_on", "permute",
    "restrict", "tuple_project",
    "Rule", "RuleSet", "brute_force_minimal_rules", "generate_rules",
    "merge_by_premise", "rule_extends", "rule_is_feasible", "rule_is_valid",
    "SearchResult", "brute_force_solutions", "solve_all",
    "SizeGuardError", "run_verification",
]
