from ablp.models.entities.context import Context
from ablp.models.entities.framework import AbductiveFramework, PredicateKey
from ablp.models.entities.literals import ContextTerm, Literal
from ablp.models.entities.rules import IntegrityConstraint, Rule
from ablp.models.entities.scenario import Scenario
from ablp.models.entities.solution import Solution
from ablp.models.entities.source_program import SourceProgram
from ablp.models.entities.substitution import Substitution
from ablp.models.entities.terms import Compound, Const, Int, Term, TermList, Var, is_constant
from ablp.models.entities.transformed_program import TransformedProgram

__all__ = [
    "AbductiveFramework",
    "Compound",
    "Const",
    "Context",
    "ContextTerm",
    "Int",
    "IntegrityConstraint",
    "Literal",
    "PredicateKey",
    "Rule",
    "Scenario",
    "Solution",
    "SourceProgram",
    "Substitution",
    "Term",
    "TermList",
    "TransformedProgram",
    "Var",
    "is_constant",
]
