from collections.abc import Iterable

from ablp.models.entities.framework import PredicateKey
from ablp.models.entities.literals import ContextTerm, Literal
from ablp.models.entities.rules import Rule
from ablp.models.entities.terms import Compound, Const, Int, Term, TermList, Var, is_constant


class ProgramUtils:
    """Helpers shared by the transformation, the oracle and the generators."""

    @staticmethod
    def program_size(rules: Iterable[Rule]) -> int:
        """Sums ``1 + len(body)`` over the rules; facts count 1.

        Examples:
            >>> ProgramUtils.program_size([])
            0
        """
        return sum(1 + len(rule.body) for rule in rules)

    @staticmethod
    def label(key: PredicateKey) -> str:
        return f"{key[0]}/{key[1]}"

    @staticmethod
    def generic_args(arity: int, prefix: str = "X") -> tuple[Var, ...]:
        """``X`` for one argument, ``X1 .. Xk`` otherwise."""
        if arity == 1:
            return (Var(prefix),)
        return tuple(Var(f"{prefix}{index}") for index in range(1, arity + 1))

    @staticmethod
    def fresh_variable(base: str, used: set[str]) -> Var:
        """Returns a variable named ``base`` or ``base_k`` that is not in ``used``, and records it."""
        name = base
        suffix = 0
        while name in used:
            suffix += 1
            name = f"{base}_{suffix}"
        used.add(name)
        return Var(name)

    @staticmethod
    def variable_names(literals: Iterable[Term]) -> set[str]:
        return {var.name for literal in literals for var in literal.variables()}

    @staticmethod
    def has_distinct_variable_args(literal: Literal) -> bool:
        args = literal.args
        return all(isinstance(arg, Var) for arg in args) and len(set(args)) == len(args)

    @classmethod
    def constants_of(cls, terms: Iterable[Term]) -> set[Term]:
        found: set[Term] = set()
        stack = list(terms)
        while stack:
            term = stack.pop()
            if is_constant(term):
                found.add(term)
            elif isinstance(term, Compound | Literal):
                stack.extend(term.args)
            elif isinstance(term, ContextTerm | TermList):
                stack.extend(term.items)
        return found

    @staticmethod
    def constant_from_text(text: str) -> Term:
        """Builds the constant a token denotes: an integer when it is all digits."""
        return Int(int(text)) if text.lstrip("-").isdigit() else Const(text)
