from collections.abc import Iterator
from dataclasses import dataclass, field
from functools import cached_property

from ablp.models.entities.literals import Literal
from ablp.models.entities.rules import IntegrityConstraint, Rule
from ablp.models.entities.terms import Compound, Term, is_constant
from ablp.models.errors import AbducibleRuleHeadError

PredicateKey = tuple[str, int]


@dataclass(frozen=True)
class AbductiveFramework:
    """An abductive framework: program rules, abducible predicates and integrity constraints.

    No rule of the program may define an abducible predicate; construction fails with
    :class:`~ablp.models.errors.AbducibleRuleHeadError` otherwise.

    Attributes:
        program: Rules in source order.
        abducibles: Abducible predicates as (name, arity) pairs.
        ics: Integrity constraints in source order.
    """

    program: tuple[Rule, ...] = ()
    abducibles: frozenset[PredicateKey] = frozenset()
    ics: tuple[IntegrityConstraint, ...] = ()
    abducible_order: tuple[PredicateKey, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        for rule in self.program:
            if rule.head.key in self.abducibles:
                raise AbducibleRuleHeadError(predicate=f"{rule.head.predicate}/{rule.head.arity}")
        if not self.abducible_order:
            object.__setattr__(self, "abducible_order", tuple(sorted(self.abducibles)))

    @cached_property
    def defined_predicates(self) -> tuple[PredicateKey, ...]:
        """Predicates with at least one rule, in order of first definition."""
        return tuple(dict.fromkeys(rule.head.key for rule in self.program))

    def rules_for(self, key: PredicateKey) -> tuple[Rule, ...]:
        return self._rules_by_predicate.get(key, ())

    @cached_property
    def _rules_by_predicate(self) -> dict[PredicateKey, tuple[Rule, ...]]:
        grouped: dict[PredicateKey, list[Rule]] = {}
        for rule in self.program:
            grouped.setdefault(rule.head.key, []).append(rule)
        return {key: tuple(rules) for key, rules in grouped.items()}

    def is_abducible(self, literal: Literal) -> bool:
        return literal.key in self.abducibles

    def is_fact_defined(self, key: PredicateKey) -> bool:
        """Whether the predicate has rules and all of them are facts."""
        rules = self.rules_for(key)
        return bool(rules) and all(rule.is_fact for rule in rules)

    def body_literals(self) -> Iterator[Literal]:
        for rule in self.program:
            yield from rule.body
        for ic in self.ics:
            yield from ic.body

    @cached_property
    def undefined_predicates(self) -> tuple[PredicateKey, ...]:
        """Predicates used in bodies or constraints that have no rules and are not abducible."""
        defined = set(self.defined_predicates)
        seen = dict.fromkeys(
            literal.key
            for literal in self.body_literals()
            if literal.key not in defined and literal.key not in self.abducibles
        )
        return tuple(seen)

    @cached_property
    def constants(self) -> tuple[Term, ...]:
        """Constant symbols and integers occurring anywhere, in canonical order."""
        found: set[Term] = set()
        for rule in self.program:
            _collect_constants(rule.head.args, found)
            for literal in rule.body:
                _collect_constants(literal.args, found)
        for ic in self.ics:
            for literal in ic.body:
                _collect_constants(literal.args, found)
        return tuple(sorted(found, key=lambda term: term.sort_key()))

    @property
    def size(self) -> int:
        return sum(rule.size() for rule in self.program)

    @property
    def constraint_size(self) -> int:
        return sum(ic.size() for ic in self.ics)


def _collect_constants(args: tuple[Term, ...], found: set[Term]) -> None:
    for arg in args:
        if is_constant(arg):
            found.add(arg)
        elif isinstance(arg, Compound):
            _collect_constants(arg.args, found)
