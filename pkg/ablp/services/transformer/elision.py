import logging
from collections.abc import Iterable

from ablp.helpers.utils.program_utils import ProgramUtils
from ablp.models.dtos.report_dtos import ElidedPositionDTO, ElisionReportDTO
from ablp.models.entities import (
    AbductiveFramework,
    Context,
    IntegrityConstraint,
    Literal,
    PredicateKey,
    Rule,
    Term,
    is_constant,
)

logger = logging.getLogger(__name__)


class ConstantElision:
    """Drops argument positions that hold the same constant in every occurrence of a predicate.

    A position qualifies when each head, body and constraint occurrence of the predicate
    carries one and the same constant there. Dropping it must not make the predicate's
    reduced name/arity pair coincide with another predicate; such predicates are left
    alone and listed under ``skipped`` in the report.
    """

    @classmethod
    def plan(cls, framework: AbductiveFramework) -> ElisionReportDTO:
        occurrences = cls._occurrences(framework)
        known: set[PredicateKey] = set(occurrences) | set(framework.abducibles)
        claimed: set[PredicateKey] = set()
        positions: list[ElidedPositionDTO] = []
        skipped: list[str] = []
        for key, arg_lists in occurrences.items():
            name, arity = key
            constant_positions = [
                (index, arg_lists[0][index])
                for index in range(arity)
                if is_constant(arg_lists[0][index]) and all(args[index] == arg_lists[0][index] for args in arg_lists)
            ]
            if not constant_positions:
                continue
            reduced = (name, arity - len(constant_positions))
            if reduced in known or reduced in claimed:
                logger.warning(
                    "Not eliding constants of %s: %s is already in use",
                    ProgramUtils.label(key),
                    ProgramUtils.label(reduced),
                )
                skipped.append(ProgramUtils.label(key))
                continue
            claimed.add(reduced)
            positions.extend(
                ElidedPositionDTO(predicate=name, arity=arity, position=index, constant=constant)
                for index, constant in constant_positions
            )
        return ElisionReportDTO(positions=tuple(positions), skipped=tuple(skipped))

    @classmethod
    def apply(cls, framework: AbductiveFramework, report: ElisionReportDTO) -> AbductiveFramework:
        if report.is_empty:
            return framework
        dropped = cls._dropped_positions(report)

        def elide(literal: Literal) -> Literal:
            indexes = dropped.get(literal.key)
            if not indexes:
                return literal
            return literal.with_args(tuple(arg for index, arg in enumerate(literal.args) if index not in indexes))

        def elide_key(key: PredicateKey) -> PredicateKey:
            return (key[0], key[1] - len(dropped.get(key, ())))

        return AbductiveFramework(
            program=tuple(
                Rule(elide(rule.head), tuple(elide(item) for item in rule.body)) for rule in framework.program
            ),
            abducibles=frozenset(elide_key(key) for key in framework.abducibles),
            ics=tuple(IntegrityConstraint(tuple(elide(item) for item in ic.body)) for ic in framework.ics),
            abducible_order=tuple(elide_key(key) for key in framework.abducible_order),
        )

    @classmethod
    def elide_literals(cls, literals: Iterable[Literal], report: ElisionReportDTO) -> tuple[Literal, ...]:
        """Drops elided positions from query or context literals.

        A literal keeps its full arguments when it holds a different constant at an elided
        position; no rule can match it then, so it fails or, negated, holds trivially.
        """
        dropped = cls._dropped_constants(report)
        result = []
        for literal in literals:
            constants = dropped.get(literal.key)
            if constants is None or any(
                is_constant(literal.args[index]) and literal.args[index] != constant
                for index, constant in constants.items()
            ):
                result.append(literal)
                continue
            kept = tuple(arg for index, arg in enumerate(literal.args) if index not in constants)
            result.append(literal.with_args(kept))
        return tuple(result)

    @classmethod
    def reinsert(cls, context: Context, report: ElisionReportDTO) -> Context:
        if report.is_empty:
            return context
        by_reduced: dict[PredicateKey, dict[int, Term]] = {}
        for key, constants in cls._dropped_constants(report).items():
            by_reduced[(key[0], key[1] - len(constants))] = constants
        restored = []
        for literal in context:
            constants = by_reduced.get(literal.key)
            if constants is None:
                restored.append(literal)
                continue
            remaining = iter(literal.args)
            full_arity = literal.arity + len(constants)
            args = tuple(constants[index] if index in constants else next(remaining) for index in range(full_arity))
            restored.append(literal.with_args(args))
        return Context.of(restored)

    @staticmethod
    def _occurrences(framework: AbductiveFramework) -> dict[PredicateKey, list[tuple[Term, ...]]]:
        found: dict[PredicateKey, list[tuple[Term, ...]]] = {}
        literals: list[Literal] = [rule.head for rule in framework.program]
        literals.extend(framework.body_literals())
        for literal in literals:
            found.setdefault(literal.key, []).append(literal.args)
        return found

    @staticmethod
    def _dropped_positions(report: ElisionReportDTO) -> dict[PredicateKey, set[int]]:
        dropped: dict[PredicateKey, set[int]] = {}
        for item in report.positions:
            dropped.setdefault((item.predicate, item.arity), set()).add(item.position)
        return dropped

    @staticmethod
    def _dropped_constants(report: ElisionReportDTO) -> dict[PredicateKey, dict[int, Term]]:
        dropped: dict[PredicateKey, dict[int, Term]] = {}
        for item in report.positions:
            dropped.setdefault((item.predicate, item.arity), {})[item.position] = item.constant
        return dropped


def elide_context(context: Context, report: ElisionReportDTO) -> Context:
    return Context.of(ConstantElision.elide_literals(context, report))

