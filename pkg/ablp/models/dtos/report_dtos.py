from typing import Any

from ablp.models.dtos.base_dtos import BaseDTO


class SizeBoundReportDTO(BaseDTO):
    """Outcome of comparing a transformed program's size with its linear bound.

    Attributes:
        lhs: Size of every emitted rule, counting one per head plus one per body literal.
        rhs: ``8 * size(P) + 4 * |AB| + 3`` where size(P) counts the program rules only.
        holds: Whether ``lhs <= rhs``.
        rhs_with_ics: The same bound with every constraint counted as a rule for ``false``.
        holds_with_ics: Whether ``lhs <= rhs_with_ics``.
    """

    lhs: int
    rhs: int
    holds: bool
    rhs_with_ics: int
    holds_with_ics: bool


class ElidedPositionDTO(BaseDTO):
    """One argument position dropped because it holds the same constant everywhere.

    ``position`` is zero-based in the original predicate.
    """

    predicate: str
    arity: int
    position: int
    constant: Any


class ElisionReportDTO(BaseDTO):
    positions: tuple[ElidedPositionDTO, ...] = ()
    skipped: tuple[str, ...] = ()

    def for_predicate(self, predicate: str, arity: int) -> tuple[ElidedPositionDTO, ...]:
        return tuple(item for item in self.positions if item.predicate == predicate and item.arity == arity)

    @property
    def is_empty(self) -> bool:
        return not self.positions


class CheckReportDTO(BaseDTO):
    """Difference between engine solutions and oracle solutions for one query.

    Attributes:
        equal: Whether the compared solution sets agree.
        missing: Oracle solutions the engine did not return.
        unexpected: Engine solutions the oracle rejects.
        engine_count: Number of engine solutions compared.
        oracle_count: Number of oracle solutions compared.
    """

    equal: bool
    missing: tuple[str, ...] = ()
    unexpected: tuple[str, ...] = ()
    engine_count: int = 0
    oracle_count: int = 0
