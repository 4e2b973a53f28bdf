from collections.abc import Iterator
from dataclasses import dataclass

from ablp.models.entities.literals import Literal
from ablp.models.entities.terms import Var
from ablp.models.errors import EmptyIntegrityConstraintError, InvalidArgumentError


@dataclass(frozen=True, slots=True)
class Rule:
    """A normal rule ``head :- body.``; a fact when the body is empty."""

    head: Literal
    body: tuple[Literal, ...] = ()

    def __post_init__(self) -> None:
        if not self.head.positive:
            raise InvalidArgumentError(argument_name="head", additional_data={"head": str(self.head)})

    @property
    def is_fact(self) -> bool:
        return not self.body

    def variables(self) -> Iterator[Var]:
        yield from self.head.variables()
        for literal in self.body:
            yield from literal.variables()

    def size(self) -> int:
        return 1 + len(self.body)

    def __str__(self) -> str:
        if not self.body:
            return f"{self.head}."
        return f"{self.head} :- {', '.join(str(literal) for literal in self.body)}."


@dataclass(frozen=True, slots=True)
class IntegrityConstraint:
    """A denial ``ic :- body.``; the body must never hold in an accepted solution."""

    body: tuple[Literal, ...]

    def __post_init__(self) -> None:
        if not self.body:
            raise EmptyIntegrityConstraintError()

    def variables(self) -> Iterator[Var]:
        for literal in self.body:
            yield from literal.variables()

    def size(self) -> int:
        return 1 + len(self.body)

    def __str__(self) -> str:
        return f"ic :- {', '.join(str(literal) for literal in self.body)}."
