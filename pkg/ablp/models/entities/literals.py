from collections.abc import Iterator
from dataclasses import dataclass
from typing import Any

from ablp.models.entities.terms import Term, Var


@dataclass(frozen=True, slots=True)
class Literal(Term):
    """A possibly negated atom.

    A literal is itself a term so that abducible literals can appear as arguments of
    system predicates such as ``insert_abducible(not q(X), I, O)``.

    Attributes:
        predicate: Predicate symbol.
        args: Argument terms.
        positive: Polarity; False for ``not p(...)``.
    """

    predicate: str
    args: tuple[Term, ...] = ()
    positive: bool = True

    @property
    def arity(self) -> int:
        return len(self.args)

    @property
    def key(self) -> tuple[str, int]:
        """The predicate/arity pair identifying the literal's predicate."""
        return (self.predicate, len(self.args))

    def complement(self) -> "Literal":
        """Flips the polarity; an involution."""
        return Literal(self.predicate, self.args, not self.positive)

    def atom(self) -> "Literal":
        """The positive literal with the same predicate and arguments."""
        return self if self.positive else Literal(self.predicate, self.args, True)

    def with_args(self, args: tuple[Term, ...]) -> "Literal":
        return Literal(self.predicate, args, self.positive)

    def variables(self) -> Iterator[Var]:
        for arg in self.args:
            yield from arg.variables()

    def sort_key(self) -> tuple[Any, ...]:
        return (self.predicate, tuple(arg.sort_key() for arg in self.args), 0 if self.positive else 1)

    def atom_text(self) -> str:
        if not self.args:
            return self.predicate
        return f"{self.predicate}({','.join(str(arg) for arg in self.args)})"

    def __str__(self) -> str:
        return self.atom_text() if self.positive else f"not {self.atom_text()}"


@dataclass(frozen=True, slots=True)
class ContextTerm(Term):
    """A list of abducible literals appearing as a term.

    Transformed rules carry contexts as arguments (``s(X, [q(0),q(1)], O)``); unlike
    :class:`~ablp.models.entities.context.Context` the items may contain variables.
    """

    items: tuple[Literal, ...] = ()

    def variables(self) -> Iterator[Var]:
        for item in self.items:
            yield from item.variables()

    def sort_key(self) -> tuple[Any, ...]:
        return (4, tuple(item.sort_key() for item in self.items))

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self) -> Iterator[Literal]:
        return iter(self.items)

    def __str__(self) -> str:
        return f"[{','.join(str(item) for item in self.items)}]"
