"""First-order terms.

Terms are immutable and hashable; structural equality is syntactic equality.
Variables carry a ``tag`` so that resolution can rename clauses apart without
inventing new names: the parser always produces tag 0.
"""

from collections.abc import Iterator
from dataclasses import dataclass
from typing import Any

# names given to `_` occurrences; never produced by the lexer
ANONYMOUS_PREFIX = "_#"


class Term:
    """Common base of every term, including literals and context lists."""

    __slots__ = ()

    def is_ground(self) -> bool:
        """Whether the term contains no variables."""
        return next(self.variables(), None) is None

    def variables(self) -> Iterator["Var"]:
        """Yields every variable occurrence, left to right."""
        return iter(())

    def sort_key(self) -> tuple[Any, ...]:
        """Key of the canonical argument order."""
        raise NotImplementedError


@dataclass(frozen=True, slots=True)
class Var(Term):
    name: str
    tag: int = 0

    def variables(self) -> Iterator["Var"]:
        yield self

    def sort_key(self) -> tuple[Any, ...]:
        # variables only reach contexts in dual mode; they compare equal to each other
        return (3,)

    def __str__(self) -> str:
        if self.name.startswith(ANONYMOUS_PREFIX):
            return "_"
        return self.name if self.tag == 0 else f"{self.name}_{self.tag}"


@dataclass(frozen=True, slots=True)
class Const(Term):
    name: str

    def sort_key(self) -> tuple[Any, ...]:
        return (1, 0, self.name)

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, slots=True)
class Int(Term):
    value: int

    def sort_key(self) -> tuple[Any, ...]:
        return (0, self.value, "")

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True, slots=True)
class Compound(Term):
    functor: str
    args: tuple[Term, ...]

    def __post_init__(self) -> None:
        if not self.args:
            raise ValueError(f"compound term {self.functor} needs at least one argument")

    def variables(self) -> Iterator[Var]:
        for arg in self.args:
            yield from arg.variables()

    def sort_key(self) -> tuple[Any, ...]:
        return (2, self.functor, tuple(arg.sort_key() for arg in self.args))

    def __str__(self) -> str:
        return f"{self.functor}({','.join(str(arg) for arg in self.args)})"


def is_constant(term: Term) -> bool:
    """Whether the term is a constant symbol or an integer."""
    return isinstance(term, Const | Int)


@dataclass(frozen=True, slots=True)
class TermList(Term):
    """A bracketed list of terms, used for argument tuples passed to system predicates."""

    items: tuple[Term, ...] = ()

    def variables(self) -> Iterator[Var]:
        for item in self.items:
            yield from item.variables()

    def sort_key(self) -> tuple[Any, ...]:
        return (5, tuple(item.sort_key() for item in self.items))

    def __str__(self) -> str:
        return f"[{','.join(str(item) for item in self.items)}]"
