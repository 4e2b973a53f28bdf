from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from ablp.models.entities.literals import ContextTerm, Literal
from ablp.models.errors import InconsistentContextError, NonGroundTargetError


@dataclass(frozen=True, slots=True)
class Context:
    """A consistent set of ground abducible literals kept in canonical order.

    The canonical order sorts by predicate name, then arguments (integers before
    constants before compounds), and places ``not a`` right after ``a``. Two contexts
    holding the same literals are therefore structurally equal.
    """

    literals: tuple[Literal, ...] = ()

    def __post_init__(self) -> None:
        seen: set[Literal] = set()
        for literal in self.literals:
            if not literal.is_ground():
                raise NonGroundTargetError(target=str(literal))
            if literal.complement() in seen:
                raise InconsistentContextError(literal=str(literal))
            seen.add(literal)
        object.__setattr__(self, "literals", tuple(sorted(seen, key=Literal.sort_key)))

    @classmethod
    def of(cls, literals: Iterable[Literal]) -> "Context":
        return cls(tuple(literals))

    @classmethod
    def empty(cls) -> "Context":
        return cls(())

    @classmethod
    def from_term(cls, term: ContextTerm) -> "Context":
        return cls(term.items)

    def to_term(self) -> ContextTerm:
        return ContextTerm(self.literals)

    def union(self, other: "Context") -> "Context":
        """Merges two contexts; raises InconsistentContextError when they disagree."""
        return Context(self.literals + other.literals)

    def without(self, literal: Literal) -> "Context":
        return Context(tuple(member for member in self.literals if member != literal))

    def contains(self, literal: Literal) -> bool:
        return literal in self.literals

    def issubset(self, other: "Context") -> bool:
        return set(self.literals) <= set(other.literals)

    def strings(self) -> list[str]:
        return [str(literal) for literal in self.literals]

    def __contains__(self, literal: object) -> bool:
        return literal in self.literals

    def __iter__(self) -> Iterator[Literal]:
        return iter(self.literals)

    def __len__(self) -> int:
        return len(self.literals)

    def __str__(self) -> str:
        return f"[{','.join(self.strings())}]"
