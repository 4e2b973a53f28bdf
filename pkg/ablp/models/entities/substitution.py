from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field
from typing import TypeVar

from ablp.models.entities.literals import ContextTerm, Literal
from ablp.models.entities.terms import Compound, Term, TermList, Var

T = TypeVar("T", bound=Term)


@dataclass(frozen=True)
class Substitution:
    """An idempotent mapping from variables to terms.

    Bindings may be given in triangular form; :meth:`apply` follows chains, and
    :meth:`resolved` returns the equivalent substitution whose range no longer
    mentions bound variables.
    """

    bindings: Mapping[Var, Term] = field(default_factory=dict)

    @classmethod
    def empty(cls) -> "Substitution":
        return cls({})

    def apply(self, term: T) -> T:
        """Applies the substitution, resolving binding chains fully."""
        return _apply(term, self.bindings)  # type: ignore[return-value]

    def compose(self, other: "Substitution") -> "Substitution":
        """Returns the substitution equivalent to applying ``self`` then ``other``."""
        composed: dict[Var, Term] = {var: other.apply(self.apply(value)) for var, value in self.bindings.items()}
        for var, value in other.bindings.items():
            composed.setdefault(var, other.apply(value))
        return Substitution({var: value for var, value in composed.items() if value != var})

    def resolved(self) -> "Substitution":
        return Substitution({var: self.apply(value) for var, value in self.bindings.items()})

    def restrict(self, variables: set[Var]) -> "Substitution":
        return Substitution({var: self.apply(var) for var in variables if var in self.bindings})

    def __getitem__(self, var: Var) -> Term:
        return self.apply(self.bindings[var])

    def __contains__(self, var: object) -> bool:
        return var in self.bindings

    def __iter__(self) -> Iterator[Var]:
        return iter(self.bindings)

    def __len__(self) -> int:
        return len(self.bindings)

    def __str__(self) -> str:
        pairs = sorted(f"{var}={self.apply(value)}" for var, value in self.bindings.items())
        return "{" + ", ".join(pairs) + "}"


def _apply(term: Term, bindings: Mapping[Var, Term]) -> Term:
    while isinstance(term, Var):
        bound = bindings.get(term)
        if bound is None:
            return term
        term = bound
    if isinstance(term, Compound):
        return Compound(term.functor, tuple(_apply(arg, bindings) for arg in term.args))
    if isinstance(term, Literal):
        if not term.args:
            return term
        return Literal(term.predicate, tuple(_apply(arg, bindings) for arg in term.args), term.positive)
    if isinstance(term, ContextTerm):
        return ContextTerm(tuple(_apply(item, bindings) for item in term.items))  # type: ignore[misc]
    if isinstance(term, TermList):
        return TermList(tuple(_apply(item, bindings) for item in term.items))
    return term
