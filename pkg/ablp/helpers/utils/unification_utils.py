from collections.abc import Iterable

from ablp.models.entities.literals import ContextTerm, Literal
from ablp.models.entities.substitution import Substitution
from ablp.models.entities.terms import Compound, Term, TermList, Var
from ablp.models.errors import NonGroundTargetError

Bindings = dict[Var, Term]


class UnificationUtils:
    """Unification, matching and renaming over terms, literals and context lists.

    The engine works on triangular bindings (a variable may be bound to a term that
    mentions other bound variables); :meth:`walk` dereferences one level and
    :meth:`resolve` applies the bindings fully. Occurs check is always on.
    """

    @staticmethod
    def walk(term: Term, bindings: Bindings) -> Term:
        while isinstance(term, Var):
            bound = bindings.get(term)
            if bound is None:
                return term
            term = bound
        return term

    @classmethod
    def resolve(cls, term: Term, bindings: Bindings) -> Term:
        """Applies ``bindings`` to ``term`` all the way down."""
        if not bindings:
            return term
        return Substitution(bindings).apply(term)

    @classmethod
    def occurs(cls, var: Var, term: Term, bindings: Bindings) -> bool:
        stack = [term]
        while stack:
            current = cls.walk(stack.pop(), bindings)
            if isinstance(current, Var):
                if current == var:
                    return True
            elif isinstance(current, Compound | Literal):
                stack.extend(current.args)
            elif isinstance(current, ContextTerm | TermList):
                stack.extend(current.items)
        return False

    @classmethod
    def unify_into(cls, left: Term, right: Term, bindings: Bindings) -> bool:
        """Extends ``bindings`` in place with a most general unifier of the two terms.

        On failure ``bindings`` may hold partial bindings; callers pass a copy.
        """
        stack = [(left, right)]
        while stack:
            first, second = stack.pop()
            first = cls.walk(first, bindings)
            second = cls.walk(second, bindings)
            if first is second:
                continue
            if isinstance(first, Var):
                if isinstance(second, Var) and first == second:
                    continue
                if cls.occurs(first, second, bindings):
                    return False
                bindings[first] = second
                continue
            if isinstance(second, Var):
                if cls.occurs(second, first, bindings):
                    return False
                bindings[second] = first
                continue
            if type(first) is not type(second):
                return False
            if isinstance(first, Compound):
                if first.functor != second.functor or len(first.args) != len(second.args):  # type: ignore[attr-defined]
                    return False
                stack.extend(zip(first.args, second.args, strict=True))  # type: ignore[attr-defined]
            elif isinstance(first, Literal):
                other: Literal = second  # type: ignore[assignment]
                if first.predicate != other.predicate or first.positive != other.positive:
                    return False
                if len(first.args) != len(other.args):
                    return False
                stack.extend(zip(first.args, other.args, strict=True))
            elif isinstance(first, ContextTerm | TermList):
                if len(first.items) != len(second.items):  # type: ignore[attr-defined]
                    return False
                stack.extend(zip(first.items, second.items, strict=True))  # type: ignore[attr-defined]
            elif first != second:
                return False
        return True

    @classmethod
    def unify_with(cls, left: Term, right: Term, bindings: Bindings) -> Bindings | None:
        """Returns extended bindings, leaving ``bindings`` untouched, or None on failure."""
        extended = dict(bindings)
        return extended if cls.unify_into(left, right, extended) else None

    @classmethod
    def unify_args(cls, left: Iterable[Term], right: Iterable[Term], bindings: Bindings) -> Bindings | None:
        extended = dict(bindings)
        for first, second in zip(left, right, strict=True):
            if not cls.unify_into(first, second, extended):
                return None
        return extended

    @classmethod
    def unify(cls, left: Term, right: Term) -> Substitution | None:
        """Computes the most general unifier of two terms or literals.

        Args:
            left: A term or literal.
            right: A term or literal, standardized apart from ``left`` by the caller.

        Returns:
            Substitution | None: The idempotent unifier, or None when none exists.

        Examples:
            >>> UnificationUtils.unify(Literal("p", (Var("X"),)), Literal("p", (Int(0),)))
            Substitution(bindings={Var(name='X', tag=0): Int(value=0)})
        """
        bindings = cls.unify_with(left, right, {})
        if bindings is None:
            return None
        return Substitution(bindings).resolved()

    @classmethod
    def match(cls, pattern: Literal, ground: Literal) -> Substitution | None:
        """One-way unification of ``pattern`` onto a ground literal.

        Raises:
            NonGroundTargetError: If ``ground`` contains variables.
        """
        if not ground.is_ground():
            raise NonGroundTargetError(target=str(ground))
        return cls.unify(pattern, ground)

    @classmethod
    def rename(cls, term: Term, tag: int) -> Term:
        """Gives every variable of ``term`` the tag ``tag``, standardizing it apart."""
        if isinstance(term, Var):
            return Var(term.name, tag)
        if isinstance(term, Compound):
            return Compound(term.functor, tuple(cls.rename(arg, tag) for arg in term.args))
        if isinstance(term, Literal):
            if not term.args:
                return term
            return Literal(term.predicate, tuple(cls.rename(arg, tag) for arg in term.args), term.positive)
        if isinstance(term, ContextTerm):
            return ContextTerm(tuple(cls.rename(item, tag) for item in term.items))  # type: ignore[misc]
        if isinstance(term, TermList):
            return TermList(tuple(cls.rename(item, tag) for item in term.items))
        return term

    @classmethod
    def variant_key(cls, terms: Iterable[Term], bindings: Bindings) -> tuple[Term, ...]:
        """Resolves the terms and renumbers their variables by first occurrence.

        Two calls get the same key exactly when they are equal up to variable renaming.
        """
        numbering: dict[Var, Var] = {}
        resolved = tuple(cls.resolve(term, bindings) for term in terms)
        for term in resolved:
            for var in term.variables():
                if var not in numbering:
                    numbering[var] = Var(f"$v{len(numbering) + 1}")
        if not numbering:
            return resolved
        return tuple(Substitution(numbering).apply(term) for term in resolved)
