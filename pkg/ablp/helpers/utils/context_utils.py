from collections.abc import Iterable, Sequence

from ablp.helpers.utils.unification_utils import Bindings, UnificationUtils
from ablp.models.entities.context import Context
from ablp.models.entities.literals import Literal
from ablp.models.errors import NonGroundAbducibleError

Items = tuple[Literal, ...]


class ContextUtils:
    """Operations on abductive contexts.

    The ``Context`` methods implement the ground semantics used in subcheck mode and by
    the public API. The ``*_items`` variants work on raw literal tuples inside the engine;
    the ``*_unifying`` variants reproduce the dual-mode behaviour where a non-ground
    literal is unified against the first compatible member instead of being rejected.
    """

    @staticmethod
    def sort_items(items: Iterable[Literal]) -> Items:
        return tuple(sorted(items, key=Literal.sort_key))

    @staticmethod
    def is_consistent(items: Sequence[Literal]) -> bool:
        members = set(items)
        return not any(item.complement() in members for item in items)

    @classmethod
    def merge_items(cls, current: Items, extra: Iterable[Literal]) -> Items | None:
        """Adds every literal of ``extra`` to ``current``; None when a complement is present."""
        members = set(current)
        added = False
        for literal in extra:
            if literal in members:
                continue
            if literal.complement() in members:
                return None
            members.add(literal)
            added = True
        return cls.sort_items(members) if added else current

    @classmethod
    def insert_items(cls, literal: Literal, current: Items) -> Items | None:
        if not literal.is_ground():
            raise NonGroundAbducibleError(literal=str(literal))
        return cls.merge_items(current, (literal,))

    @staticmethod
    def insert_unifying(literal: Literal, current: Items, bindings: Bindings) -> tuple[Items, Bindings] | None:
        """Dual-mode insertion with committed choice.

        Fails if the complement unifies with a member; otherwise binds against the first
        member the literal unifies with; otherwise appends the literal.
        """
        literal = UnificationUtils.resolve(literal, bindings)  # type: ignore[assignment]
        members = [UnificationUtils.resolve(member, bindings) for member in current]
        complement = literal.complement()
        for member in members:
            if UnificationUtils.unify_with(complement, member, bindings) is not None:
                return None
        for member in members:
            extended = UnificationUtils.unify_with(literal, member, bindings)
            if extended is not None:
                return current, extended
        return (*current, literal), bindings

    @classmethod
    def merge_unifying(
        cls,
        current: Items,
        extra: Iterable[Literal],
        bindings: Bindings,
    ) -> tuple[Items, Bindings] | None:
        for literal in extra:
            step = cls.insert_unifying(literal, current, bindings)
            if step is None:
                return None
            current, bindings = step
        return current, bindings

    @classmethod
    def produce_context(cls, initial: Context, extra: Context) -> Context | None:
        """Merges a tabled answer into an input context.

        Args:
            initial: The input context I.
            extra: The answer context E.

        Returns:
            Context | None: I extended with the members of E, or None when some member of E
            has its complement in I.
        """
        merged = cls.merge_items(initial.literals, extra.literals)
        return None if merged is None else Context(merged)

    @classmethod
    def insert_abducible(cls, literal: Literal, initial: Context) -> Context | None:
        """Adds one abducible literal non-redundantly.

        Raises:
            NonGroundAbducibleError: If the literal has variables.
        """
        merged = cls.insert_items(literal, initial.literals)
        return None if merged is None else Context(merged)

    @classmethod
    def find_embedding(cls, patterns: Sequence[Literal], items: Sequence[Literal]) -> tuple[Bindings | None, int]:
        """Searches a substitution mapping every pattern onto a member of ``items``.

        Returns the substitution found (None when there is none) together with the number
        of membership attempts made, one per pattern literal tried.
        """
        by_predicate: dict[tuple[str, int, bool], list[Literal]] = {}
        for item in items:
            by_predicate.setdefault((item.predicate, item.arity, item.positive), []).append(item)
        attempts = 0

        def search(index: int, bindings: Bindings) -> Bindings | None:
            nonlocal attempts
            if index == len(patterns):
                return bindings
            attempts += 1
            pattern = patterns[index]
            for member in by_predicate.get((pattern.predicate, pattern.arity, pattern.positive), ()):
                extended = UnificationUtils.unify_with(pattern, member, bindings)
                if extended is not None:
                    found = search(index + 1, extended)
                    if found is not None:
                        return found
            return None

        return search(0, {}), attempts

    @classmethod
    def check_subset(cls, patterns: Sequence[Literal], context: Context) -> bool:
        """True iff no single substitution embeds the whole pattern list into ``context``.

        Examples:
            >>> ContextUtils.check_subset([], Context.empty())
            False
        """
        found, _ = cls.find_embedding(patterns, context.literals)
        return found is None

    @staticmethod
    def is_subset(smaller: Sequence[Literal], larger: Sequence[Literal]) -> bool:
        return set(smaller) <= set(larger)

    @classmethod
    def minimal_antichain(cls, contexts: Iterable[Context]) -> list[Context]:
        """Keeps the subset-minimal contexts, first occurrences first."""
        unique = list(dict.fromkeys(contexts))
        return [
            context
            for context in unique
            if not any(other != context and other.issubset(context) for other in unique)
        ]

    @staticmethod
    def minimum_cardinality(contexts: Iterable[Context]) -> list[Context]:
        unique = list(dict.fromkeys(contexts))
        if not unique:
            return []
        smallest = min(len(context) for context in unique)
        return [context for context in unique if len(context) == smallest]
