from abc import abstractmethod
from collections.abc import Sequence

from ablp.models.entities.literals import Literal
from ablp.models.entities.terms import Term
from ablp.models.types.insert_outcome_type import InsertOutcomeType
from ablp.models.types.subsumption_type import SubsumptionType
from ablp.models.types.table_status_type import TableStatusType

# predicate name plus the call arguments with variables renumbered by first occurrence
CallKey = tuple[str, tuple[Term, ...]]
# answer arguments plus the answer context
Answer = tuple[tuple[Term, ...], tuple[Literal, ...]]


class TableStorePort:
    """Interface for the answer tables and integrity-constraint facts of one solver.

    A store holds one entry per variant call with its status and answers, and the
    ``ic`` facts asserted while the integrity constraints are set up. Abolishing the
    tables clears the entries only.
    """

    @abstractmethod
    def lookup(self, key: CallKey) -> TableStatusType | None:
        """Returns the entry status, or None when the call has no entry."""
        raise NotImplementedError

    @abstractmethod
    def create(self, key: CallKey) -> None:
        """Creates an in-progress entry without answers."""
        raise NotImplementedError

    @abstractmethod
    def answers(self, key: CallKey) -> list[Answer]:
        """Returns a snapshot of the entry's answers in insertion order."""
        raise NotImplementedError

    @abstractmethod
    def insert(self, key: CallKey, answer: Answer, subsumption: SubsumptionType) -> InsertOutcomeType:
        """Adds an answer under the given insertion policy.

        With a minimal policy an answer is rejected when a stored answer with the same
        arguments has a subset context, and stored answers with superset contexts are evicted.
        """
        raise NotImplementedError

    @abstractmethod
    def complete(self, key: CallKey) -> None:
        raise NotImplementedError

    @abstractmethod
    def abolish(self) -> None:
        """Drops every entry; ``ic`` facts are kept."""
        raise NotImplementedError

    @abstractmethod
    def assert_ic(self, pattern: Sequence[Literal]) -> bool:
        """Stores an ``ic`` fact; returns False when an equal fact is already stored.

        Raises:
            ICSetupClosedError: If the store was sealed.
        """
        raise NotImplementedError

    @abstractmethod
    def ic_facts(self) -> list[tuple[Literal, ...]]:
        raise NotImplementedError

    @abstractmethod
    def seal(self) -> None:
        """Closes ``ic`` fact assertion for the rest of the store's life."""
        raise NotImplementedError

    @property
    @abstractmethod
    def sealed(self) -> bool:
        raise NotImplementedError

    @abstractmethod
    def table_bytes(self) -> int:
        """Table memory under the deterministic cost model."""
        raise NotImplementedError

    @abstractmethod
    def entry_count(self) -> int:
        raise NotImplementedError

    @abstractmethod
    def answer_count(self) -> int:
        raise NotImplementedError
