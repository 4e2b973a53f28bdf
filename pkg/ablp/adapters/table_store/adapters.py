import logging
from collections.abc import Sequence
from dataclasses import dataclass, field

from ablp.adapters.table_store.ports import Answer, CallKey, TableStorePort
from ablp.configs.base_config import BaseConfig
from ablp.configs.config_template import TableStoreConfig
from ablp.helpers.utils.unification_utils import UnificationUtils
from ablp.models.entities.literals import Literal
from ablp.models.errors import ICSetupClosedError
from ablp.models.types.insert_outcome_type import InsertOutcomeType
from ablp.models.types.subsumption_type import SubsumptionType
from ablp.models.types.table_status_type import TableStatusType

logger = logging.getLogger(__name__)


@dataclass
class _TableEntry:
    status: TableStatusType = TableStatusType.IN_PROGRESS
    # insertion-ordered answers mapped to their context as a set
    answers: dict[Answer, frozenset[Literal]] = field(default_factory=dict)


class InMemoryTableStoreAdapter(TableStorePort):
    """Answer tables kept in process memory.

    Args:
        table_store_config (TableStoreConfig, optional): Cost model constants.
            If None, retrieves from global config. Defaults to None.

    Examples:
        >>> store = InMemoryTableStoreAdapter(TableStoreConfig())
        >>> key = ("s_ab", (Int(0),))
        >>> store.create(key)
        >>> store.insert(key, ((Int(0),), (Literal("t", (Int(0),), False),)), SubsumptionType.ALL)
        <InsertOutcomeType.ADDED: 'added'>
        >>> store.table_bytes()
        96
    """

    def __init__(self, table_store_config: TableStoreConfig | None = None) -> None:
        self._config: TableStoreConfig = (
            BaseConfig.global_config().TABLE_STORE if table_store_config is None else table_store_config
        )
        self._entries: dict[CallKey, _TableEntry] = {}
        self._ic_facts: dict[tuple[Literal, ...], tuple[Literal, ...]] = {}
        self._sealed = False

    def lookup(self, key: CallKey) -> TableStatusType | None:
        entry = self._entries.get(key)
        return None if entry is None else entry.status

    def create(self, key: CallKey) -> None:
        self._entries[key] = _TableEntry()

    def answers(self, key: CallKey) -> list[Answer]:
        return list(self._entries[key].answers)

    def insert(self, key: CallKey, answer: Answer, subsumption: SubsumptionType) -> InsertOutcomeType:
        entry = self._entries[key]
        if answer in entry.answers:
            return InsertOutcomeType.DUPLICATE
        members = frozenset(answer[1])
        if subsumption.is_minimal:
            args = answer[0]
            stored = [(other, other_members) for other, other_members in entry.answers.items() if other[0] == args]
            if any(other_members <= members for _, other_members in stored):
                return InsertOutcomeType.SUBSUMED
            for other, other_members in stored:
                if members < other_members:
                    del entry.answers[other]
        entry.answers[answer] = members
        return InsertOutcomeType.ADDED

    def complete(self, key: CallKey) -> None:
        self._entries[key].status = TableStatusType.COMPLETE

    def abolish(self) -> None:
        if self._entries:
            logger.debug("Abolishing %d table entries", len(self._entries))
        self._entries.clear()

    def assert_ic(self, pattern: Sequence[Literal]) -> bool:
        if self._sealed:
            raise ICSetupClosedError(pattern=f"[{','.join(str(literal) for literal in pattern)}]")
        normalized: tuple[Literal, ...] = UnificationUtils.variant_key(pattern, {})  # type: ignore[assignment]
        if normalized in self._ic_facts:
            return False
        self._ic_facts[normalized] = tuple(pattern)
        logger.debug("Asserted ic fact %s", self._ic_facts[normalized])
        return True

    def ic_facts(self) -> list[tuple[Literal, ...]]:
        return list(self._ic_facts.values())

    def seal(self) -> None:
        self._sealed = True

    @property
    def sealed(self) -> bool:
        return self._sealed

    def table_bytes(self) -> int:
        config = self._config
        total = 0
        for entry in self._entries.values():
            total += config.ENTRY_COST
            for _, context in entry.answers:
                total += config.ANSWER_COST
                total += sum(config.LIT_COST + config.ARG_COST * literal.arity for literal in context)
        return total

    def entry_count(self) -> int:
        return len(self._entries)

    def answer_count(self) -> int:
        return sum(len(entry.answers) for entry in self._entries.values())
