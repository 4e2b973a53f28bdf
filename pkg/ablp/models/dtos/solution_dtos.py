from typing import Literal

from pydantic import Field

from ablp.models.dtos.base_dtos import BaseDTO


class MetricsDTO(BaseDTO):
    """Snapshot of a solver's counters.

    Attributes:
        inferences: Goal calls plus rule-head resolution attempts.
        table_bytes: Table memory under the deterministic cost model.
        table_entries: Variant-call entries in the answer tables.
        table_answers: Answers stored across all entries.
        wall_ms: Elapsed wall-clock time.
    """

    inferences: int = 0
    table_bytes: int = 0
    table_entries: int = 0
    table_answers: int = 0
    wall_ms: float = 0.0


class SolutionRecordDTO(BaseDTO):
    """One solution line of the structured output."""

    type: Literal["solution"] = "solution"
    query: str
    index: int
    context: list[str] = Field(default_factory=list)
    bindings: dict[str, str] = Field(default_factory=dict)


class MetricsRecordDTO(BaseDTO):
    """The trailing metrics line written after a query's solutions."""

    type: Literal["metrics"] = "metrics"
    query: str
    solutions: int
    inferences: int
    table_bytes: int
    table_entries: int
    table_answers: int
    wall_ms: float

    @classmethod
    def from_metrics(cls, query: str, solutions: int, metrics: MetricsDTO) -> "MetricsRecordDTO":
        return cls(query=query, solutions=solutions, **metrics.model_dump())
