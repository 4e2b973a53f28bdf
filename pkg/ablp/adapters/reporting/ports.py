from abc import abstractmethod
from collections.abc import Iterable

from ablp.models.dtos.base_dtos import BaseDTO
from ablp.models.dtos.bench_dtos import BenchRowDTO

BENCH_CSV_HEADER = (
    "scenario",
    "n",
    "ic_mode",
    "tabling_mode",
    "subsumption",
    "call_style",
    "query_index",
    "repetition",
    "inferences",
    "table_bytes",
    "table_entries",
    "solutions",
    "wall_ms",
    "error",
)


class RecordWriterPort:
    """Interface for writing line-delimited structured records."""

    @abstractmethod
    def write_record(self, record: BaseDTO) -> None:
        raise NotImplementedError

    @abstractmethod
    def write_text(self, text: str) -> None:
        """Writes free text such as a pretty-printed program."""
        raise NotImplementedError


class BenchTableWriterPort:
    """Interface for writing benchmark rows as a table."""

    @abstractmethod
    def write_rows(self, rows: Iterable[BenchRowDTO]) -> int:
        """Writes the header and the rows; returns the number of rows written."""
        raise NotImplementedError
