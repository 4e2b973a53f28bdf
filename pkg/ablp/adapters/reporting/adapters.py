import csv
from collections.abc import Iterable
from typing import TextIO

from ablp.adapters.reporting.ports import BENCH_CSV_HEADER, BenchTableWriterPort, RecordWriterPort
from ablp.models.dtos.base_dtos import BaseDTO
from ablp.models.dtos.bench_dtos import BenchRowDTO


class JsonLinesWriterAdapter(RecordWriterPort):
    """Writes each record as one JSON object per line."""

    def __init__(self, stream: TextIO) -> None:
        self._stream = stream

    def write_record(self, record: BaseDTO) -> None:
        self._stream.write(record.model_dump_json())
        self._stream.write("\n")

    def write_text(self, text: str) -> None:
        self._stream.write(text)
        if text and not text.endswith("\n"):
            self._stream.write("\n")


class CsvBenchWriterAdapter(BenchTableWriterPort):
    """Writes benchmark rows with ``csv.DictWriter`` under the fixed bench header."""

    def __init__(self, stream: TextIO) -> None:
        self._stream = stream

    def write_rows(self, rows: Iterable[BenchRowDTO]) -> int:
        writer = csv.DictWriter(self._stream, fieldnames=list(BENCH_CSV_HEADER), lineterminator="\n")
        writer.writeheader()
        count = 0
        for row in rows:
            values = row.model_dump(mode="json")
            values["wall_ms"] = f"{row.wall_ms:.3f}"
            writer.writerow(values)
            count += 1
        return count
