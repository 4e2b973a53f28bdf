from dataclasses import dataclass
from pathlib import Path


@dataclass(frozen=True, slots=True)
class SourceProgram:
    """Program text together with where it came from, for error reporting."""

    text: str
    origin: str = "<inline>"

    @classmethod
    def from_path(cls, path: str | Path) -> "SourceProgram":
        return cls(Path(path).read_text(encoding="utf-8"), str(path))
