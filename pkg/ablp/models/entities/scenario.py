from dataclasses import dataclass

from ablp.models.dtos.bench_dtos import ModeDTO
from ablp.models.entities.framework import AbductiveFramework
from ablp.models.errors import InvalidArgumentError
from ablp.models.types.call_style_type import CallStyleType


@dataclass(frozen=True)
class Scenario:
    """A benchmark scenario: one framework, its queries, and the modes to run them under."""

    name: str
    n: int
    framework: AbductiveFramework
    queries: tuple[str, ...]
    modes: tuple[ModeDTO, ...] = ()
    call_style: CallStyleType = CallStyleType.NON_INCREMENTAL
    repetitions: int = 1

    def __post_init__(self) -> None:
        if not self.queries:
            raise InvalidArgumentError(argument_name="queries")
        if self.repetitions <= 0:
            raise InvalidArgumentError(argument_name="repetitions")
