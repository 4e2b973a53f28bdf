from typing import Self

from pydantic import model_validator

from ablp.configs.config_template import BenchConfig
from ablp.models.dtos.base_dtos import BaseDTO
from ablp.models.errors import InvalidArgumentError
from ablp.models.types.ic_mode_type import ICModeType
from ablp.models.types.subsumption_type import SubsumptionType
from ablp.models.types.tabling_mode_type import TablingModeType


class ModeDTO(BaseDTO):
    """One (ic_mode, tabling_mode, subsumption) combination a scenario runs under."""

    ic_mode: ICModeType
    tabling_mode: TablingModeType
    subsumption: SubsumptionType = SubsumptionType.ALL

    @property
    def label(self) -> str:
        return f"{self.ic_mode}/{self.tabling_mode}/{self.subsumption}"


class BenchRowDTO(BaseDTO):
    """One CSV row: the metrics of one query call under one mode."""

    scenario: str
    n: int
    ic_mode: ICModeType
    tabling_mode: TablingModeType
    subsumption: SubsumptionType
    call_style: str
    query_index: int
    repetition: int
    inferences: int = 0
    table_bytes: int = 0
    table_entries: int = 0
    solutions: int = 0
    wall_ms: float = 0.0
    error: str = ""


class RandomProgramParamsDTO(BaseDTO):
    """Limits of the random framework generator."""

    max_predicates: int = 4
    max_rules: int = 2
    max_body: int = 3
    max_abducibles: int = 3
    max_ics: int = 3
    constants: int = 2

    @model_validator(mode="after")
    def validate_limits(self) -> Self:
        for name in ("max_predicates", "max_rules", "max_body", "max_abducibles", "constants"):
            if getattr(self, name) <= 0:
                raise InvalidArgumentError(argument_name=name)
        if self.max_ics < 0:
            raise InvalidArgumentError(argument_name="max_ics")
        return self

    @classmethod
    def from_config(cls, config: BenchConfig) -> Self:
        return cls(
            max_predicates=config.RANDOM_MAX_PREDICATES,
            max_rules=config.RANDOM_MAX_RULES,
            max_body=config.RANDOM_MAX_BODY,
            max_abducibles=config.RANDOM_MAX_ABDUCIBLES,
            max_ics=config.RANDOM_MAX_ICS,
            constants=config.RANDOM_CONSTANTS,
        )
