from typing import Self

from pydantic import model_validator

from ablp.models.dtos.base_dtos import BaseDTO
from ablp.models.errors import InvalidArgumentError
from ablp.models.types.ic_mode_type import ICModeType
from ablp.models.types.subsumption_type import SubsumptionType
from ablp.models.types.tabling_mode_type import TablingModeType


class TransformOptionsDTO(BaseDTO):
    """Options of the program transformation.

    Attributes:
        ic_mode: Integrity constraints compiled as dual rules or as subset checks.
        tabling_mode: Table every rule-bearing predicate, or skip those whose bodies only hold
            abducibles and fact-defined literals.
        elide_constants: Drop argument positions holding one constant everywhere.
    """

    ic_mode: ICModeType = ICModeType.SUBCHECK
    tabling_mode: TablingModeType = TablingModeType.NORMAL
    elide_constants: bool = False


class EngineOptionsDTO(BaseDTO):
    """Options of one solver instance.

    ``max_steps`` left unset falls back to ``ENGINE.MAX_STEPS`` of the global configuration.
    """

    ic_mode: ICModeType = ICModeType.SUBCHECK
    tabling_mode: TablingModeType = TablingModeType.NORMAL
    subsumption: SubsumptionType = SubsumptionType.ALL
    max_steps: int | None = None

    @model_validator(mode="after")
    def validate_max_steps(self) -> Self:
        if self.max_steps is not None and self.max_steps <= 0:
            raise InvalidArgumentError(argument_name="max_steps")
        return self

    @classmethod
    def matching(
        cls,
        options: TransformOptionsDTO,
        subsumption: SubsumptionType = SubsumptionType.ALL,
        max_steps: int | None = None,
    ) -> Self:
        """Builds engine options agreeing with the modes a program was transformed for."""
        return cls(
            ic_mode=options.ic_mode,
            tabling_mode=options.tabling_mode,
            subsumption=subsumption,
            max_steps=max_steps,
        )
