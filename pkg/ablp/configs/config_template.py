"""Configuration templates for the abduction toolchain.

This module provides the Pydantic models that configure each part of the toolchain:
the resolution engine, the program transformation, the answer-table cost model,
the brute-force oracle, the benchmark harness and logging.
"""

import logging
from typing import Self

from pydantic import BaseModel, Field, model_validator

from ablp.models.errors import InvalidArgumentError
from ablp.models.types.ic_mode_type import ICModeType
from ablp.models.types.subsumption_type import SubsumptionType
from ablp.models.types.tabling_mode_type import TablingModeType


class EngineConfig(BaseModel):
    """Configuration settings for the tabled abductive resolution engine.

    Attributes:
        MAX_STEPS (int): Resolution steps allowed per solve before the engine gives up with an error.
        DEFAULT_SUBSUMPTION (SubsumptionType): Answer-table insertion policy used when none is given.
    """

    MAX_STEPS: int = Field(default=10_000_000, description="Resolution step budget per solve")
    DEFAULT_SUBSUMPTION: SubsumptionType = Field(
        default=SubsumptionType.ALL,
        description="Answer-table insertion policy",
    )

    @model_validator(mode="after")
    def validate_budget(self) -> Self:
        if self.MAX_STEPS <= 0:
            raise InvalidArgumentError(argument_name="ENGINE.MAX_STEPS")
        return self


class TransformConfig(BaseModel):
    """Default options of the program transformation.

    Attributes:
        DEFAULT_IC_MODE (ICModeType): How integrity constraints are compiled.
        DEFAULT_TABLING_MODE (TablingModeType): Which predicates receive answer tables.
        ELIDE_CONSTANTS (bool): Whether argument positions fixed to one constant are dropped.
    """

    DEFAULT_IC_MODE: ICModeType = ICModeType.SUBCHECK
    DEFAULT_TABLING_MODE: TablingModeType = TablingModeType.NORMAL
    ELIDE_CONSTANTS: bool = False


class TableStoreConfig(BaseModel):
    """Constants of the deterministic table-memory cost model.

    The byte cost of a store is the sum over entries of ``ENTRY_COST`` plus, per answer,
    ``ANSWER_COST`` plus, per answer literal, ``LIT_COST + ARG_COST * arity``.
    """

    ENTRY_COST: int = Field(default=64, description="Cost of one variant-call entry")
    ANSWER_COST: int = Field(default=16, description="Cost of one stored answer")
    LIT_COST: int = Field(default=8, description="Cost of one literal in an answer context")
    ARG_COST: int = Field(default=8, description="Cost of one literal argument")

    @model_validator(mode="after")
    def validate_costs(self) -> Self:
        for name in ("ENTRY_COST", "ANSWER_COST", "LIT_COST", "ARG_COST"):
            if getattr(self, name) < 0:
                raise InvalidArgumentError(argument_name=f"TABLE_STORE.{name}")
        return self


class OracleConfig(BaseModel):
    """Configuration settings for the brute-force well-founded oracle.

    Attributes:
        MAX_CANDIDATES (int): Largest candidate space (3 to the number of relevant ground
            abducibles) the oracle agrees to enumerate.
    """

    MAX_CANDIDATES: int = Field(default=2**20, description="Upper bound on enumerated candidate sets")

    @model_validator(mode="after")
    def validate_limit(self) -> Self:
        if self.MAX_CANDIDATES <= 0:
            raise InvalidArgumentError(argument_name="ORACLE.MAX_CANDIDATES")
        return self


class BenchConfig(BaseModel):
    """Configuration settings for benchmark scenarios and the random program generator."""

    REPETITIONS: int = Field(default=1, description="Rows emitted per mode and query")
    CORPUS_SIZE: int = Field(default=200, description="Frameworks in the equivalence corpus")
    CORPUS_SEED: int = Field(default=7, description="Seed of the equivalence corpus")
    RANDOM_MAX_PREDICATES: int = Field(default=4, description="Defined predicates per random framework")
    RANDOM_MAX_RULES: int = Field(default=2, description="Rules per random predicate")
    RANDOM_MAX_BODY: int = Field(default=3, description="Body literals per random rule")
    RANDOM_MAX_ABDUCIBLES: int = Field(default=3, description="Abducible predicates per random framework")
    RANDOM_MAX_ICS: int = Field(default=3, description="Integrity constraints per random framework")
    RANDOM_CONSTANTS: int = Field(default=2, description="Size of the random constant pool")

    @model_validator(mode="after")
    def validate_limits(self) -> Self:
        for name in (
            "REPETITIONS",
            "CORPUS_SIZE",
            "RANDOM_MAX_PREDICATES",
            "RANDOM_MAX_RULES",
            "RANDOM_MAX_BODY",
            "RANDOM_MAX_ABDUCIBLES",
            "RANDOM_CONSTANTS",
        ):
            if getattr(self, name) <= 0:
                raise InvalidArgumentError(argument_name=f"BENCH.{name}")
        if self.RANDOM_MAX_ICS < 0:
            raise InvalidArgumentError(argument_name="BENCH.RANDOM_MAX_ICS")
        return self


class LoggingConfig(BaseModel):
    """Configuration of the root logger installed by the command-line surface.

    Attributes:
        LEVEL (str): Logging level name.
        FORMAT (str): Record format string.
    """

    LEVEL: str = Field(default="WARNING", description="Root logging level")
    FORMAT: str = Field(default="%(asctime)s - %(levelname)s - %(name)s - %(message)s")

    @model_validator(mode="after")
    def validate_level(self) -> Self:
        if not isinstance(logging.getLevelName(self.LEVEL.upper()), int):
            raise InvalidArgumentError(argument_name="LOGGING.LEVEL")
        return self
