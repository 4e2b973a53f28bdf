from enum import StrEnum


class ScenarioFamilyType(StrEnum):
    """Benchmark program families available to the bench runner.

    Attributes:
        EXP1 (str): Growing rule bodies over abducibles and fact-defined predicates.
        EXP3 (str): An integrity constraint with a negative literal and a growing query.
        RANDOM (str): Seeded random frameworks from the property-test generator.
    """

    EXP1 = "exp1"
    EXP3 = "exp3"
    RANDOM = "random"
