from enum import StrEnum


class TablingModeType(StrEnum):
    """Enumeration of tabled-predicate selection policies.

    Attributes:
        NORMAL (str): Every non-abducible predicate with at least one rule is tabled.
        REDUCE (str): Predicates whose rules only contain abducibles or fact-defined
            literals are evaluated directly instead of being tabled.
    """

    NORMAL = "normal"
    REDUCE = "reduce"
