from enum import StrEnum


class InsertOutcomeType(StrEnum):
    """Result of inserting an answer into a call table.

    Attributes:
        ADDED (str): The answer was stored.
        SUBSUMED (str): A stored answer is a subset of the new one, so it was rejected.
        DUPLICATE (str): The identical answer was already stored.
    """

    ADDED = "added"
    SUBSUMED = "subsumed"
    DUPLICATE = "duplicate"
