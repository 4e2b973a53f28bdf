from enum import StrEnum


class CallStyleType(StrEnum):
    """How consecutive benchmark queries share answer tables.

    Attributes:
        INCREMENTAL (str): Tables survive from one query to the next.
        NON_INCREMENTAL (str): Tables are abolished before every query call.
    """

    INCREMENTAL = "incremental"
    NON_INCREMENTAL = "non_incremental"
