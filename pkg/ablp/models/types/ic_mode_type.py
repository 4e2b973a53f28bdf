from enum import StrEnum


class ICModeType(StrEnum):
    """Enumeration of integrity-constraint transformation modes.

    Attributes:
        DUAL (str): Integrity constraints are compiled through the dual transformation
            into ``false*i`` alternatives and a ``not_false`` goal appended to every query.
        SUBCHECK (str): Integrity constraints are evaluated once at setup into ``ic/1``
            pattern lists, and every solution is filtered by subset checking.
    """

    DUAL = "dual"
    SUBCHECK = "subcheck"
