from enum import IntEnum


class TruthValueType(IntEnum):
    """Truth values of the well-founded semantics, ordered false < undefined < true.

    The value of a conjunction is the minimum of the values of its literals.
    """

    FALSE = 0
    UNDEFINED = 1
    TRUE = 2

    def negate(self) -> "TruthValueType":
        return TruthValueType(2 - self.value)
