from enum import StrEnum


class SubsumptionType(StrEnum):
    """Enumeration of answer-table insertion policies.

    Attributes:
        ALL (str): Every distinct answer context is kept.
        MINIMAL (str): Only subset-minimal answer contexts are kept (an antichain).
        CARDINALITY (str): Tables keep subset-minimal answers and the query returns
            only the solutions of minimum size.
    """

    ALL = "all"
    MINIMAL = "minimal"
    CARDINALITY = "cardinality"

    @property
    def is_minimal(self) -> bool:
        """Whether tables maintain the subset-minimal antichain under this policy."""
        return self is not SubsumptionType.ALL
