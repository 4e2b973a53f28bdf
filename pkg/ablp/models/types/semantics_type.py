from enum import StrEnum


class SemanticsType(StrEnum):
    """Acceptance condition applied to integrity constraints by the oracle.

    Attributes:
        CLASSIC (str): Every ground IC body must be false in the well-founded model.
        MODIFIED (str): No ground IC body may be true; undefined bodies are accepted.
    """

    CLASSIC = "classic"
    MODIFIED = "modified"
