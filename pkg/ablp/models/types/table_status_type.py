from enum import StrEnum


class TableStatusType(StrEnum):
    """Evaluation status of a variant call table.

    Attributes:
        IN_PROGRESS (str): The call group is still iterating towards its fixpoint.
        COMPLETE (str): No further answers can be derived for the call.
    """

    IN_PROGRESS = "in_progress"
    COMPLETE = "complete"
