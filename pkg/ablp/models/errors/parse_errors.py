from ablp.models.dtos.error_dto import ErrorDetailDTO
from ablp.models.errors.base_error import BaseError
from ablp.models.types.error_message_types import ErrorMessageType


class AbductiveSyntaxError(BaseError):
    """Exception raised when program or query text does not follow the grammar."""

    def __init__(
        self,
        line: int | None = None,
        column: int | None = None,
        origin: str | None = None,
        found: str | None = None,
        error: ErrorDetailDTO = ErrorMessageType.SYNTAX_ERROR.value,
        additional_data: dict | None = None,
    ) -> None:
        data: dict = {}
        if origin:
            data["origin"] = origin
        if line is not None:
            data["line"] = line
        if column is not None:
            data["column"] = column
        if found:
            data["found"] = found
        if additional_data:
            data.update(additional_data)
        super().__init__(error, data or None)

    @property
    def line(self) -> int | None:
        """Line of the offending token, 1-based."""
        return self.additional_data.get("line")

    @property
    def column(self) -> int | None:
        """Column of the offending token, 1-based."""
        return self.additional_data.get("column")


class AbducibleRuleHeadError(BaseError):
    """Exception raised when a rule defines a predicate declared abducible."""

    def __init__(
        self,
        predicate: str | None = None,
        line: int | None = None,
        error: ErrorDetailDTO = ErrorMessageType.ABDUCIBLE_RULE_HEAD.value,
        additional_data: dict | None = None,
    ) -> None:
        data: dict = {"predicate": predicate} if predicate else {}
        if line is not None:
            data["line"] = line
        if additional_data:
            data.update(additional_data)
        super().__init__(error, data or None)


class EmptyIntegrityConstraintError(BaseError):
    """Exception raised for an integrity constraint without body literals."""

    def __init__(
        self,
        line: int | None = None,
        error: ErrorDetailDTO = ErrorMessageType.EMPTY_IC_BODY.value,
        additional_data: dict | None = None,
    ) -> None:
        data: dict = {"line": line} if line is not None else {}
        if additional_data:
            data.update(additional_data)
        super().__init__(error, data or None)


class ReservedPredicateError(BaseError):
    """Exception raised when user text uses a system predicate name."""

    def __init__(
        self,
        predicate: str | None = None,
        error: ErrorDetailDTO = ErrorMessageType.RESERVED_PREDICATE.value,
        additional_data: dict | None = None,
    ) -> None:
        data: dict = {"predicate": predicate} if predicate else {}
        if additional_data:
            data.update(additional_data)
        super().__init__(error, data or None)
