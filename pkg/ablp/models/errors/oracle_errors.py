from ablp.models.dtos.error_dto import ErrorDetailDTO
from ablp.models.errors.base_error import BaseError
from ablp.models.types.error_message_types import ErrorMessageType


class UnsupportedTermError(BaseError):
    """Exception raised when the oracle meets a compound term."""

    def __init__(
        self,
        term: str | None = None,
        error: ErrorDetailDTO = ErrorMessageType.UNSUPPORTED_TERM.value,
        additional_data: dict | None = None,
    ) -> None:
        data: dict = {"term": term} if term else {}
        if additional_data:
            data.update(additional_data)
        super().__init__(error, data or None)


class UniverseTooLargeError(BaseError):
    """Exception raised when the candidate space exceeds the configured limit."""

    def __init__(
        self,
        candidates: int | None = None,
        limit: int | None = None,
        error: ErrorDetailDTO = ErrorMessageType.UNIVERSE_TOO_LARGE.value,
        additional_data: dict | None = None,
    ) -> None:
        data: dict = {}
        if candidates is not None:
            data["candidates"] = candidates
        if limit is not None:
            data["limit"] = limit
        if additional_data:
            data.update(additional_data)
        super().__init__(error, data or None)


class NonGroundQueryError(BaseError):
    """Exception raised when the oracle is asked a query with variables."""

    def __init__(
        self,
        query: str | None = None,
        error: ErrorDetailDTO = ErrorMessageType.NON_GROUND_QUERY.value,
        additional_data: dict | None = None,
    ) -> None:
        data: dict = {"query": query} if query else {}
        if additional_data:
            data.update(additional_data)
        super().__init__(error, data or None)
