from ablp.models.dtos.error_dto import ErrorDetailDTO
from ablp.models.errors.base_error import BaseError
from ablp.models.types.error_message_types import ErrorMessageType


class ModeMismatchError(BaseError):
    """Exception raised when engine options disagree with a transformed program."""

    def __init__(
        self,
        option: str | None = None,
        expected: str | None = None,
        actual: str | None = None,
        error: ErrorDetailDTO = ErrorMessageType.MODE_MISMATCH.value,
        additional_data: dict | None = None,
    ) -> None:
        data: dict = {}
        if option:
            data["option"] = option
        if expected:
            data["expected"] = expected
        if actual:
            data["actual"] = actual
        if additional_data:
            data.update(additional_data)
        super().__init__(error, data or None)


class TransformFailedError(BaseError):
    """Exception raised when a transformation pass cannot complete."""

    def __init__(
        self,
        reason: str | None = None,
        error: ErrorDetailDTO = ErrorMessageType.TRANSFORM_FAILED.value,
        additional_data: dict | None = None,
    ) -> None:
        data: dict = {"reason": reason} if reason else {}
        if additional_data:
            data.update(additional_data)
        super().__init__(error, data or None)
