from ablp.models.dtos.error_dto import ErrorDetailDTO
from ablp.models.errors.base_error import BaseError
from ablp.models.types.error_message_types import ErrorMessageType


class InvalidArgumentError(BaseError):
    """Exception raised for invalid arguments."""

    def __init__(
        self,
        argument_name: str | None = None,
        error: ErrorDetailDTO = ErrorMessageType.INVALID_ARGUMENT.value,
        additional_data: dict | None = None,
    ) -> None:
        data: dict = {"argument": argument_name} if argument_name else {}
        if additional_data:
            data.update(additional_data)
        super().__init__(error, data or None)


class NonGroundTargetError(BaseError):
    """Exception raised when one-way matching is given a non-ground target."""

    def __init__(
        self,
        target: str | None = None,
        error: ErrorDetailDTO = ErrorMessageType.NON_GROUND_TARGET.value,
        additional_data: dict | None = None,
    ) -> None:
        data: dict = {"target": target} if target else {}
        if additional_data:
            data.update(additional_data)
        super().__init__(error, data or None)


class InconsistentContextError(BaseError):
    """Exception raised when a context would hold a literal and its complement."""

    def __init__(
        self,
        literal: str | None = None,
        error: ErrorDetailDTO = ErrorMessageType.INCONSISTENT_CONTEXT.value,
        additional_data: dict | None = None,
    ) -> None:
        data: dict = {"literal": literal} if literal else {}
        if additional_data:
            data.update(additional_data)
        super().__init__(error, data or None)
