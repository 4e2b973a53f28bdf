from typing import Any

from ablp.models.dtos.error_dto import ErrorDetailDTO
from ablp.models.types.error_message_types import ErrorMessageType


class BaseError(Exception):
    """Root of the catalogued errors.

    An error pairs an entry of :class:`ErrorMessageType` with free-form data about the
    failing input, such as a source position, an offending literal or a step budget.
    ``str(error)`` renders ``[CODE] message (key=value, ...)``.

    Attributes:
        error_detail (ErrorDetailDTO): Code, message and exit status of the error.
        additional_data (dict[str, Any]): Data describing this occurrence.
    """

    def __init__(
        self,
        error: ErrorDetailDTO | ErrorMessageType | None = None,
        additional_data: dict[str, Any] | None = None,
        *args: object,
    ) -> None:
        """Builds the error from a catalogue entry.

        Args:
            error: A detail DTO or a catalogue member; ``None`` stands for UNKNOWN_ERROR.
            additional_data: Data describing this occurrence.
            *args: Passed on to ``Exception``.
        """
        match error:
            case ErrorMessageType():
                self.error_detail = error.value
            case ErrorDetailDTO():
                self.error_detail = error
            case _:
                self.error_detail = ErrorMessageType.UNKNOWN_ERROR.value
        self.additional_data = additional_data or {}
        super().__init__(self.get_message(), *args)

    def get_message(self) -> str:
        """The catalogue message followed by the occurrence data, if any."""
        if not self.additional_data:
            return self.error_detail.message
        details = ", ".join(f"{key}={value}" for key, value in self.additional_data.items())
        return f"{self.error_detail.message} ({details})"

    def to_dict(self) -> dict[str, Any]:
        """Flattens the error into a structured output record.

        Returns:
            dict[str, Any]: ``{"error": code, "detail": {...}}`` where the detail holds the
            catalogue fields and the occurrence data.
        """
        detail = self.error_detail.model_dump(mode="json", exclude_none=True)
        detail.update(self.additional_data)
        return {"error": self.error_detail.code, "detail": detail}

    @property
    def code(self) -> str:
        return self.error_detail.code

    @property
    def message(self) -> str:
        return self.get_message()

    @property
    def exit_code(self) -> int:
        """Process exit status the command line returns for this error."""
        return self.error_detail.exit_code

    def __str__(self) -> str:
        return f"[{self.code}] {self.get_message()}"

    def __repr__(self) -> str:
        return f"{type(self).__name__}(code={self.code!r}, exit_code={self.exit_code}, data={self.additional_data!r})"
