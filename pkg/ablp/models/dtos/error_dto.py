from typing import Self

from ablp.models.dtos.base_dtos import BaseDTO


class ErrorDetailDTO(BaseDTO):
    """Standardized error detail model.

    Attributes:
        code: Stable machine-readable error code.
        message: Human-readable description.
        exit_code: Process exit status the command-line surface returns for this error.
    """

    code: str
    message: str
    exit_code: int = 4

    @classmethod
    def create_error_detail(cls, code: str, message: str, exit_code: int = 4) -> Self:
        """Creates an `ErrorDetailDTO`.

        Args:
            code (str): A unique error code.
            message (str): The error message.
            exit_code (int): The CLI exit status associated with the error.

        Returns:
            ErrorDetailDTO: The created error detail object.
        """
        return cls(code=code, message=message, exit_code=exit_code)
