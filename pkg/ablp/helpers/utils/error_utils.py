import logging

from ablp.models.errors import BaseError
from ablp.models.types.error_message_types import ENGINE_EXIT

logger = logging.getLogger(__name__)


class ErrorUtils:
    """A utility class for capturing errors and mapping them to exit statuses."""

    @staticmethod
    def exit_code_for(exception: BaseException) -> int:
        """Maps an exception to the exit status the command-line surface returns.

        Args:
            exception (BaseException): The exception to map.

        Returns:
            int: The exit status of a catalogued error, ``4`` for anything else.
        """
        if isinstance(exception, BaseError):
            return exception.exit_code
        return ENGINE_EXIT

    @staticmethod
    def error_code(exception: BaseException) -> str:
        """The catalogue code of an error, or the exception class name for anything else."""
        if isinstance(exception, BaseError):
            return exception.error_detail.code
        return type(exception).__name__

    @classmethod
    def capture_exception(cls, exception: BaseException) -> int:
        """Logs an exception and returns its exit status.

        Catalogued errors are logged at ERROR level with their code and data; unexpected
        exceptions are logged with their traceback.

        Args:
            exception (BaseException): The exception to capture.

        Returns:
            int: The exit status for the exception.
        """
        if isinstance(exception, BaseError):
            logger.error("%s", exception)
        else:
            logger.exception("An exception occurred", exc_info=exception)
        return cls.exit_code_for(exception)
