from ablp.models.dtos.error_dto import ErrorDetailDTO
from ablp.models.errors.base_error import BaseError
from ablp.models.types.error_message_types import ErrorMessageType


class StepBudgetExceededError(BaseError):
    """Exception raised when resolution exceeds its step budget."""

    def __init__(
        self,
        max_steps: int | None = None,
        error: ErrorDetailDTO = ErrorMessageType.STEP_BUDGET_EXCEEDED.value,
        additional_data: dict | None = None,
    ) -> None:
        data: dict = {"max_steps": max_steps} if max_steps is not None else {}
        if additional_data:
            data.update(additional_data)
        super().__init__(error, data or None)


class NegativeCycleError(BaseError):
    """Exception raised when a call depends on its own negation."""

    def __init__(
        self,
        call: str | None = None,
        error: ErrorDetailDTO = ErrorMessageType.NEGATIVE_CYCLE.value,
        additional_data: dict | None = None,
    ) -> None:
        data: dict = {"call": call} if call else {}
        if additional_data:
            data.update(additional_data)
        super().__init__(error, data or None)


class NonGroundAbducibleError(BaseError):
    """Exception raised when a non-ground abducible would enter a context."""

    def __init__(
        self,
        literal: str | None = None,
        error: ErrorDetailDTO = ErrorMessageType.NON_GROUND_ABDUCIBLE.value,
        additional_data: dict | None = None,
    ) -> None:
        data: dict = {"literal": literal} if literal else {}
        if additional_data:
            data.update(additional_data)
        super().__init__(error, data or None)


class NonGroundNegativeCallError(BaseError):
    """Exception raised when a negative goal is called with free variables."""

    def __init__(
        self,
        call: str | None = None,
        error: ErrorDetailDTO = ErrorMessageType.NON_GROUND_NEGATIVE_CALL.value,
        additional_data: dict | None = None,
    ) -> None:
        data: dict = {"call": call} if call else {}
        if additional_data:
            data.update(additional_data)
        super().__init__(error, data or None)


class ICSetupClosedError(BaseError):
    """Exception raised when assert_IC runs after abduction started."""

    def __init__(
        self,
        pattern: str | None = None,
        error: ErrorDetailDTO = ErrorMessageType.IC_SETUP_CLOSED.value,
        additional_data: dict | None = None,
    ) -> None:
        data: dict = {"pattern": pattern} if pattern else {}
        if additional_data:
            data.update(additional_data)
        super().__init__(error, data or None)


class UniverseClosedError(BaseError):
    """Exception raised when a query needs constants the IC setup never grounded."""

    def __init__(
        self,
        constants: list[str] | None = None,
        error: ErrorDetailDTO = ErrorMessageType.UNIVERSE_CLOSED.value,
        additional_data: dict | None = None,
    ) -> None:
        data: dict = {"constants": ",".join(constants)} if constants else {}
        if additional_data:
            data.update(additional_data)
        super().__init__(error, data or None)


class ResolutionTooDeepError(BaseError):
    """Exception raised when nested calls outgrow the interpreter stack."""

    def __init__(
        self,
        query: str | None = None,
        error: ErrorDetailDTO = ErrorMessageType.RESOLUTION_TOO_DEEP.value,
        additional_data: dict | None = None,
    ) -> None:
        data: dict = {"query": query} if query else {}
        if additional_data:
            data.update(additional_data)
        super().__init__(error, data or None)
