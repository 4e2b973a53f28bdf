import logging
import time
from collections.abc import Callable
from functools import wraps
from typing import Any, TypeVar, cast

# Define a type variable for the return type of the decorated function
F = TypeVar("F", bound=Callable[..., Any])

logger = logging.getLogger(__name__)


def timing_decorator(func: F) -> F:
    """Logs the execution time of a function at DEBUG level.

    Args:
        func (Callable): The function to be decorated.

    Returns:
        Callable: The wrapped function.

    Example:
        ```python
        @timing_decorator
        def transform_program(framework, options): ...
        ```

        Output (if logging level is DEBUG):
        ```
        DEBUG - ablp.helpers.decorators.timing - transform_program took 0.0012 seconds to execute.
        ```
    """

    @wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        if not logger.isEnabledFor(logging.DEBUG):
            return func(*args, **kwargs)
        start_time = time.perf_counter()
        result = func(*args, **kwargs)
        logger.debug("%s took %.4f seconds to execute.", func.__qualname__, time.perf_counter() - start_time)
        return result

    return cast(F, wrapper)
