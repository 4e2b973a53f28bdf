"""Error handling module for the package.

This module provides the custom exceptions raised while parsing, transforming,
solving and checking abductive programs, organized by category.
"""

from ablp.models.errors.base_error import BaseError
from ablp.models.errors.engine_errors import (
    ICSetupClosedError,
    NegativeCycleError,
    NonGroundAbducibleError,
    NonGroundNegativeCallError,
    ResolutionTooDeepError,
    StepBudgetExceededError,
    UniverseClosedError,
)
from ablp.models.errors.oracle_errors import NonGroundQueryError, UniverseTooLargeError, UnsupportedTermError
from ablp.models.errors.parse_errors import (
    AbducibleRuleHeadError,
    AbductiveSyntaxError,
    EmptyIntegrityConstraintError,
    ReservedPredicateError,
)
from ablp.models.errors.transform_errors import ModeMismatchError, TransformFailedError
from ablp.models.errors.validation_errors import (
    InconsistentContextError,
    InvalidArgumentError,
    NonGroundTargetError,
)

__all__ = [
    # Parse errors
    "AbducibleRuleHeadError",
    "AbductiveSyntaxError",
    # Base error
    "BaseError",
    "EmptyIntegrityConstraintError",
    # Engine errors
    "ICSetupClosedError",
    # Validation errors
    "InconsistentContextError",
    "InvalidArgumentError",
    # Transform errors
    "ModeMismatchError",
    "NegativeCycleError",
    "NonGroundAbducibleError",
    "NonGroundNegativeCallError",
    # Oracle errors
    "NonGroundQueryError",
    "NonGroundTargetError",
    "ReservedPredicateError",
    "ResolutionTooDeepError",
    "StepBudgetExceededError",
    "TransformFailedError",
    "UniverseClosedError",
    "UniverseTooLargeError",
    "UnsupportedTermError",
]
