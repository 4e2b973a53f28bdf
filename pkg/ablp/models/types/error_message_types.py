from enum import Enum

from ablp.models.dtos.error_dto import ErrorDetailDTO

# CLI exit statuses
PARSE_EXIT = 1
TRANSFORM_EXIT = 2
NO_SOLUTION_EXIT = 3
ENGINE_EXIT = 4
MISMATCH_EXIT = 5


class ErrorMessageType(Enum):
    """Enumeration of error types with associated error details.

    Each member carries an error code, a message and the exit status the command-line
    surface reports when the error ends a command.

    Attributes:
        SYNTAX_ERROR: The program or query text does not follow the grammar.
        ABDUCIBLE_RULE_HEAD: A rule defines a predicate declared abducible.
        EMPTY_IC_BODY: An integrity constraint has no body literals.
        RESERVED_PREDICATE: A user predicate uses the name of a system predicate.
        MODE_MISMATCH: Engine options disagree with the modes the program was transformed for.
        TRANSFORM_FAILED: A transformation pass could not complete.
        STEP_BUDGET_EXCEEDED: Resolution exceeded the configured step budget.
        RESOLUTION_TOO_DEEP: Nested calls went deeper than the interpreter stack allows.
        NEGATIVE_CYCLE: A call depends on its own negation.
        NON_GROUND_ABDUCIBLE: A non-ground abducible literal was inserted into a context.
        NON_GROUND_NEGATIVE_CALL: A negative goal was called with free variables.
        IC_SETUP_CLOSED: An integrity-constraint fact was asserted after abduction began.
        UNIVERSE_CLOSED: A query mentions constants outside the grounded constraint universe.
        UNSUPPORTED_TERM: The oracle met a compound term.
        UNIVERSE_TOO_LARGE: The oracle candidate space exceeds its limit.
        NON_GROUND_QUERY: The oracle was asked a query with variables.
        INVALID_ARGUMENT: An argument value is invalid.
        NON_GROUND_TARGET: One-way matching was given a non-ground target.
        INCONSISTENT_CONTEXT: A context would contain a literal and its complement.
        UNKNOWN_ERROR: An unexpected error occurred.
    """

    # Parse errors
    SYNTAX_ERROR = ErrorDetailDTO.create_error_detail(
        code="SYNTAX_ERROR",
        message="The input does not follow the abductive program grammar.",
        exit_code=PARSE_EXIT,
    )
    ABDUCIBLE_RULE_HEAD = ErrorDetailDTO.create_error_detail(
        code="ABDUCIBLE_RULE_HEAD",
        message="Rule head is abducible.",
        exit_code=PARSE_EXIT,
    )
    EMPTY_IC_BODY = ErrorDetailDTO.create_error_detail(
        code="EMPTY_IC_BODY",
        message="Empty IC body.",
        exit_code=PARSE_EXIT,
    )
    RESERVED_PREDICATE = ErrorDetailDTO.create_error_detail(
        code="RESERVED_PREDICATE",
        message="The predicate name is reserved for a system predicate.",
        exit_code=PARSE_EXIT,
    )

    # Transform errors
    MODE_MISMATCH = ErrorDetailDTO.create_error_detail(
        code="MODE_MISMATCH",
        message="Engine options do not match the modes of the transformed program.",
        exit_code=TRANSFORM_EXIT,
    )
    TRANSFORM_FAILED = ErrorDetailDTO.create_error_detail(
        code="TRANSFORM_FAILED",
        message="The program transformation failed.",
        exit_code=TRANSFORM_EXIT,
    )

    # Engine errors
    STEP_BUDGET_EXCEEDED = ErrorDetailDTO.create_error_detail(
        code="STEP_BUDGET_EXCEEDED",
        message="The resolution step budget was exceeded.",
        exit_code=ENGINE_EXIT,
    )
    RESOLUTION_TOO_DEEP = ErrorDetailDTO.create_error_detail(
        code="RESOLUTION_TOO_DEEP",
        message="Resolution nested deeper than the interpreter stack allows.",
        exit_code=ENGINE_EXIT,
    )
    NEGATIVE_CYCLE = ErrorDetailDTO.create_error_detail(
        code="NEGATIVE_CYCLE",
        message="A call depends on its own negation.",
        exit_code=ENGINE_EXIT,
    )
    NON_GROUND_ABDUCIBLE = ErrorDetailDTO.create_error_detail(
        code="NON_GROUND_ABDUCIBLE",
        message="Cannot insert a non-ground abducible into a context.",
        exit_code=ENGINE_EXIT,
    )
    NON_GROUND_NEGATIVE_CALL = ErrorDetailDTO.create_error_detail(
        code="NON_GROUND_NEGATIVE_CALL",
        message="Negative goals must be ground when called.",
        exit_code=ENGINE_EXIT,
    )
    IC_SETUP_CLOSED = ErrorDetailDTO.create_error_detail(
        code="IC_SETUP_CLOSED",
        message="Integrity-constraint facts can only be asserted before abduction starts.",
        exit_code=ENGINE_EXIT,
    )
    UNIVERSE_CLOSED = ErrorDetailDTO.create_error_detail(
        code="UNIVERSE_CLOSED",
        message="The query mentions constants outside the grounded integrity-constraint universe.",
        exit_code=ENGINE_EXIT,
    )

    # Oracle errors
    UNSUPPORTED_TERM = ErrorDetailDTO.create_error_detail(
        code="UNSUPPORTED_TERM",
        message="The oracle only supports function-free programs.",
        exit_code=ENGINE_EXIT,
    )
    UNIVERSE_TOO_LARGE = ErrorDetailDTO.create_error_detail(
        code="UNIVERSE_TOO_LARGE",
        message="Too many candidate abducible sets to enumerate.",
        exit_code=ENGINE_EXIT,
    )
    NON_GROUND_QUERY = ErrorDetailDTO.create_error_detail(
        code="NON_GROUND_QUERY",
        message="The oracle only answers ground queries.",
        exit_code=ENGINE_EXIT,
    )

    # Validation errors
    INVALID_ARGUMENT = ErrorDetailDTO.create_error_detail(
        code="INVALID_ARGUMENT",
        message="Invalid argument provided.",
        exit_code=TRANSFORM_EXIT,
    )
    NON_GROUND_TARGET = ErrorDetailDTO.create_error_detail(
        code="NON_GROUND_TARGET",
        message="The match target must be ground.",
        exit_code=TRANSFORM_EXIT,
    )
    INCONSISTENT_CONTEXT = ErrorDetailDTO.create_error_detail(
        code="INCONSISTENT_CONTEXT",
        message="A context cannot contain a literal together with its complement.",
        exit_code=TRANSFORM_EXIT,
    )

    UNKNOWN_ERROR = ErrorDetailDTO.create_error_detail(
        code="UNKNOWN_ERROR",
        message="An unknown error occurred.",
        exit_code=ENGINE_EXIT,
    )
