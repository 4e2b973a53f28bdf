from ablp.services.transformer.elision import ConstantElision, elide_context
from ablp.services.transformer.program_transformer import (
    ProgramTransformer,
    TransformedQuery,
    check_size_bound,
    elide_query,
    reinsert_constants,
    transform_program,
    transform_query,
)

__all__ = [
    "ConstantElision",
    "ProgramTransformer",
    "TransformedQuery",
    "check_size_bound",
    "elide_context",
    "elide_query",
    "reinsert_constants",
    "transform_program",
    "transform_query",
]
