from dataclasses import dataclass, field

from ablp.models.entities.context import Context
from ablp.models.entities.substitution import Substitution


@dataclass(frozen=True, slots=True)
class Solution:
    """An abductive solution: the output context and the query-variable bindings."""

    context: Context
    bindings: Substitution = field(default_factory=Substitution.empty)

    def binding_strings(self) -> dict[str, str]:
        return {str(var): str(self.bindings[var]) for var in sorted(self.bindings, key=str)}
