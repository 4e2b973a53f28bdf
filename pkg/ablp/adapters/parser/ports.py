from abc import abstractmethod

from ablp.models.entities.context import Context
from ablp.models.entities.framework import AbductiveFramework
from ablp.models.entities.literals import Literal
from ablp.models.entities.source_program import SourceProgram


class ParserPort:
    """Interface for reading and writing the textual abductive program format.

    Implementations turn ``.ablp`` text into frameworks, goal lists and contexts, and
    render frameworks back into text that parses to an equal framework.
    """

    @abstractmethod
    def parse_program(self, source: SourceProgram) -> AbductiveFramework:
        """Parses a complete program.

        Args:
            source (SourceProgram): The program text and its origin.

        Returns:
            AbductiveFramework: The declared abducibles, rules and integrity constraints.

        Raises:
            AbductiveSyntaxError: If the text does not follow the grammar.
            AbducibleRuleHeadError: If a rule defines an abducible predicate.
            EmptyIntegrityConstraintError: If an integrity constraint has no body.
            ReservedPredicateError: If a predicate uses a system predicate name.
        """
        raise NotImplementedError

    @abstractmethod
    def parse_query(self, text: str) -> list[Literal]:
        """Parses a non-empty goal list such as ``r, t(1), t(2).``.

        Raises:
            AbductiveSyntaxError: If the text is empty or malformed.
        """
        raise NotImplementedError

    @abstractmethod
    def parse_context(self, text: str) -> Context:
        """Parses a possibly empty, comma-separated list of ground literals.

        Raises:
            AbductiveSyntaxError: If the text is malformed.
            InconsistentContextError: If the list holds a literal and its complement.
            NonGroundTargetError: If a literal has variables.
        """
        raise NotImplementedError

    @abstractmethod
    def pretty_print(self, framework: AbductiveFramework) -> str:
        """Renders a framework in canonical layout."""
        raise NotImplementedError
