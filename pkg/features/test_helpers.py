"""Helpers shared by the step modules."""

from behave.runner import Context as BehaveContext

from ablp.adapters.parser.adapters import LarkParserAdapter
from ablp.models.entities import AbductiveFramework, Context, SourceProgram
from features.scenario_context import ScenarioContext

parser = LarkParserAdapter()


def get_current_scenario_context(context: BehaveContext) -> ScenarioContext:
    """Returns the storage of the running scenario.

    Raises:
        AttributeError: If ``before_all`` did not install the scenario context pool.
    """
    pool = getattr(context, "scenario_context_pool", None)
    if pool is None:
        raise AttributeError("No scenario context pool available")
    return pool.get_context(context.scenario.id)


def parse_framework(text: str) -> AbductiveFramework:
    return parser.parse_program(SourceProgram(text))


def parse_context(text: str) -> Context:
    """Parses a context written as in the program format; ``[]`` is the empty context."""
    return parser.parse_context(text)
