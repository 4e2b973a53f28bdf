from behave import given, then
from behave.runner import Context

from ablp.models.errors import BaseError
from features.test_helpers import get_current_scenario_context, parse_framework


@given("the abductive program")
def step_given_abductive_program(context: Context) -> None:
    """Parse the program in the step's doc string.

    Args:
        context: The behave context object
    """
    scenario_context = get_current_scenario_context(context)
    scenario_context.store("program_text", context.text)
    scenario_context.store("framework", parse_framework(context.text))


@given("the abductive program text")
def step_given_abductive_program_text(context: Context) -> None:
    """Keep the doc string unparsed, for scenarios about parsing itself.

    Args:
        context: The behave context object
    """
    scenario_context = get_current_scenario_context(context)
    scenario_context.store("program_text", context.text)


@then('an error with code "{code}" should be raised')
def step_then_error_code(context: Context, code: str) -> None:
    """Verify the code of the error a previous step captured.

    Args:
        context: The behave context object
        code: The expected catalogue code
    """
    scenario_context = get_current_scenario_context(context)
    error = scenario_context.get("error")
    assert isinstance(error, BaseError), f"Expected error {code}, but nothing was raised"
    assert error.error_detail.code == code, f"Expected {code}, got {error.error_detail.code}"


@then("no error should be raised")
def step_then_no_error(context: Context) -> None:
    scenario_context = get_current_scenario_context(context)
    error = scenario_context.get("error")
    assert error is None, f"Unexpected error: {error}"
