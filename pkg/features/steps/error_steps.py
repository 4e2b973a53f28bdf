from unittest.mock import patch

from behave import then, when

from ablp.helpers.utils import error_utils
from ablp.helpers.utils.error_utils import ErrorUtils
from ablp.models import errors
from features.test_helpers import get_current_scenario_context


@when('a "{error_type}" is raised')
def step_when_error_raised(context, error_type):
    scenario_context = get_current_scenario_context(context)
    try:
        raise getattr(errors, error_type)()
    except errors.BaseError as error:
        scenario_context.store("error", error)


@when("a plain RuntimeError is raised")
def step_when_runtime_error_raised(context):
    scenario_context = get_current_scenario_context(context)
    scenario_context.store("error", RuntimeError("boom"))


@when("the error is captured")
def step_when_error_captured(context):
    scenario_context = get_current_scenario_context(context)
    with (
        patch.object(error_utils.logger, "error") as mock_error,
        patch.object(error_utils.logger, "exception") as mock_exception,
    ):
        scenario_context.store("status", ErrorUtils.capture_exception(scenario_context.get("error")))
    scenario_context.store("logged_error", mock_error.called)
    scenario_context.store("logged_exception", mock_exception.called)


@then('the captured error should have code "{code}" and exit status {status:d}')
def step_then_error_detail(context, code, status):
    scenario_context = get_current_scenario_context(context)
    error = scenario_context.get("error")
    assert error.code == code, f"Expected code {code}, but got {error.code}"
    assert ErrorUtils.exit_code_for(error) == status, f"Expected exit status {status}, but got {error.exit_code}"


@then('the captured error should render as "{prefix}" followed by its message')
def step_then_error_rendering(context, prefix):
    scenario_context = get_current_scenario_context(context)
    error = scenario_context.get("error")
    assert str(error) == f"{prefix} {error.get_message()}", f"Got {error}"


@then("it should be logged at error level")
def step_then_logged_error(context):
    scenario_context = get_current_scenario_context(context)
    assert scenario_context.get("logged_error") is True
    assert scenario_context.get("logged_exception") is False


@then("it should be logged with a traceback")
def step_then_logged_exception(context):
    scenario_context = get_current_scenario_context(context)
    assert scenario_context.get("logged_exception") is True


@then("the capture should return exit status {status:d}")
def step_then_capture_status(context, status):
    scenario_context = get_current_scenario_context(context)
    assert scenario_context.get("status") == status


@when("a step budget error for {steps:d} steps is raised")
def step_when_budget_error_raised(context, steps):
    scenario_context = get_current_scenario_context(context)
    scenario_context.store("error", errors.StepBudgetExceededError(max_steps=steps))


@then('its record should carry the code "{code}" and the detail "{key}" = {value:d}')
def step_then_error_record(context, code, key, value):
    scenario_context = get_current_scenario_context(context)
    record = scenario_context.get("error").to_dict()
    assert record["error"] == code, f"Expected {code}, but got {record['error']}"
    assert record["detail"][key] == value, f"Expected {key}={value}, but got {record['detail']}"
