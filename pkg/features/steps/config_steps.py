import os
from unittest import mock

from behave import then, when

from ablp.configs.base_config import BaseConfig
from ablp.configs.config_template import LoggingConfig
from ablp.models.dtos.options_dtos import EngineOptionsDTO
from ablp.models.errors import BaseError
from features.environment import TestConfig
from features.test_helpers import get_current_scenario_context


@when('a configuration is loaded with "{name}" set to "{value}"')
def step_when_config_loaded_with_env(context, name, value):
    scenario_context = get_current_scenario_context(context)
    with mock.patch.dict(os.environ, {name: value}):
        scenario_context.store("loaded_config", TestConfig())


@when("the loaded configuration is installed globally")
def step_when_config_installed(context):
    scenario_context = get_current_scenario_context(context)
    BaseConfig.set_global(scenario_context.get("loaded_config"))


@when('a logging configuration with level "{level}" is built')
def step_when_logging_config_built(context, level):
    scenario_context = get_current_scenario_context(context)
    try:
        LoggingConfig(LEVEL=level)
    except BaseError as error:
        scenario_context.store("error", error)


@when("engine options with a step budget of {steps:d} are built")
def step_when_engine_options_built(context, steps):
    scenario_context = get_current_scenario_context(context)
    try:
        EngineOptionsDTO(max_steps=steps)
    except BaseError as error:
        scenario_context.store("error", error)


@then("the global configuration should be the test configuration")
def step_then_global_is_test_config(context):
    scenario_context = get_current_scenario_context(context)
    assert BaseConfig.global_config() is scenario_context.get("test_config")


@then("the global engine step budget should be {steps:d}")
def step_then_global_budget(context, steps):
    assert BaseConfig.global_config().ENGINE.MAX_STEPS == steps


@then('the loaded default subsumption should be "{policy}"')
def step_then_loaded_subsumption(context, policy):
    scenario_context = get_current_scenario_context(context)
    assert str(scenario_context.get("loaded_config").ENGINE.DEFAULT_SUBSUMPTION) == policy
