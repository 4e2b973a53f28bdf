"""Behave hooks for the ablp feature suite.

A ``TestConfig`` read from ``.env.test`` is the global configuration for every
scenario, and each scenario keeps its values in its own ``ScenarioContext``.
"""

import logging
import uuid

from behave.model import Scenario
from behave.runner import Context
from pydantic_settings import SettingsConfigDict

from ablp.configs.base_config import BaseConfig
from features.scenario_context_pool_manager import ScenarioContextPoolManager

logger = logging.getLogger("behave.tests")


class TestConfig(BaseConfig):
    model_config = SettingsConfigDict(env_file=".env.test")


config = TestConfig()
BaseConfig.set_global(config)


def before_all(context: Context) -> None:
    logging.basicConfig(level=config.LOGGING.LEVEL, format=config.LOGGING.FORMAT)
    context.scenario_context_pool = ScenarioContextPoolManager()
    logger.info("Feature suite started with engine budget %d", config.ENGINE.MAX_STEPS)


def before_scenario(context: Context, scenario: Scenario) -> None:
    if not hasattr(scenario, "id"):
        scenario.id = str(uuid.uuid4())
    # Scenarios may install their own configuration; each one starts from the shared one.
    BaseConfig.set_global(config)
    scenario_context = context.scenario_context_pool.get_context(scenario.id)
    scenario_context.store("test_config", config)
    logger.debug("Scenario %s: %s", scenario.id, scenario.name)


def after_scenario(context: Context, scenario: Scenario) -> None:
    context.scenario_context_pool.cleanup_context(getattr(scenario, "id", ""))


def after_all(context: Context) -> None:
    context.scenario_context_pool.cleanup_all()
    logger.info("Feature suite finished")
