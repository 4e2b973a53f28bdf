from ablp.services.bench.generators import (
    ALL_MODES,
    EXP1_MODES,
    EXP3_MODES,
    RandomFrameworkGenerator,
    build_corpus,
    gen_exp1,
    gen_exp3,
    gen_random,
)
from ablp.services.bench.runner import ScenarioRunner, build_family, run_family, run_scenario

__all__ = [
    "ALL_MODES",
    "EXP1_MODES",
    "EXP3_MODES",
    "RandomFrameworkGenerator",
    "ScenarioRunner",
    "build_corpus",
    "build_family",
    "gen_exp1",
    "gen_exp3",
    "gen_random",
    "run_family",
    "run_scenario",
]
