from ablp.services.oracle.abductive_oracle import AbductiveOracle, check_solutions, enumerate_solutions
from ablp.services.oracle.grounding import GroundProgram, GroundRule, ground_program
from ablp.services.oracle.well_founded import ThreeValuedModel, wfm

__all__ = [
    "AbductiveOracle",
    "GroundProgram",
    "GroundRule",
    "ThreeValuedModel",
    "check_solutions",
    "enumerate_solutions",
    "ground_program",
    "wfm",
]
