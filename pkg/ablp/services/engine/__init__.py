from ablp.services.engine.abductive_solver import AbductiveSolver, solve

__all__ = ["AbductiveSolver", "solve"]
