from features.scenario_context import ScenarioContext


class ScenarioContextPoolManager:
    """Hands out one :class:`ScenarioContext` per scenario id and disposes of them."""

    def __init__(self) -> None:
        self.contexts: dict[str, ScenarioContext] = {}

    def get_context(self, scenario_id: str) -> ScenarioContext:
        if scenario_id not in self.contexts:
            self.contexts[scenario_id] = ScenarioContext(scenario_id)
        return self.contexts[scenario_id]

    def cleanup_context(self, scenario_id: str) -> None:
        scenario_context = self.contexts.pop(scenario_id, None)
        if scenario_context is not None:
            scenario_context.cleanup()

    def cleanup_all(self) -> None:
        for scenario_id in list(self.contexts):
            self.cleanup_context(scenario_id)
