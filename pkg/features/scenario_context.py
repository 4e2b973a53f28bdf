import logging
import tempfile
from pathlib import Path
from typing import Any

logger = logging.getLogger("behave.tests")


class ScenarioContext:
    """Values and program files belonging to one scenario.

    Steps hand parsed frameworks, solver results and captured errors to later steps
    through :meth:`store` and :meth:`get`. Program files written with
    :meth:`write_program` are deleted by :meth:`cleanup`.
    """

    def __init__(self, scenario_id: str) -> None:
        self.scenario_id = scenario_id
        self.storage: dict[str, Any] = {}
        self.program_files: list[Path] = []

    def store(self, key: str, value: Any) -> None:
        self.storage[key] = value

    def get(self, key: str, default: Any = None) -> Any:
        return self.storage.get(key, default)

    def write_program(self, text: str, suffix: str = ".ablp") -> str:
        with tempfile.NamedTemporaryFile("w", suffix=suffix, delete=False, encoding="utf-8") as handle:
            handle.write(text)
        self.program_files.append(Path(handle.name))
        return handle.name

    def cleanup(self) -> None:
        for path in self.program_files:
            try:
                path.unlink(missing_ok=True)
            except OSError:
                logger.warning("Could not remove %s", path, exc_info=True)
        self.program_files.clear()
        self.storage.clear()
