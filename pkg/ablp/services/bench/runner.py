import dataclasses
import logging
from collections.abc import Sequence

from ablp.adapters.parser.adapters import LarkParserAdapter
from ablp.adapters.parser.ports import ParserPort
from ablp.configs.base_config import BaseConfig
from ablp.helpers.decorators.timing import timing_decorator
from ablp.helpers.utils.error_utils import ErrorUtils
from ablp.helpers.utils.program_utils import ProgramUtils
from ablp.models.dtos.bench_dtos import BenchRowDTO, ModeDTO, RandomProgramParamsDTO
from ablp.models.dtos.options_dtos import EngineOptionsDTO, TransformOptionsDTO
from ablp.models.entities import Literal, Scenario
from ablp.models.errors import BaseError, InvalidArgumentError
from ablp.models.types.call_style_type import CallStyleType
from ablp.models.types.scenario_family_type import ScenarioFamilyType
from ablp.services.bench.generators import ALL_MODES, RandomFrameworkGenerator, gen_exp1, gen_exp3
from ablp.services.engine import AbductiveSolver
from ablp.services.transformer import transform_program

logger = logging.getLogger(__name__)


class ScenarioRunner:
    """Runs benchmark scenarios and collects one metrics row per query call.

    Every mode gets its own transformed program and solver. In incremental style the
    solver keeps its answer tables across queries and repetitions; otherwise the tables
    are abolished before every call. Errors of a call are recorded in its row and the run
    goes on with the next call.

    Args:
        parser (ParserPort, optional): Parses the scenario's query strings. Defaults to
            :class:`LarkParserAdapter`.
    """

    def __init__(self, parser: ParserPort | None = None) -> None:
        self._parser = parser or LarkParserAdapter()

    @timing_decorator
    def run_scenario(self, scenario: Scenario) -> list[BenchRowDTO]:
        """Rows ordered by mode, then query index, then repetition."""
        queries = [self._parser.parse_query(text) for text in scenario.queries]
        rows: list[BenchRowDTO] = []
        for mode in scenario.modes:
            rows.extend(self._run_mode(scenario, mode, queries))
        logger.info(
            "Scenario %s(n=%d): %d rows over %d modes, %d failed",
            scenario.name,
            scenario.n,
            len(rows),
            len(scenario.modes),
            sum(1 for row in rows if row.error),
        )
        return rows

    def _run_mode(self, scenario: Scenario, mode: ModeDTO, queries: Sequence[list[Literal]]) -> list[BenchRowDTO]:
        def row(index: int, repetition: int) -> BenchRowDTO:
            return BenchRowDTO(
                scenario=scenario.name,
                n=scenario.n,
                ic_mode=mode.ic_mode,
                tabling_mode=mode.tabling_mode,
                subsumption=mode.subsumption,
                call_style=scenario.call_style.value,
                query_index=index,
                repetition=repetition,
            )

        calls = [
            (index, repetition)
            for repetition in range(1, scenario.repetitions + 1)
            for index in range(1, len(queries) + 1)
        ]
        try:
            program = transform_program(
                scenario.framework,
                TransformOptionsDTO(ic_mode=mode.ic_mode, tabling_mode=mode.tabling_mode),
            )
            solver = AbductiveSolver(
                program,
                EngineOptionsDTO.matching(program.options, subsumption=mode.subsumption),
                constants=tuple(ProgramUtils.constants_of(literal for query in queries for literal in query)),
            )
        except BaseError as error:
            logger.warning("Mode %s of %s failed to build: %s", mode.label, scenario.name, error)
            code = ErrorUtils.error_code(error)
            return sorted(
                (row(index, repetition).model_copy(update={"error": code}) for index, repetition in calls),
                key=lambda item: (item.query_index, item.repetition),
            )

        rows = []
        for index, repetition in calls:
            if scenario.call_style is CallStyleType.NON_INCREMENTAL:
                solver.abolish_tables()
            try:
                solutions = solver.solve(queries[index - 1])
            except BaseError as error:
                logger.warning("Query %d of %s under %s failed: %s", index, scenario.name, mode.label, error)
                solver.abolish_tables()
                rows.append(row(index, repetition).model_copy(update={"error": ErrorUtils.error_code(error)}))
                continue
            metrics = solver.metrics
            rows.append(
                row(index, repetition).model_copy(
                    update={
                        "inferences": metrics.inferences,
                        "table_bytes": metrics.table_bytes,
                        "table_entries": metrics.table_entries,
                        "solutions": len(solutions),
                        "wall_ms": metrics.wall_ms,
                    },
                ),
            )
        return sorted(rows, key=lambda item: (item.query_index, item.repetition))


def run_scenario(scenario: Scenario) -> list[BenchRowDTO]:
    return ScenarioRunner().run_scenario(scenario)


def build_family(
    family: ScenarioFamilyType,
    n: int,
    modes: Sequence[ModeDTO] | None = None,
    call_style: CallStyleType = CallStyleType.NON_INCREMENTAL,
    repetitions: int = 1,
    seed: int | None = None,
) -> list[Scenario]:
    """Scenarios of a benchmark family.

    ``exp1`` gives one scenario with ``n`` queries, ``exp3`` one scenario per size
    ``1 .. n`` and ``random`` one framework generated from ``seed`` with ``n`` ground
    queries. ``modes`` left unset takes the family's default modes.
    """
    if n < 1:
        raise InvalidArgumentError(argument_name="n", additional_data={"n": n})
    if family is ScenarioFamilyType.EXP1:
        scenarios = [gen_exp1(n)]
    elif family is ScenarioFamilyType.EXP3:
        scenarios = [gen_exp3(size) for size in range(1, n + 1)]
    else:
        bench_config = BaseConfig.global_config().BENCH
        seed = bench_config.CORPUS_SEED if seed is None else seed
        generator = RandomFrameworkGenerator(RandomProgramParamsDTO.from_config(bench_config))
        framework = generator.generate(seed)
        queries = dict.fromkeys(
            ", ".join(str(literal) for literal in generator.query_for(seed + offset, framework)) for offset in range(n)
        )
        scenarios = [
            Scenario(name=family.value, n=n, framework=framework, queries=tuple(queries), modes=ALL_MODES),
        ]
    return [
        dataclasses.replace(
            scenario,
            modes=scenario.modes if modes is None else tuple(modes),
            call_style=call_style,
            repetitions=repetitions,
        )
        for scenario in scenarios
    ]


def run_family(
    family: ScenarioFamilyType,
    n: int,
    modes: Sequence[ModeDTO] | None = None,
    call_style: CallStyleType = CallStyleType.NON_INCREMENTAL,
    repetitions: int = 1,
    seed: int | None = None,
) -> list[BenchRowDTO]:
    runner = ScenarioRunner()
    rows: list[BenchRowDTO] = []
    for scenario in build_family(family, n, modes, call_style, repetitions, seed):
        rows.extend(runner.run_scenario(scenario))
    return rows
