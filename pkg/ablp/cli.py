"""Command-line surface of the abduction toolchain.

Sub-commands:

* ``transform`` prints the transformed program and its size-bound report.
* ``solve`` streams one JSON line per solution and a metrics line per query.
* ``bench`` writes benchmark rows as CSV.
* ``check`` compares minimal engine solutions with the brute-force oracle.

Exit statuses: 0 success, 1 parse error, 2 transform error, 3 no solution,
4 engine error, 5 engine and oracle disagree.
"""

import argparse
import contextlib
import itertools
import logging
import sys
from collections.abc import Iterator, Sequence
from pathlib import Path
from typing import TextIO

from ablp.adapters.parser.adapters import LarkParserAdapter
from ablp.adapters.reporting.adapters import CsvBenchWriterAdapter, JsonLinesWriterAdapter
from ablp.adapters.reporting.ports import RecordWriterPort
from ablp.configs.base_config import BaseConfig
from ablp.helpers.utils.error_utils import ErrorUtils
from ablp.helpers.utils.program_utils import ProgramUtils
from ablp.models.dtos.bench_dtos import ModeDTO
from ablp.models.dtos.options_dtos import EngineOptionsDTO, TransformOptionsDTO
from ablp.models.dtos.report_dtos import CheckReportDTO
from ablp.models.dtos.solution_dtos import MetricsRecordDTO, SolutionRecordDTO
from ablp.models.entities import AbductiveFramework, Context, Literal, SourceProgram
from ablp.models.errors import BaseError
from ablp.models.types.call_style_type import CallStyleType
from ablp.models.types.error_message_types import MISMATCH_EXIT, NO_SOLUTION_EXIT, PARSE_EXIT
from ablp.models.types.ic_mode_type import ICModeType
from ablp.models.types.scenario_family_type import ScenarioFamilyType
from ablp.models.types.subsumption_type import SubsumptionType
from ablp.models.types.tabling_mode_type import TablingModeType
from ablp.services.bench import run_family
from ablp.services.engine import AbductiveSolver
from ablp.services.oracle import AbductiveOracle
from ablp.services.transformer import (
    check_size_bound,
    elide_context,
    elide_query,
    reinsert_constants,
    transform_program,
)

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ablp", description="Tabled abduction over abductive logic programs.")
    commands = parser.add_subparsers(dest="command", required=True)

    modes = argparse.ArgumentParser(add_help=False)
    modes.add_argument("--ic-mode", type=ICModeType, choices=list(ICModeType), default=None)
    modes.add_argument("--tabling", type=TablingModeType, choices=list(TablingModeType), default=None)
    modes.add_argument("--subsumption", type=SubsumptionType, choices=list(SubsumptionType), default=None)
    modes.add_argument("--max-steps", type=int, default=None)
    modes.add_argument("--out", type=Path, default=None, help="Output file, stdout when omitted")
    modes.add_argument("--log-level", default=None, help="Overrides LOGGING.LEVEL")

    program = argparse.ArgumentParser(add_help=False)
    program.add_argument("input", type=Path, help="An .ablp program")
    program.add_argument("--elide-constants", action=argparse.BooleanOptionalAction, default=None)

    queries = argparse.ArgumentParser(add_help=False)
    queries.add_argument("--query", action="append", required=True, help="Query goals; may repeat")
    queries.add_argument("--context", default=None, help="Initial context, e.g. 'r(1), not s(0)'")

    commands.add_parser("transform", parents=[modes, program], help="Print the transformed program")
    solve = commands.add_parser("solve", parents=[modes, program, queries], help="Solve queries")
    solve.add_argument("--incremental", action=argparse.BooleanOptionalAction, default=False)
    commands.add_parser("check", parents=[modes, program, queries], help="Compare the engine with the oracle")
    bench = commands.add_parser("bench", parents=[modes], help="Run a benchmark family and write CSV")
    bench.add_argument("scenario", type=ScenarioFamilyType, choices=list(ScenarioFamilyType))
    bench.add_argument("--n", type=int, default=10)
    bench.add_argument("--seed", type=int, default=None)
    bench.add_argument("--repetitions", type=int, default=None)
    bench.add_argument("--incremental", action=argparse.BooleanOptionalAction, default=False)
    return parser


class AbductionCli:
    """Runs one parsed command line against the installed configuration.

    Args:
        config (BaseConfig): Configuration providing defaults for unset flags.
        stdout (TextIO, optional): Stream used when ``--out`` is not given. Defaults to
            ``sys.stdout``.
    """

    def __init__(self, config: BaseConfig, stdout: TextIO | None = None) -> None:
        self._config = config
        self._stdout = stdout or sys.stdout
        self._parser = LarkParserAdapter()

    def run(self, args: argparse.Namespace) -> int:
        handlers = {
            "transform": self.cmd_transform,
            "solve": self.cmd_solve,
            "bench": self.cmd_bench,
            "check": self.cmd_check,
        }
        try:
            with self._output(args.out) as stream:
                return handlers[args.command](args, stream)
        except BaseError as error:
            return ErrorUtils.capture_exception(error)
        except OSError as error:
            logger.error("Cannot read or write a file: %s", error)  # noqa: TRY400
            return PARSE_EXIT
        except Exception as error:
            return ErrorUtils.capture_exception(error)

    def cmd_transform(self, args: argparse.Namespace, stream: TextIO) -> int:
        framework = self._load(args.input)
        program = transform_program(framework, self._transform_options(args))
        report = check_size_bound(framework, program)
        writer = JsonLinesWriterAdapter(stream)
        writer.write_text(program.pretty())
        writer.write_text(
            f"% size bound: lhs={report.lhs} rhs={report.rhs} holds={str(report.holds).lower()}"
            f" rhs_with_ics={report.rhs_with_ics} holds_with_ics={str(report.holds_with_ics).lower()}",
        )
        for skipped in program.elision.skipped:
            writer.write_text(f"% elision skipped: {skipped}")
        return 0

    def cmd_solve(self, args: argparse.Namespace, stream: TextIO) -> int:
        framework = self._load(args.input)
        options = self._transform_options(args)
        program = transform_program(framework, options)
        queries = [(text, tuple(self._parser.parse_query(text))) for text in args.query]
        initial = self._parser.parse_context(args.context) if args.context else None
        if options.elide_constants:
            queries = [(text, elide_query(query, program.elision)) for text, query in queries]
            initial = elide_context(initial, program.elision) if initial is not None else None
        solver = AbductiveSolver(
            program,
            EngineOptionsDTO.matching(options, subsumption=self._subsumption(args), max_steps=args.max_steps),
            constants=tuple(ProgramUtils.constants_of(itertools.chain.from_iterable(query for _, query in queries))),
        )

        writer = JsonLinesWriterAdapter(stream)
        total = 0
        for text, query in queries:
            if not args.incremental:
                solver.abolish_tables()
            solutions = solver.solve(query, initial)
            for index, solution in enumerate(solutions, start=1):
                context = solution.context
                if options.elide_constants:
                    context = reinsert_constants(context, program.elision)
                writer.write_record(
                    SolutionRecordDTO(
                        query=text,
                        index=index,
                        context=context.strings(),
                        bindings=solution.binding_strings(),
                    ),
                )
            writer.write_record(MetricsRecordDTO.from_metrics(text, len(solutions), solver.metrics))
            total += len(solutions)
        return 0 if total else NO_SOLUTION_EXIT

    def cmd_bench(self, args: argparse.Namespace, stream: TextIO) -> int:
        rows = run_family(
            args.scenario,
            args.n,
            modes=self._bench_modes(args),
            call_style=CallStyleType.INCREMENTAL if args.incremental else CallStyleType.NON_INCREMENTAL,
            repetitions=args.repetitions or self._config.BENCH.REPETITIONS,
            seed=args.seed,
        )
        written = CsvBenchWriterAdapter(stream).write_rows(rows)
        failed = sum(1 for row in rows if row.error)
        if failed:
            logger.warning("%d of %d benchmark rows recorded an error", failed, written)
        return 0

    def cmd_check(self, args: argparse.Namespace, stream: TextIO) -> int:
        framework = self._load(args.input)
        initial = self._parser.parse_context(args.context) if args.context else None
        program = transform_program(framework, TransformOptionsDTO(ic_mode=ICModeType.SUBCHECK))
        options = EngineOptionsDTO.matching(
            program.options,
            subsumption=SubsumptionType.MINIMAL,
            max_steps=args.max_steps,
        )
        queries = [(text, self._parser.parse_query(text)) for text in args.query]
        solver = AbductiveSolver(
            program,
            options,
            constants=tuple(ProgramUtils.constants_of(itertools.chain.from_iterable(query for _, query in queries))),
        )
        oracle = AbductiveOracle(self._config.ORACLE)
        writer = JsonLinesWriterAdapter(stream)
        status = 0
        for text, query in queries:
            solver.abolish_tables()
            contexts = [solution.context for solution in solver.solve(query, initial)]
            report = oracle.check_solutions(framework, query, contexts, SubsumptionType.MINIMAL, initial)
            status = max(status, report_check(text, report, writer))
        return status

    def _load(self, path: Path) -> AbductiveFramework:
        return self._parser.parse_program(SourceProgram.from_path(path))

    def _transform_options(self, args: argparse.Namespace) -> TransformOptionsDTO:
        defaults = self._config.TRANSFORM
        return TransformOptionsDTO(
            ic_mode=args.ic_mode or defaults.DEFAULT_IC_MODE,
            tabling_mode=args.tabling or defaults.DEFAULT_TABLING_MODE,
            elide_constants=defaults.ELIDE_CONSTANTS if args.elide_constants is None else args.elide_constants,
        )

    def _subsumption(self, args: argparse.Namespace) -> SubsumptionType:
        return args.subsumption or self._config.ENGINE.DEFAULT_SUBSUMPTION

    @staticmethod
    def _bench_modes(args: argparse.Namespace) -> list[ModeDTO] | None:
        """Every combination of the given mode flags, or None to keep the family defaults."""
        if args.ic_mode is None and args.tabling is None and args.subsumption is None:
            return None
        ic_modes = [args.ic_mode] if args.ic_mode else list(ICModeType)
        tabling_modes = [args.tabling] if args.tabling else list(TablingModeType)
        subsumption = args.subsumption or SubsumptionType.ALL
        return [
            ModeDTO(ic_mode=ic_mode, tabling_mode=tabling_mode, subsumption=subsumption)
            for ic_mode, tabling_mode in itertools.product(ic_modes, tabling_modes)
        ]

    @contextlib.contextmanager
    def _output(self, path: Path | None) -> Iterator[TextIO]:
        if path is None:
            yield self._stdout
            return
        with path.open("w", encoding="utf-8", newline="") as stream:
            yield stream


def report_check(query: str, report: CheckReportDTO, writer: RecordWriterPort) -> int:
    """Writes the symmetric difference of a check and returns its exit status."""
    if report.equal:
        writer.write_text(f"{query}: equal ({report.engine_count} solutions)")
        return 0
    writer.write_text(f"{query}: engine {report.engine_count}, oracle {report.oracle_count}")
    for context in report.missing:
        writer.write_text(f"missing: {context}")
    for context in report.unexpected:
        writer.write_text(f"unexpected: {context}")
    return MISMATCH_EXIT


def configure_logging(config: BaseConfig, level: str | None = None) -> None:
    logging.basicConfig(
        level=(level or config.LOGGING.LEVEL).upper(),
        format=config.LOGGING.FORMAT,
        stream=sys.stderr,
        force=True,
    )


def main(argv: Sequence[str] | None = None, stdout: TextIO | None = None, config: BaseConfig | None = None) -> int:
    args = build_parser().parse_args(argv)
    config = config or BaseConfig()
    BaseConfig.set_global(config)
    configure_logging(config, args.log_level)
    return AbductionCli(config, stdout).run(args)
