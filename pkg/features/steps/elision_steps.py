from behave import then, when

from ablp.helpers.utils.program_utils import ProgramUtils
from ablp.models.dtos.options_dtos import EngineOptionsDTO, TransformOptionsDTO
from ablp.services.engine import AbductiveSolver
from ablp.services.transformer import elide_query, reinsert_constants, transform_program
from features.test_helpers import get_current_scenario_context, parse_context, parser


def _both_programs(scenario_context):
    framework = scenario_context.get("framework")
    return {
        elide: transform_program(framework, TransformOptionsDTO(elide_constants=elide)) for elide in (True, False)
    }


@when('the query "{text}" is solved with and without constant elision')
def step_when_solved_with_and_without_elision(context, text):
    scenario_context = get_current_scenario_context(context)
    query = parser.parse_query(text)
    programs = _both_programs(scenario_context)
    runs = {}
    for elide, program in programs.items():
        goals = elide_query(query, program.elision) if elide else tuple(query)
        solver = AbductiveSolver(
            program,
            EngineOptionsDTO.matching(program.options),
            constants=tuple(ProgramUtils.constants_of(goals)),
        )
        contexts = [reinsert_constants(solution.context, program.elision) for solution in solver.solve(goals)]
        runs[elide] = (contexts, solver.metrics.table_bytes)
    scenario_context.store("programs", programs)
    scenario_context.store("runs", runs)


@when("the program is transformed with and without constant elision")
def step_when_transformed_with_and_without_elision(context):
    scenario_context = get_current_scenario_context(context)
    scenario_context.store("programs", _both_programs(scenario_context))


@then('the elision report should drop position {position:d} of "{predicates}"')
def step_then_elided_positions(context, position, predicates):
    scenario_context = get_current_scenario_context(context)
    report = scenario_context.get("programs")[True].elision
    dropped = sorted(f"{item.predicate}/{item.arity}" for item in report.positions if item.position == position)
    assert ", ".join(dropped) == predicates, f"Dropped {dropped}"
    assert len(report.positions) == len(dropped)


@then("the elision report should be empty")
def step_then_elision_empty(context):
    scenario_context = get_current_scenario_context(context)
    assert scenario_context.get("programs")[True].elision.is_empty


@then('the elision report should skip "{label}"')
def step_then_elision_skips(context, label):
    scenario_context = get_current_scenario_context(context)
    assert label in scenario_context.get("programs")[True].elision.skipped


@then("both transformed programs should print the same")
def step_then_programs_print_same(context):
    scenario_context = get_current_scenario_context(context)
    programs = scenario_context.get("programs")
    assert programs[True].pretty() == programs[False].pretty()


@then("both runs should give the contexts")
def step_then_runs_give_contexts(context):
    scenario_context = get_current_scenario_context(context)
    expected = sorted(str(parse_context(row["context"])) for row in context.table)
    for elide, (contexts, _) in scenario_context.get("runs").items():
        found = sorted(map(str, contexts))
        assert found == expected, f"With elision={elide}: expected {expected}, got {found}"


@then("the elided run should use {elided:d} table bytes against {full:d} for the full run")
def step_then_elision_bytes(context, elided, full):
    scenario_context = get_current_scenario_context(context)
    runs = scenario_context.get("runs")
    assert (runs[True][1], runs[False][1]) == (elided, full), f"Got {runs[True][1]} and {runs[False][1]}"
