from behave import given, then, when

from ablp.helpers.utils.program_utils import ProgramUtils
from ablp.models.dtos.options_dtos import EngineOptionsDTO, TransformOptionsDTO
from ablp.models.errors import BaseError
from ablp.models.types.ic_mode_type import ICModeType
from ablp.models.types.scenario_family_type import ScenarioFamilyType
from ablp.models.types.subsumption_type import SubsumptionType
from ablp.models.types.tabling_mode_type import TablingModeType
from ablp.services.bench import gen_exp1, gen_exp3
from ablp.services.engine import AbductiveSolver, solve
from ablp.services.oracle import AbductiveOracle
from ablp.services.transformer import transform_program
from features.test_helpers import get_current_scenario_context, parse_context, parser

FAMILIES = {ScenarioFamilyType.EXP1: gen_exp1, ScenarioFamilyType.EXP3: gen_exp3}


def _solver(scenario_context, query, ic_mode="subcheck", tabling="normal", max_steps=None, subsumption="all"):
    options = TransformOptionsDTO(ic_mode=ICModeType(ic_mode), tabling_mode=TablingModeType(tabling))
    program = transform_program(scenario_context.get("framework"), options)
    return AbductiveSolver(
        program,
        EngineOptionsDTO.matching(options, SubsumptionType(subsumption), max_steps=max_steps),
        constants=tuple(ProgramUtils.constants_of(query)),
    )


def _solve(scenario_context, text, initial=None, **modes):
    query = parser.parse_query(text)
    scenario_context.store("query", query)
    try:
        solver = _solver(scenario_context, query, **modes)
        scenario_context.store("solver", solver)
        scenario_context.store("solutions", solver.solve(query, initial))
        scenario_context.store("metrics", solver.metrics)
    except BaseError as error:
        scenario_context.store("error", error)


@given('the generated "{family}" framework of size {n:d}')
def step_given_generated_framework(context, family, n):
    scenario_context = get_current_scenario_context(context)
    scenario = FAMILIES[ScenarioFamilyType(family)](n)
    scenario_context.store("framework", scenario.framework)


@when('the query "{text}" is solved under "{ic_mode}" constraints and "{tabling}" tabling')
def step_when_query_solved(context, text, ic_mode, tabling):
    scenario_context = get_current_scenario_context(context)
    _solve(scenario_context, text, ic_mode=ic_mode, tabling=tabling)


@when('the query "{text}" is solved under "{ic_mode}" constraints and "{tabling}" tabling from the context "{initial}"')
def step_when_query_solved_from_context(context, text, ic_mode, tabling, initial):
    scenario_context = get_current_scenario_context(context)
    _solve(scenario_context, text, parse_context(initial), ic_mode=ic_mode, tabling=tabling)


@when('the query "{text}" is solved with a step budget of {steps:d}')
def step_when_query_solved_with_budget(context, text, steps):
    scenario_context = get_current_scenario_context(context)
    _solve(scenario_context, text, max_steps=steps)


@when('the query "{text}" is solved keeping "{subsumption}" answers')
def step_when_query_solved_with_subsumption(context, text, subsumption):
    scenario_context = get_current_scenario_context(context)
    _solve(scenario_context, text, subsumption=subsumption)


@when('a "{engine_mode}" solver is built for the program transformed with "{ic_mode}" constraints')
def step_when_mismatched_solver_built(context, engine_mode, ic_mode):
    scenario_context = get_current_scenario_context(context)
    program = transform_program(scenario_context.get("framework"), TransformOptionsDTO(ic_mode=ICModeType(ic_mode)))
    try:
        AbductiveSolver(program, EngineOptionsDTO(ic_mode=ICModeType(engine_mode)))
    except BaseError as error:
        scenario_context.store("error", error)


@when('the queries "{first}" and "{second}" are solved one after the other by the same solver')
def step_when_queries_share_solver(context, first, second):
    scenario_context = get_current_scenario_context(context)
    first_query = parser.parse_query(first)
    solver = _solver(scenario_context, first_query)
    try:
        solver.solve(first_query)
        solver.solve(parser.parse_query(second))
    except BaseError as error:
        scenario_context.store("error", error)


@when('the query "{text}" is solved twice with fresh "{ic_mode}" solvers')
def step_when_solved_with_fresh_solvers(context, text, ic_mode):
    scenario_context = get_current_scenario_context(context)
    query = parser.parse_query(text)
    runs = []
    for _ in range(2):
        solver = _solver(scenario_context, query, ic_mode=ic_mode)
        contexts = [solution.context for solution in solver.solve(query)]
        metrics = solver.metrics
        runs.append((contexts, metrics.inferences, metrics.table_bytes, metrics.table_entries))
    scenario_context.store("runs", runs)


@when('the query "{text}" is solved twice by the same "{ic_mode}" solver')
def step_when_solved_twice_by_same_solver(context, text, ic_mode):
    scenario_context = get_current_scenario_context(context)
    query = parser.parse_query(text)
    solver = _solver(scenario_context, query, ic_mode=ic_mode)
    runs = []
    for _ in range(2):
        contexts = [solution.context for solution in solver.solve(query)]
        runs.append((contexts, solver.metrics.inferences))
    scenario_context.store("runs", runs)


@then("the solutions should be")
def step_then_solutions(context):
    scenario_context = get_current_scenario_context(context)
    assert scenario_context.get("error") is None, f"Unexpected error: {scenario_context.get('error')}"
    found = [solution.context for solution in scenario_context.get("solutions")]
    expected = [parse_context(row["context"]) for row in context.table]
    assert sorted(map(str, found)) == sorted(map(str, expected)), f"Expected {expected}, got {found}"


@then("there should be no solution")
def step_then_no_solution(context):
    scenario_context = get_current_scenario_context(context)
    assert scenario_context.get("error") is None, f"Unexpected error: {scenario_context.get('error')}"
    solutions = scenario_context.get("solutions")
    assert solutions == [], f"Expected no solution, got {[str(solution.context) for solution in solutions]}"


@then("the solver should report {inferences:d} inferences and {size:d} table bytes")
def step_then_inferences_and_bytes(context, inferences, size):
    scenario_context = get_current_scenario_context(context)
    metrics = scenario_context.get("metrics")
    assert (metrics.inferences, metrics.table_bytes) == (inferences, size), f"Got {metrics}"


@then("the solver should report {size:d} table bytes")
def step_then_table_bytes(context, size):
    scenario_context = get_current_scenario_context(context)
    metrics = scenario_context.get("metrics")
    assert metrics.table_bytes == size, f"Expected {size} bytes, got {metrics}"


@then("both runs should report the same solutions and metrics")
def step_then_runs_identical(context):
    scenario_context = get_current_scenario_context(context)
    first, second = scenario_context.get("runs")
    assert first == second, f"{first} != {second}"


@then("both calls should give the same solutions")
def step_then_calls_same_solutions(context):
    scenario_context = get_current_scenario_context(context)
    (first, _), (second, _) = scenario_context.get("runs")
    assert first == second


@then("the second call should take fewer inferences")
def step_then_second_call_cheaper(context):
    scenario_context = get_current_scenario_context(context)
    (_, first), (_, second) = scenario_context.get("runs")
    assert second < first, f"First call took {first} inferences, second {second}"


@when(
    'the query "{text}" is solved under "{ic_mode}" constraints and "{tabling}" tabling'
    ' keeping "{subsumption}" answers',
)
def step_when_query_solved_with_modes_and_subsumption(context, text, ic_mode, tabling, subsumption):
    scenario_context = get_current_scenario_context(context)
    _solve(scenario_context, text, ic_mode=ic_mode, tabling=tabling, subsumption=subsumption)


@when('the query "{text}" is solved from the context "{initial}" by a solver that already answered "{warmup}"')
def step_when_solved_with_reused_tables(context, text, initial, warmup):
    scenario_context = get_current_scenario_context(context)
    query = parser.parse_query(text)
    start = parse_context(initial)
    reused = _solver(scenario_context, query)
    reused.solve(parser.parse_query(warmup))
    scenario_context.store("reused", [solution.context for solution in reused.solve(query, start)])
    fresh = _solver(scenario_context, query)
    scenario_context.store("fresh", [solution.context for solution in fresh.solve(query, start)])


@when('the query "{text}" is solved in one call')
def step_when_solved_in_one_call(context, text):
    scenario_context = get_current_scenario_context(context)
    program = transform_program(scenario_context.get("framework"), TransformOptionsDTO())
    solutions, metrics = solve(program, parser.parse_query(text))
    scenario_context.store("solutions", solutions)
    scenario_context.store("metrics", metrics)


@when('the constraint pattern "{pattern}" is asserted into the solver\'s tables')
def step_when_pattern_asserted(context, pattern):
    scenario_context = get_current_scenario_context(context)
    try:
        scenario_context.get("solver").store.assert_ic(parse_context(pattern).literals)
    except BaseError as error:
        scenario_context.store("error", error)


@when("the solver's tables are abolished and the query is solved again")
def step_when_tables_abolished(context):
    scenario_context = get_current_scenario_context(context)
    solver = scenario_context.get("solver")
    before = solver.store.ic_facts()
    solver.abolish_tables()
    scenario_context.store("abolished_entries", solver.store.entry_count())
    scenario_context.store("patterns", (before, solver.store.ic_facts()))
    first = [solution.context for solution in scenario_context.get("solutions")]
    second = [solution.context for solution in solver.solve(scenario_context.get("query"))]
    scenario_context.store("runs", [(first, None), (second, None)])


@then("the solutions should agree with the oracle")
def step_then_solutions_agree_with_oracle(context):
    scenario_context = get_current_scenario_context(context)
    assert scenario_context.get("error") is None, f"Unexpected error: {scenario_context.get('error')}"
    contexts = [solution.context for solution in scenario_context.get("solutions")]
    report = AbductiveOracle().check_solutions(
        scenario_context.get("framework"),
        scenario_context.get("query"),
        contexts,
        SubsumptionType.MINIMAL,
    )
    assert report.equal, f"Engine and oracle differ: {report}"


@then("the reused and the fresh solutions should be equal")
def step_then_reused_equals_fresh(context):
    scenario_context = get_current_scenario_context(context)
    reused, fresh = scenario_context.get("reused"), scenario_context.get("fresh")
    assert fresh, "Expected at least one solution"
    assert sorted(map(str, reused)) == sorted(map(str, fresh)), f"{reused} != {fresh}"


@then('every solution should extend the context "{initial}" and a solution of "{prefix}" from it')
def step_then_solutions_extend_prefix(context, initial, prefix):
    scenario_context = get_current_scenario_context(context)
    start = parse_context(initial)
    query = parser.parse_query(prefix)
    partial = [solution.context for solution in _solver(scenario_context, query).solve(query, start)]
    solutions = scenario_context.get("solutions")
    assert solutions, "Expected at least one solution"
    for solution in solutions:
        assert start.issubset(solution.context), f"{solution.context} lost part of {start}"
        assert any(part.issubset(solution.context) for part in partial), f"{solution.context} extends none of {partial}"


@then("the constraint patterns should survive and the tables should have been emptied")
def step_then_patterns_survive(context):
    scenario_context = get_current_scenario_context(context)
    before, after = scenario_context.get("patterns")
    assert before, "Expected the setup to assert constraint patterns"
    assert before == after, f"{before} != {after}"
    assert scenario_context.get("abolished_entries") == 0


@then("the returned metrics should count inferences and table bytes")
def step_then_returned_metrics(context):
    scenario_context = get_current_scenario_context(context)
    metrics = scenario_context.get("metrics")
    assert metrics.inferences > 0, f"Got {metrics}"
    assert metrics.table_bytes > 0, f"Got {metrics}"
