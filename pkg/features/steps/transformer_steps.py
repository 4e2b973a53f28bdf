from behave import given, then, when

from ablp.models.dtos.options_dtos import TransformOptionsDTO
from ablp.models.entities import AbductiveFramework
from ablp.models.errors import BaseError
from ablp.models.types.ic_mode_type import ICModeType
from ablp.models.types.tabling_mode_type import TablingModeType
from ablp.services.bench import ALL_MODES, gen_random
from ablp.services.transformer import check_size_bound, transform_program, transform_query
from features.test_helpers import get_current_scenario_context, parse_context, parser


def _transform(scenario_context, ic_mode: str, tabling: str):
    options = TransformOptionsDTO(ic_mode=ICModeType(ic_mode), tabling_mode=TablingModeType(tabling))
    return transform_program(scenario_context.get("framework"), options)


@given("an empty abductive program")
def step_given_empty_program(context):
    scenario_context = get_current_scenario_context(context)
    scenario_context.store("framework", AbductiveFramework())


@when('the program is transformed with "{ic_mode}" constraints and "{tabling}" tabling')
def step_when_program_transformed(context, ic_mode, tabling):
    scenario_context = get_current_scenario_context(context)
    try:
        program = _transform(scenario_context, ic_mode, tabling)
        scenario_context.store("program", program)
        scenario_context.store("size_bound", check_size_bound(scenario_context.get("framework"), program))
    except BaseError as error:
        scenario_context.store("error", error)


@when('the program is transformed twice with "{ic_mode}" constraints and "{tabling}" tabling')
def step_when_program_transformed_twice(context, ic_mode, tabling):
    scenario_context = get_current_scenario_context(context)
    printed = [_transform(scenario_context, ic_mode, tabling).pretty() for _ in range(2)]
    scenario_context.store("printed", printed)


@when('the query "{text}" is transformed for "{ic_mode}" constraints')
def step_when_query_transformed(context, text, ic_mode):
    scenario_context = get_current_scenario_context(context)
    scenario_context.store("transformed_query", transform_query(parser.parse_query(text), ICModeType(ic_mode)))


@when('the query "{text}" is transformed for "{ic_mode}" constraints from the context "{initial}"')
def step_when_query_transformed_from_context(context, text, ic_mode, initial):
    scenario_context = get_current_scenario_context(context)
    transformed = transform_query(parser.parse_query(text), ICModeType(ic_mode), parse_context(initial))
    scenario_context.store("transformed_query", transformed)


@when("{count:d} random frameworks are transformed under every mode")
def step_when_random_frameworks_transformed(context, count):
    scenario_context = get_current_scenario_context(context)
    reports = []
    for seed in range(count):
        framework = gen_random(seed)
        for mode in ALL_MODES:
            options = TransformOptionsDTO(ic_mode=mode.ic_mode, tabling_mode=mode.tabling_mode)
            report = check_size_bound(framework, transform_program(framework, options))
            reports.append((seed, mode, report))
    scenario_context.store("reports", reports)


@then("the transformed program should contain the rules")
def step_then_program_contains_rules(context):
    scenario_context = get_current_scenario_context(context)
    printed = {str(rule) for rule in scenario_context.get("program").all_rules()}
    for row in context.table:
        assert row["rule"] in printed, f"Missing rule {row['rule']}"


@then('"{name}" should be a dual predicate')
def step_then_dual_predicate(context, name):
    scenario_context = get_current_scenario_context(context)
    assert name in scenario_context.get("program").dual_predicates


@then('the transformed program should not define "{name}" with arity {arity:d}')
def step_then_not_defined(context, name, arity):
    scenario_context = get_current_scenario_context(context)
    assert not scenario_context.get("program").defines(name, arity)


@then('the tabled predicates should be "{expected}"')
def step_then_tabled_predicates(context, expected):
    scenario_context = get_current_scenario_context(context)
    tabled = ", ".join(f"{name}/{arity}" for name, arity in sorted(scenario_context.get("program").tabling_set))
    assert tabled == expected, f"Expected {expected}, got {tabled}"


@then("the size bound should report lhs {lhs:d} and rhs {rhs:d}")
def step_then_size_bound(context, lhs, rhs):
    scenario_context = get_current_scenario_context(context)
    report = scenario_context.get("size_bound")
    assert (report.lhs, report.rhs) == (lhs, rhs), f"Expected lhs={lhs} rhs={rhs}, got {report}"


@then("the size bound should hold")
def step_then_size_bound_holds(context):
    scenario_context = get_current_scenario_context(context)
    assert scenario_context.get("size_bound").holds


@then("the size bound should not hold")
def step_then_size_bound_fails(context):
    scenario_context = get_current_scenario_context(context)
    assert not scenario_context.get("size_bound").holds


@then("the size bound with constraints should report rhs {rhs:d}")
def step_then_size_bound_with_ics(context, rhs):
    scenario_context = get_current_scenario_context(context)
    assert scenario_context.get("size_bound").rhs_with_ics == rhs


@then("the size bound with constraints should hold")
def step_then_size_bound_with_ics_holds(context):
    scenario_context = get_current_scenario_context(context)
    assert scenario_context.get("size_bound").holds_with_ics


@then(
    "every subcheck program should keep the size bound without constraints"
    " and every dual program the size bound with constraints",
)
def step_then_random_size_bounds(context):
    scenario_context = get_current_scenario_context(context)
    for seed, mode, report in scenario_context.get("reports"):
        holds = report.holds if mode.ic_mode is ICModeType.SUBCHECK else report.holds_with_ics
        if not holds:
            program = parser.pretty_print(gen_random(seed))
            raise AssertionError(f"Seed {seed} under {mode.label} exceeds the bound: {report}\n{program}")


@then("both printed programs should be identical")
def step_then_printed_identical(context):
    scenario_context = get_current_scenario_context(context)
    first, second = scenario_context.get("printed")
    assert first == second


@then('the query goals should print as "{expected}"')
def step_then_query_goals(context, expected):
    scenario_context = get_current_scenario_context(context)
    goals = ", ".join(str(goal) for goal in scenario_context.get("transformed_query").goals)
    assert goals == expected, f"Expected {expected}, got {goals}"
