from behave import then, when

from ablp.models.entities import SourceProgram
from ablp.models.errors import BaseError
from ablp.services.bench import gen_random
from features.test_helpers import get_current_scenario_context, parse_framework, parser


@when("the program is parsed")
def step_when_program_parsed(context):
    scenario_context = get_current_scenario_context(context)
    try:
        framework = parser.parse_program(SourceProgram(scenario_context.get("program_text")))
        scenario_context.store("framework", framework)
    except BaseError as error:
        scenario_context.store("error", error)


@when('the query "{text}" is parsed')
def step_when_query_parsed(context, text):
    scenario_context = get_current_scenario_context(context)
    scenario_context.store("parsed_query", parser.parse_query(text))


@when('the context "{text}" is parsed')
def step_when_context_parsed(context, text):
    scenario_context = get_current_scenario_context(context)
    scenario_context.store("parsed_context", parser.parse_context(text))


@when("the framework is pretty printed and parsed again")
def step_when_round_trip(context):
    scenario_context = get_current_scenario_context(context)
    text = parser.pretty_print(scenario_context.get("framework"))
    scenario_context.store("reparsed", parse_framework(text))


@when("{count:d} random frameworks are pretty printed and parsed again")
def step_when_random_round_trips(context, count):
    scenario_context = get_current_scenario_context(context)
    pairs = []
    for seed in range(count):
        framework = gen_random(seed)
        pairs.append((framework, parse_framework(parser.pretty_print(framework))))
    scenario_context.store("round_trips", pairs)


@then("the framework should have {rules:d} rules, {abducibles:d} abducibles and {ics:d} constraints")
def step_then_framework_counts(context, rules, abducibles, ics):
    scenario_context = get_current_scenario_context(context)
    framework = scenario_context.get("framework")
    assert len(framework.program) == rules
    assert len(framework.abducibles) == abducibles
    assert len(framework.ics) == ics


@then("the framework size should be {size:d}")
def step_then_framework_size(context, size):
    scenario_context = get_current_scenario_context(context)
    assert scenario_context.get("framework").size == size


@then("the error should point at line {line:d}")
def step_then_error_line(context, line):
    scenario_context = get_current_scenario_context(context)
    error = scenario_context.get("error")
    assert error.line == line, f"Expected line {line}, got {error.line}"
    assert error.column is not None


@then('the parsed query should print as "{text}"')
def step_then_query_prints(context, text):
    scenario_context = get_current_scenario_context(context)
    assert ", ".join(str(literal) for literal in scenario_context.get("parsed_query")) == text


@then("the parsed context should be empty")
def step_then_context_empty(context):
    scenario_context = get_current_scenario_context(context)
    assert len(scenario_context.get("parsed_context")) == 0


@then("the parsed framework should equal the original")
def step_then_round_trip_equal(context):
    scenario_context = get_current_scenario_context(context)
    assert scenario_context.get("reparsed") == scenario_context.get("framework")


@then("every parsed framework should equal its original")
def step_then_random_round_trips_equal(context):
    scenario_context = get_current_scenario_context(context)
    for original, reparsed in scenario_context.get("round_trips"):
        assert reparsed == original, f"Round trip changed:\n{parser.pretty_print(original)}"
