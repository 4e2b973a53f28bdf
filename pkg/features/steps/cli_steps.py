import contextlib
import io
import json
import shlex
from unittest.mock import patch

from behave import given, then, when

from ablp.adapters.reporting.adapters import JsonLinesWriterAdapter
from ablp.cli import AbductionCli, main, report_check
from ablp.services.oracle import AbductiveOracle
from features.test_helpers import get_current_scenario_context, parse_context, parse_framework, parser


@given("the program file")
def step_given_program_file(context):
    scenario_context = get_current_scenario_context(context)
    scenario_context.store("program_text", context.text)
    scenario_context.store("program_path", scenario_context.write_program(context.text))


@given("a chain program of {depth:d} rules")
def step_given_chain_program(context, depth):
    scenario_context = get_current_scenario_context(context)
    rules = [f"p{level} :- p{level + 1}." for level in range(depth - 1)]
    text = "\n".join(["abducible a/0.", *rules, f"p{depth - 1} :- a.", ""])
    scenario_context.store("program_text", text)
    scenario_context.store("program_path", scenario_context.write_program(text))


def _run(scenario_context, command):
    argv = [arg.replace("{program}", scenario_context.get("program_path")) for arg in shlex.split(command)]
    stdout, stderr = io.StringIO(), io.StringIO()
    # Logging is configured inside main, so its handler binds to the redirected stream.
    with contextlib.redirect_stderr(stderr):
        status = main(argv, stdout=stdout, config=scenario_context.get("test_config"))
    scenario_context.store("status", status)
    scenario_context.store("output", stdout.getvalue())
    scenario_context.store("errors", stderr.getvalue())


@when('ablp is run with "{command}"')
def step_when_ablp_run(context, command):
    _run(get_current_scenario_context(context), command)


@when('ablp is run with "{command}" and transforming fails unexpectedly')
def step_when_ablp_run_with_unexpected_failure(context, command):
    with patch.object(AbductionCli, "cmd_transform", side_effect=RuntimeError("boom")):
        _run(get_current_scenario_context(context), command)


@when('the engine\'s answer "{answer}" for "{query}" is reported against the oracle')
def step_when_answer_reported(context, answer, query):
    scenario_context = get_current_scenario_context(context)
    framework = parse_framework(scenario_context.get("program_text"))
    report = AbductiveOracle().check_solutions(framework, parser.parse_query(query), [parse_context(answer)])
    stdout = io.StringIO()
    scenario_context.store("status", report_check(query, report, JsonLinesWriterAdapter(stdout)))
    scenario_context.store("output", stdout.getvalue())


@then("the exit status should be {status:d}")
def step_then_exit_status(context, status):
    scenario_context = get_current_scenario_context(context)
    actual = scenario_context.get("status")
    assert actual == status, f"Expected exit status {status}, got {actual}:\n{scenario_context.get('output')}"


@then('the output should contain "{text}"')
def step_then_output_contains(context, text):
    scenario_context = get_current_scenario_context(context)
    output = scenario_context.get("output")
    assert text in output.splitlines(), f"{text!r} not found in:\n{output}"


@then('the output should hold {count:d} solution with the context "{expected}"')
def step_then_solution_records(context, count, expected):
    scenario_context = get_current_scenario_context(context)
    records = [json.loads(line) for line in scenario_context.get("output").splitlines()]
    solutions = [record for record in records if record["type"] == "solution"]
    assert len(solutions) == count, f"Expected {count} solutions, got {solutions}"
    assert parse_context(", ".join(solutions[0]["context"])) == parse_context(expected)


@then('the output should end with a metrics line for "{query}"')
def step_then_metrics_record(context, query):
    scenario_context = get_current_scenario_context(context)
    last = json.loads(scenario_context.get("output").splitlines()[-1])
    assert last["type"] == "metrics"
    assert last["query"] == query
    assert last["inferences"] > 0


@then("the output should hold a CSV header and {count:d} rows")
def step_then_csv_output(context, count):
    scenario_context = get_current_scenario_context(context)
    lines = scenario_context.get("output").splitlines()
    assert lines[0].startswith("scenario,n,ic_mode")
    assert len(lines) == count + 1, f"Expected {count} rows, got {len(lines) - 1}"


@then('the error output should name "{code}" exactly once')
def step_then_error_output_once(context, code):
    scenario_context = get_current_scenario_context(context)
    errors = scenario_context.get("errors")
    assert errors.count(f"[{code}]") == 1, f"Expected one [{code}] in:\n{errors}"


@then('the error output should contain "{text}"')
def step_then_error_output_contains(context, text):
    scenario_context = get_current_scenario_context(context)
    errors = scenario_context.get("errors")
    assert text in errors, f"{text!r} not found in:\n{errors}"
