import io
from itertools import pairwise

from behave import given, then, when

from ablp.adapters.reporting.adapters import CsvBenchWriterAdapter
from ablp.configs.base_config import BaseConfig
from ablp.configs.config_template import EngineConfig
from ablp.models.errors import BaseError
from ablp.models.types.call_style_type import CallStyleType
from ablp.models.types.scenario_family_type import ScenarioFamilyType
from ablp.services.bench import build_family, run_family
from features.test_helpers import get_current_scenario_context


def _rows_by(rows, field, value):
    return {(row.n, row.query_index): row for row in rows if str(getattr(row, field)) == value}


def _run(context, family, n, **options):
    scenario_context = get_current_scenario_context(context)
    try:
        scenario_context.store("rows", run_family(ScenarioFamilyType(family), n, **options))
    except BaseError as error:
        scenario_context.store("error", error)


@given("the engine may take at most {steps:d} resolution steps")
def step_given_engine_budget(context, steps):
    scenario_context = get_current_scenario_context(context)
    config = scenario_context.get("test_config").model_copy(update={"ENGINE": EngineConfig(MAX_STEPS=steps)})
    BaseConfig.set_global(config)


@when('the "{family}" scenario of size {n:d} is generated')
def step_when_scenario_generated(context, family, n):
    scenario_context = get_current_scenario_context(context)
    scenario = build_family(ScenarioFamilyType(family), n)[-1]
    scenario_context.store("scenario", scenario)


@when('the "{family}" family of size {n:d} is run')
def step_when_family_run(context, family, n):
    _run(context, family, n)


@when('the "{family}" family of size {n:d} is run incrementally')
def step_when_family_run_incrementally(context, family, n):
    _run(context, family, n, call_style=CallStyleType.INCREMENTAL)


@when('the "{family}" family of size {n:d} is run with no modes')
def step_when_family_run_without_modes(context, family, n):
    _run(context, family, n, modes=[])


@when("the rows are written as CSV")
def step_when_rows_written(context):
    scenario_context = get_current_scenario_context(context)
    stream = io.StringIO()
    CsvBenchWriterAdapter(stream).write_rows(scenario_context.get("rows"))
    scenario_context.store("csv_lines", stream.getvalue().splitlines())


@then("the scenario framework should have {rules:d} rules, {abducibles:d} abducibles and {ics:d} constraints")
def step_then_scenario_counts(context, rules, abducibles, ics):
    scenario_context = get_current_scenario_context(context)
    framework = scenario_context.get("scenario").framework
    assert (len(framework.program), len(framework.abducibles), len(framework.ics)) == (rules, abducibles, ics)


@then('the scenario queries should be "{expected}"')
def step_then_scenario_queries(context, expected):
    scenario_context = get_current_scenario_context(context)
    assert "; ".join(scenario_context.get("scenario").queries) == expected


@then("there should be {count:d} rows without errors")
def step_then_rows_without_errors(context, count):
    scenario_context = get_current_scenario_context(context)
    rows = scenario_context.get("rows")
    assert len(rows) == count, f"Expected {count} rows, got {len(rows)}"
    failed = [row for row in rows if row.error]
    assert not failed, f"Rows with errors: {failed}"


@then("there should be {count:d} rows")
def step_then_rows(context, count):
    scenario_context = get_current_scenario_context(context)
    assert len(scenario_context.get("rows")) == count


@then('every row should record the error "{code}"')
def step_then_rows_record_error(context, code):
    scenario_context = get_current_scenario_context(context)
    assert all(row.error == code for row in scenario_context.get("rows"))


@then('for every query "{lower}" tabling should use fewer table bytes than "{higher}" tabling')
def step_then_fewer_bytes_per_query(context, lower, higher):
    scenario_context = get_current_scenario_context(context)
    rows = scenario_context.get("rows")
    cheap, costly = _rows_by(rows, "tabling_mode", lower), _rows_by(rows, "tabling_mode", higher)
    assert cheap.keys() == costly.keys()
    for key, row in cheap.items():
        other = costly[key].table_bytes
        assert row.table_bytes < other, f"Query {key[1]}: {row.table_bytes} >= {other}"


@then("the table-byte gap between the tabling modes should not shrink as queries grow")
def step_then_gap_grows(context):
    scenario_context = get_current_scenario_context(context)
    rows = scenario_context.get("rows")
    reduce_rows, normal_rows = _rows_by(rows, "tabling_mode", "reduce"), _rows_by(rows, "tabling_mode", "normal")
    gaps = [normal_rows[key].table_bytes - reduce_rows[key].table_bytes for key in sorted(normal_rows)]
    assert gaps == sorted(gaps), f"Gaps shrink: {gaps}"


@then('query {index:d} should take {relation} inferences under "{first}" tabling than under "{second}" tabling')
def step_then_inference_relation(context, index, relation, first, second):
    scenario_context = get_current_scenario_context(context)
    rows = scenario_context.get("rows")
    (left,) = [row for row in rows if row.query_index == index and str(row.tabling_mode) == first]
    (right,) = [row for row in rows if row.query_index == index and str(row.tabling_mode) == second]
    if relation == "fewer":
        assert left.inferences < right.inferences, f"{left.inferences} >= {right.inferences}"
    else:
        assert left.inferences > right.inferences, f"{left.inferences} <= {right.inferences}"


@then('for every size "{lower}" constraints should use no more table bytes than "{higher}" constraints')
def step_then_no_more_bytes_per_size(context, lower, higher):
    scenario_context = get_current_scenario_context(context)
    rows = scenario_context.get("rows")
    cheap, costly = _rows_by(rows, "ic_mode", lower), _rows_by(rows, "ic_mode", higher)
    assert cheap.keys() == costly.keys()
    for key, row in cheap.items():
        other = costly[key].table_bytes
        assert row.table_bytes <= other, f"Size {key[0]}: {row.table_bytes} > {other}"


@then('for every query "{lower}" tabling should take no more inferences than "{higher}" tabling')
def step_then_no_more_inferences_per_query(context, lower, higher):
    scenario_context = get_current_scenario_context(context)
    rows = scenario_context.get("rows")
    cheap, costly = _rows_by(rows, "tabling_mode", lower), _rows_by(rows, "tabling_mode", higher)
    assert cheap.keys() == costly.keys()
    for key, row in cheap.items():
        other = costly[key].inferences
        assert row.inferences <= other, f"Query {key[1]}: {row.inferences} > {other}"


@then('from some query on "{first}" tabling should take more inferences than "{second}" tabling')
def step_then_inference_crossover(context, first, second):
    scenario_context = get_current_scenario_context(context)
    rows = scenario_context.get("rows")
    left, right = _rows_by(rows, "tabling_mode", first), _rows_by(rows, "tabling_mode", second)
    more = [left[key].inferences > right[key].inferences for key in sorted(left)]
    # Smallest index from which every later query is more expensive.
    crossover = next((index for index in range(len(more)) if all(more[index:])), None)
    assert crossover is not None, f"No crossover: {more}"
    assert crossover > 0, f"{first} tabling is more expensive from the first query on: {more}"


@then(
    'the inference gap between "{first}" and "{second}" constraints'
    " should strictly grow with the size and change sign",
)
def step_then_inference_gap_changes_sign(context, first, second):
    scenario_context = get_current_scenario_context(context)
    rows = scenario_context.get("rows")
    left, right = _rows_by(rows, "ic_mode", first), _rows_by(rows, "ic_mode", second)
    gaps = [left[key].inferences - right[key].inferences for key in sorted(left)]
    assert all(low < high for low, high in pairwise(gaps)), f"Gaps do not strictly grow: {gaps}"
    assert gaps[0] < 0 < gaps[-1], f"Gaps do not change sign: {gaps}"


@then("every mode should have a row for every query")
def step_then_rows_cover_modes(context):
    scenario_context = get_current_scenario_context(context)
    rows = scenario_context.get("rows")
    indices = {row.query_index for row in rows}
    modes = {(row.ic_mode, row.tabling_mode) for row in rows}
    assert len(modes) == 4, f"Expected 4 modes, got {modes}"
    assert len(rows) == len(modes) * len(indices)


@then("the CSV output should only hold the header")
def step_then_csv_header_only(context):
    scenario_context = get_current_scenario_context(context)
    assert len(scenario_context.get("csv_lines")) == 1


@then('the CSV header should be "{header}"')
def step_then_csv_header(context, header):
    scenario_context = get_current_scenario_context(context)
    assert scenario_context.get("csv_lines")[0] == header


@then("the CSV output should hold {count:d} data rows")
def step_then_csv_rows(context, count):
    scenario_context = get_current_scenario_context(context)
    assert len(scenario_context.get("csv_lines")) == count + 1
