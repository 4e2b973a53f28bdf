from behave import given, then, when

from ablp.configs.config_template import OracleConfig
from ablp.helpers.utils.program_utils import ProgramUtils
from ablp.models.dtos.options_dtos import EngineOptionsDTO, TransformOptionsDTO
from ablp.models.errors import BaseError
from ablp.models.types.ic_mode_type import ICModeType
from ablp.models.types.semantics_type import SemanticsType
from ablp.models.types.subsumption_type import SubsumptionType
from ablp.models.types.tabling_mode_type import TablingModeType
from ablp.models.types.truth_value_type import TruthValueType
from ablp.services.bench import build_corpus
from ablp.services.engine import AbductiveSolver
from ablp.services.oracle import AbductiveOracle, ground_program, wfm
from ablp.services.transformer import transform_program
from features.test_helpers import get_current_scenario_context, parse_context, parser


def _oracle(scenario_context) -> AbductiveOracle:
    return AbductiveOracle(scenario_context.get("oracle_config") or OracleConfig())


def _minimal_engine_contexts(framework, query, tabling=TablingModeType.NORMAL):
    options = TransformOptionsDTO(ic_mode=ICModeType.SUBCHECK, tabling_mode=tabling)
    solver = AbductiveSolver(
        transform_program(framework, options),
        EngineOptionsDTO.matching(options, subsumption=SubsumptionType.MINIMAL),
        constants=tuple(ProgramUtils.constants_of(query)),
    )
    return [solution.context for solution in solver.solve(query)]


@given("the oracle may try at most {limit:d} candidates")
def step_given_oracle_limit(context, limit):
    scenario_context = get_current_scenario_context(context)
    scenario_context.store("oracle_config", OracleConfig(MAX_CANDIDATES=limit))


@when('the oracle enumerates the "{semantics}" solutions of "{query}" keeping "{minimality}" ones')
def step_when_oracle_enumerates(context, semantics, query, minimality):
    scenario_context = get_current_scenario_context(context)
    try:
        solutions = _oracle(scenario_context).enumerate_solutions(
            scenario_context.get("framework"),
            parser.parse_query(query),
            SemanticsType(semantics),
            SubsumptionType(minimality),
        )
        scenario_context.store("oracle_solutions", solutions)
    except BaseError as error:
        scenario_context.store("error", error)


@when('the minimal engine solutions of "{query}" are checked against the oracle')
def step_when_engine_checked(context, query):
    scenario_context = get_current_scenario_context(context)
    framework = scenario_context.get("framework")
    literals = parser.parse_query(query)
    contexts = _minimal_engine_contexts(framework, literals)
    scenario_context.store("report", _oracle(scenario_context).check_solutions(framework, literals, contexts))


@when('the contexts below are checked against the oracle for "{query}"')
def step_when_contexts_checked(context, query):
    scenario_context = get_current_scenario_context(context)
    contexts = [parse_context(row["context"]) for row in context.table]
    report = _oracle(scenario_context).check_solutions(
        scenario_context.get("framework"),
        parser.parse_query(query),
        contexts,
    )
    scenario_context.store("report", report)


@when('the well-founded model is computed for the query "{query}"')
def step_when_wfm_computed(context, query):
    scenario_context = get_current_scenario_context(context)
    ground = ground_program(scenario_context.get("framework"), parser.parse_query(query))
    scenario_context.store("model", wfm(ground.rules))


@when('the corpus of {count:d} frameworks from seed {seed:d} is solved with "{tabling}" tabling')
def step_when_corpus_solved(context, count, seed, tabling):
    scenario_context = get_current_scenario_context(context)
    oracle = _oracle(scenario_context)
    mismatches = []
    for index, (framework, query) in enumerate(build_corpus(count, seed)):
        contexts = _minimal_engine_contexts(framework, query, TablingModeType(tabling))
        report = oracle.check_solutions(framework, query, contexts, SubsumptionType.MINIMAL)
        if not report.equal:
            mismatches.append((seed + index, query, report))
    scenario_context.store("mismatches", mismatches)


@then("the oracle solutions should be")
def step_then_oracle_solutions(context):
    scenario_context = get_current_scenario_context(context)
    found = sorted(str(solution) for solution in scenario_context.get("oracle_solutions"))
    expected = sorted(str(parse_context(row["context"])) for row in context.table)
    assert found == expected, f"Expected {expected}, got {found}"


@then("the check should report no difference")
def step_then_check_equal(context):
    scenario_context = get_current_scenario_context(context)
    report = scenario_context.get("report")
    assert report.equal, f"Engine and oracle differ: {report}"


@then("the check should report {missing:d} missing and {unexpected:d} unexpected context")
def step_then_check_counts(context, missing, unexpected):
    scenario_context = get_current_scenario_context(context)
    report = scenario_context.get("report")
    assert not report.equal
    assert (len(report.missing), len(report.unexpected)) == (missing, unexpected), f"Got {report}"


@then('the missing contexts should include "{text}"')
def step_then_missing_includes(context, text):
    scenario_context = get_current_scenario_context(context)
    assert text in scenario_context.get("report").missing


@then("the atoms should have the truth values")
def step_then_truth_values(context):
    scenario_context = get_current_scenario_context(context)
    model = scenario_context.get("model")
    for row in context.table:
        (atom,) = parser.parse_query(row["atom"])
        value = model.value(atom)
        assert value is TruthValueType[row["value"].upper()], f"{atom} is {value.name.lower()}"


@then("every minimal engine solution set should equal the oracle's")
def step_then_corpus_equal(context):
    scenario_context = get_current_scenario_context(context)
    mismatches = scenario_context.get("mismatches")
    details = "\n".join(
        f"seed {seed} query {', '.join(map(str, query))}: {report}" for seed, query, report in mismatches
    )
    assert not mismatches, f"{len(mismatches)} frameworks disagree:\n{details}"
