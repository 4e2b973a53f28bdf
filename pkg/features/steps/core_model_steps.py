import random

from behave import given, then, when

from ablp.adapters.table_store.adapters import InMemoryTableStoreAdapter
from ablp.configs.config_template import TableStoreConfig
from ablp.helpers.utils.context_utils import ContextUtils
from ablp.helpers.utils.unification_utils import UnificationUtils
from ablp.models.entities import Context, Int, Literal, Substitution, Var
from ablp.models.errors import BaseError
from ablp.models.types.subsumption_type import SubsumptionType
from features.test_helpers import get_current_scenario_context, parse_context, parser


@given('the input context "{text}"')
def step_given_input_context(context, text):
    scenario_context = get_current_scenario_context(context)
    scenario_context.store("input_context", parse_context(text))


@given('the answer context "{text}"')
def step_given_answer_context(context, text):
    scenario_context = get_current_scenario_context(context)
    scenario_context.store("answer_context", parse_context(text))


@given("the contexts")
def step_given_contexts(context):
    scenario_context = get_current_scenario_context(context)
    scenario_context.store("contexts", [parse_context(row["context"]) for row in context.table])


@when("the answer is merged into the input context")
def step_when_answer_merged(context):
    scenario_context = get_current_scenario_context(context)
    merged = ContextUtils.produce_context(scenario_context.get("input_context"), scenario_context.get("answer_context"))
    scenario_context.store("merged", merged)


@when('the abducible "{text}" is inserted')
def step_when_abducible_inserted(context, text):
    scenario_context = get_current_scenario_context(context)
    (literal,) = parser.parse_query(text)
    try:
        scenario_context.store("merged", ContextUtils.insert_abducible(literal, scenario_context.get("input_context")))
    except BaseError as error:
        scenario_context.store("error", error)


@when('a context is built from "{text}"')
def step_when_context_built(context, text):
    scenario_context = get_current_scenario_context(context)
    try:
        scenario_context.store("built", Context.of(parser.parse_query(text)))
    except BaseError as error:
        scenario_context.store("error", error)


@when('the pattern "{text}" is checked against it')
def step_when_pattern_checked(context, text):
    scenario_context = get_current_scenario_context(context)
    patterns = parser.parse_query(text)
    scenario_context.store("subset_check", ContextUtils.check_subset(patterns, scenario_context.get("input_context")))


@when('"{left}" is unified with "{right}"')
def step_when_unified(context, left, right):
    scenario_context = get_current_scenario_context(context)
    (first,) = parser.parse_query(left)
    (second,) = parser.parse_query(right)
    scenario_context.store("unifier", UnificationUtils.unify(first, second))


@when("the minimal antichain is computed")
def step_when_minimal_antichain(context):
    scenario_context = get_current_scenario_context(context)
    scenario_context.store("remaining", ContextUtils.minimal_antichain(scenario_context.get("contexts")))


@when("{count:d} random answers are inserted into one minimal table")
def step_when_random_minimal_inserts(context, count):
    scenario_context = get_current_scenario_context(context)
    rng = random.Random(11)
    pool = [Literal(name, (Int(value),)) for name in ("a", "b", "c") for value in range(3)]
    store = InMemoryTableStoreAdapter(TableStoreConfig())
    key = ("p_ab", (Int(0),))
    store.create(key)
    for _ in range(count):
        items = ContextUtils.sort_items(rng.sample(pool, rng.randint(1, 4)))
        store.insert(key, ((Int(0),), items), SubsumptionType.MINIMAL)
    scenario_context.store("stored", [frozenset(items) for _, items in store.answers(key)])


@when('the answer "{answer}" is stored for the call "{call}"')
def step_when_answer_stored(context, answer, call):
    scenario_context = get_current_scenario_context(context)
    (call_literal,) = parser.parse_query(call)
    store = InMemoryTableStoreAdapter(TableStoreConfig())
    key = (call_literal.predicate, call_literal.args)
    store.create(key)
    store.insert(key, (call_literal.args, parse_context(answer).literals), SubsumptionType.ALL)
    scenario_context.store("store", store)


@then('the merged context should be "{text}"')
def step_then_merged_context(context, text):
    scenario_context = get_current_scenario_context(context)
    merged = scenario_context.get("merged")
    assert merged == parse_context(text), f"Expected {text}, got {merged}"


@then("the merge should fail")
def step_then_merge_fails(context):
    scenario_context = get_current_scenario_context(context)
    assert scenario_context.get("merged") is None


@then('the built context should print as "{text}"')
def step_then_built_context_prints(context, text):
    scenario_context = get_current_scenario_context(context)
    assert str(scenario_context.get("built")) == text


@then("the subset check should be {result}")
def step_then_subset_check(context, result):
    scenario_context = get_current_scenario_context(context)
    assert scenario_context.get("subset_check") is (result == "true")


@then('"{name}" should be bound to "{value}"')
def step_then_bound(context, name, value):
    scenario_context = get_current_scenario_context(context)
    unifier = scenario_context.get("unifier")
    assert unifier is not None, "Expected a unifier"
    assert str(unifier[Var(name)]) == value


@then("unification should fail")
def step_then_unification_fails(context):
    scenario_context = get_current_scenario_context(context)
    assert scenario_context.get("unifier") is None


@then("the remaining contexts should be")
def step_then_remaining_contexts(context):
    scenario_context = get_current_scenario_context(context)
    expected = [parse_context(row["context"]) for row in context.table]
    assert scenario_context.get("remaining") == expected


@then("no stored answer should be a subset of another")
def step_then_antichain(context):
    scenario_context = get_current_scenario_context(context)
    stored = scenario_context.get("stored")
    assert stored, "Expected stored answers"
    for index, first in enumerate(stored):
        for second in stored[index + 1 :]:
            assert not first <= second and not second <= first, f"{set(first)} and {set(second)} are comparable"


@then("the table should use {size:d} bytes in {entries:d} entry")
def step_then_table_bytes(context, size, entries):
    scenario_context = get_current_scenario_context(context)
    store = scenario_context.get("store")
    assert store.table_bytes() == size
    assert store.entry_count() == entries


def _substitution(text):
    bindings = {}
    for pair in text.split(", "):
        name, value = pair.split("=", 1)
        (holder,) = parser.parse_query(f"t({value})")
        bindings[Var(name)] = holder.args[0]
    return Substitution(bindings)


@given('the substitution "{text}"')
def step_given_substitution(context, text):
    scenario_context = get_current_scenario_context(context)
    scenario_context.store("substitution", _substitution(text))


@when("the minimum-cardinality contexts are kept")
def step_when_minimum_cardinality(context):
    scenario_context = get_current_scenario_context(context)
    scenario_context.store("remaining", ContextUtils.minimum_cardinality(scenario_context.get("contexts")))


@when('it is composed with "{text}"')
def step_when_substitution_composed(context, text):
    scenario_context = get_current_scenario_context(context)
    scenario_context.store("substitution", scenario_context.get("substitution").compose(_substitution(text)))


@then('applying it to "{text}" should give "{expected}"')
def step_then_substitution_applied(context, text, expected):
    scenario_context = get_current_scenario_context(context)
    (literal,) = parser.parse_query(text)
    applied = scenario_context.get("substitution").apply(literal)
    assert str(applied) == expected, f"Expected {expected}, but got {applied}"


@then('the substitution should print as "{text}"')
def step_then_substitution_prints(context, text):
    scenario_context = get_current_scenario_context(context)
    assert str(scenario_context.get("substitution")) == text
