import random

from ablp.models.dtos.bench_dtos import ModeDTO, RandomProgramParamsDTO
from ablp.models.entities import (
    AbductiveFramework,
    Int,
    IntegrityConstraint,
    Literal,
    PredicateKey,
    Rule,
    Scenario,
    Term,
    Var,
)
from ablp.models.errors import InvalidArgumentError
from ablp.models.types.ic_mode_type import ICModeType
from ablp.models.types.scenario_family_type import ScenarioFamilyType
from ablp.models.types.tabling_mode_type import TablingModeType

ONE = Int(1)
X = Var("X")

EXP1_MODES = (
    ModeDTO(ic_mode=ICModeType.SUBCHECK, tabling_mode=TablingModeType.NORMAL),
    ModeDTO(ic_mode=ICModeType.SUBCHECK, tabling_mode=TablingModeType.REDUCE),
)
EXP3_MODES = (
    ModeDTO(ic_mode=ICModeType.DUAL, tabling_mode=TablingModeType.NORMAL),
    ModeDTO(ic_mode=ICModeType.SUBCHECK, tabling_mode=TablingModeType.NORMAL),
)
ALL_MODES = tuple(
    ModeDTO(ic_mode=ic_mode, tabling_mode=tabling_mode) for ic_mode in ICModeType for tabling_mode in TablingModeType
)


def _require_positive(n: int) -> None:
    if n < 1:
        raise InvalidArgumentError(argument_name="n", additional_data={"n": n})


def gen_exp1(n: int) -> Scenario:
    """Builds the reduced-tabling family of size ``n``.

    ``p_i(X)`` needs the abducibles ``a_1 .. a_i`` and the facts ``b_1 .. b_i``; ``q_i(X)``
    needs ``p_1 .. p_i``. The queries ``q_1(1) .. q_n(1)`` grow in cost with ``i``.
    """
    _require_positive(n)
    facts = [Rule(Literal(f"b_{index}", (ONE,))) for index in range(1, n + 1)]
    p_rules = [
        Rule(
            Literal(f"p_{index}", (X,)),
            tuple(Literal(f"a_{inner}", (X,)) for inner in range(1, index + 1))
            + tuple(Literal(f"b_{inner}", (X,)) for inner in range(1, index + 1)),
        )
        for index in range(1, n + 1)
    ]
    q_rules = [
        Rule(Literal(f"q_{index}", (X,)), tuple(Literal(f"p_{inner}", (X,)) for inner in range(1, index + 1)))
        for index in range(1, n + 1)
    ]
    abducibles = tuple((f"a_{index}", 1) for index in range(1, n + 1))
    framework = AbductiveFramework(
        program=(*facts, *p_rules, *q_rules),
        abducibles=frozenset(abducibles),
        abducible_order=abducibles,
    )
    return Scenario(
        name=ScenarioFamilyType.EXP1.value,
        n=n,
        framework=framework,
        queries=tuple(f"q_{index}(1)" for index in range(1, n + 1)),
        modes=EXP1_MODES,
    )


def gen_exp3(n: int) -> Scenario:
    """Builds the integrity-constraint family of size ``n``.

    ``r`` has one clause abducing ``a(1) .. a(n)`` with ``not q(1) .. not q(n)`` and one
    going through ``p(1) .. p(n)``; the constraint ``ic :- p(X), not q(X).`` rejects
    contexts where some ``p(i)`` holds without ``q(i)``. The query is ``r, t(1), .., t(n)``.
    """
    _require_positive(n)
    constants = [Int(index) for index in range(1, n + 1)]
    program = (
        Rule(Literal("p", (X,)), (Literal("a", (X,)),)),
        Rule(Literal("q", (X,)), (Literal("b", (X,)),)),
        Rule(Literal("t", (X,)), (Literal("c", (X,)),)),
        Rule(
            Literal("r"),
            tuple(Literal("a", (constant,)) for constant in constants)
            + tuple(Literal("q", (constant,), positive=False) for constant in constants),
        ),
        Rule(Literal("r"), tuple(Literal("p", (constant,)) for constant in constants)),
    )
    abducibles: tuple[PredicateKey, ...] = (("a", 1), ("b", 1), ("c", 1))
    framework = AbductiveFramework(
        program=program,
        abducibles=frozenset(abducibles),
        ics=(IntegrityConstraint((Literal("p", (X,)), Literal("q", (X,), positive=False))),),
        abducible_order=abducibles,
    )
    query = ", ".join(["r", *(f"t({index})" for index in range(1, n + 1))])
    return Scenario(
        name=ScenarioFamilyType.EXP3.value,
        n=n,
        framework=framework,
        queries=(query,),
        modes=EXP3_MODES,
    )


class RandomFrameworkGenerator:
    """Seeded generator of small stratified frameworks.

    Predicates ``p0 .. pk`` may only call predicates with a higher index and abducibles
    ``a0 .. am``, so programs are acyclic. Arities are 0 or 1, constants are the integers
    ``0 .. constants - 1`` and body variables always occur in the head, so every call made
    for a ground query is ground. Constraints never outnumber the non-fact rules, and now
    and then a body calls the predicate ``u0`` that has no rules.

    Args:
        params (RandomProgramParamsDTO, optional): Size limits. Defaults to
            ``RandomProgramParamsDTO()``.
    """

    def __init__(self, params: RandomProgramParamsDTO | None = None) -> None:
        self._params = params or RandomProgramParamsDTO()

    def generate(self, seed: int) -> AbductiveFramework:
        rng = random.Random(seed)
        params = self._params
        constants: list[Term] = [Int(value) for value in range(params.constants)]
        predicates = [(f"p{index}", rng.randint(0, 1)) for index in range(rng.randint(1, params.max_predicates))]
        abducibles = [(f"a{index}", rng.randint(0, 1)) for index in range(rng.randint(1, params.max_abducibles))]
        undefined = [("u0", rng.randint(0, 1))] if rng.random() < 0.2 else []

        program: list[Rule] = []
        for position, (name, arity) in enumerate(predicates):
            callable_keys = abducibles + undefined + predicates[position + 1 :]
            for _ in range(rng.randint(1, params.max_rules)):
                head_args: tuple[Term, ...] = ()
                if arity:
                    head_args = (X,) if rng.random() < 0.7 else (rng.choice(constants),)
                body = tuple(
                    self._literal(rng, rng.choice(callable_keys), head_args, constants)
                    for _ in range(rng.randint(0, params.max_body))
                )
                program.append(Rule(Literal(name, head_args), body))

        non_facts = sum(1 for rule in program if not rule.is_fact)
        all_keys = abducibles + undefined + predicates
        ics = []
        for _ in range(rng.randint(0, min(params.max_ics, non_facts))):
            scope: tuple[Term, ...] = (X,) if rng.random() < 0.5 else ()
            body = tuple(
                self._literal(rng, rng.choice(all_keys), scope, constants)
                for _ in range(rng.randint(1, params.max_body))
            )
            ics.append(IntegrityConstraint(body))
        return AbductiveFramework(
            program=tuple(program),
            abducibles=frozenset(abducibles),
            ics=tuple(ics),
            abducible_order=tuple(abducibles),
        )

    def query_for(self, seed: int, framework: AbductiveFramework) -> tuple[Literal, ...]:
        """A ground query of one or two literals over the framework's defined predicates."""
        rng = random.Random(seed * 7919 + 1)
        constants = [Int(value) for value in range(self._params.constants)]
        keys = list(framework.defined_predicates)
        literals = []
        for _ in range(rng.randint(1, 2)):
            name, arity = rng.choice(keys)
            args = (rng.choice(constants),) if arity else ()
            literals.append(Literal(name, args, positive=rng.random() < 0.8))
        return tuple(dict.fromkeys(literals))

    @staticmethod
    def _literal(rng: random.Random, key: PredicateKey, scope: tuple[Term, ...], constants: list[Term]) -> Literal:
        name, arity = key
        args: tuple[Term, ...] = ()
        if arity:
            candidates = [*scope, *constants]
            args = (rng.choice(candidates),)
        return Literal(name, args, positive=rng.random() < 0.7)


def gen_random(seed: int, params: RandomProgramParamsDTO | None = None) -> AbductiveFramework:
    """Deterministic pseudorandom framework; the same seed and limits give the same framework."""
    return RandomFrameworkGenerator(params).generate(seed)


def build_corpus(
    count: int,
    seed: int,
    params: RandomProgramParamsDTO | None = None,
) -> list[tuple[AbductiveFramework, tuple[Literal, ...]]]:
    """Frameworks with one ground query each, for comparing the engine with the oracle."""
    generator = RandomFrameworkGenerator(params)
    corpus = []
    for offset in range(count):
        framework = generator.generate(seed + offset)
        corpus.append((framework, generator.query_for(seed + offset, framework)))
    return corpus
