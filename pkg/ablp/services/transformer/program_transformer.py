import logging
from collections.abc import Sequence
from typing import NamedTuple

from ablp.helpers.decorators.timing import timing_decorator
from ablp.helpers.utils.program_utils import ProgramUtils
from ablp.models.dtos.options_dtos import TransformOptionsDTO
from ablp.models.dtos.report_dtos import ElisionReportDTO, SizeBoundReportDTO
from ablp.models.entities import (
    AbductiveFramework,
    Context,
    ContextTerm,
    IntegrityConstraint,
    Literal,
    PredicateKey,
    Rule,
    Term,
    TermList,
    TransformedProgram,
    Var,
)
from ablp.models.errors import TransformFailedError
from ablp.models.types.ic_mode_type import ICModeType
from ablp.models.types.system_predicate_type import SystemPredicateType
from ablp.models.types.tabling_mode_type import TablingModeType
from ablp.services.transformer.elision import ConstantElision
from ablp.services.transformer.naming import (
    FALSE_PREDICATE,
    alternative_name,
    dual_name,
    ic_alternative_name,
    setup_name,
    tabled_name,
)

logger = logging.getLogger(__name__)

EMPTY_CONTEXT = ContextTerm(())


class TransformedQuery(NamedTuple):
    """Goals to run for a query and the term holding the solution context afterwards."""

    goals: tuple[Literal, ...]
    output: Term


def _produce_context(output: Term, initial: Term, extra: Term) -> Literal:
    return Literal(SystemPredicateType.PRODUCE_CONTEXT.value, (output, initial, extra))


def _abducible_list(literals: Sequence[Literal]) -> ContextTerm:
    return ContextTerm(tuple(dict.fromkeys(literals)))


class ProgramTransformer:
    """Compiles an abductive framework into a tabled, dualized program.

    Every predicate ``p`` becomes context-threaded: ``p(args, I, O)`` holds when ``p(args)``
    is explained by extending the input context I to O. Tabled predicates store their
    explanations once in ``p_ab(args, E)`` tables and splice them into callers' contexts
    with ``produce_context``. Negation is compiled into dual rules ``not_p`` built from the
    falsification alternatives ``p*i`` of each rule.

    Args:
        options (TransformOptionsDTO, optional): Modes of the transformation.
            Defaults to ``TransformOptionsDTO()``.

    Examples:
        >>> transformer = ProgramTransformer(TransformOptionsDTO(ic_mode=ICModeType.DUAL))
        >>> program = transformer.transform_program(framework)
        >>> print(program.pretty())
    """

    def __init__(self, options: TransformOptionsDTO | None = None) -> None:
        self._options = options or TransformOptionsDTO()

    @property
    def options(self) -> TransformOptionsDTO:
        return self._options

    @timing_decorator
    def transform_program(self, framework: AbductiveFramework) -> TransformedProgram:
        """Runs every pass and assembles the transformed program.

        Raises:
            TransformFailedError: If a generated predicate name collides with a source predicate.
        """
        elision = ElisionReportDTO()
        if self._options.elide_constants:
            elision = ConstantElision.plan(framework)
            framework = ConstantElision.apply(framework, elision)
        self._check_generated_names(framework)

        tabling_set = self.select_tabled_predicates(framework, self._options.tabling_mode)
        tabled: list[Rule] = []
        reuse: list[Rule] = []
        direct: list[Rule] = []
        dual: list[Rule] = []
        dual_predicates: set[str] = set()

        for key in framework.defined_predicates:
            rules = framework.rules_for(key)
            if key in tabling_set:
                for rule in rules:
                    tabled_rule, reuse_rule = self.transform_rule_tabling(rule, framework)
                    tabled.append(tabled_rule)
                reuse.append(reuse_rule)
            else:
                direct.extend(self.transform_rule_direct(rule, framework) for rule in rules)
            dual.extend(self.transform_dual(key, rules))
            dual_predicates.add(dual_name(key[0]))
            dual_predicates.update(alternative_name(key[0], index) for index in range(1, len(rules) + 1))
        for key in framework.undefined_predicates:
            dual.extend(self.transform_dual(key, ()))
            dual_predicates.add(dual_name(key[0]))

        abducible_rules: list[Rule] = []
        for key in framework.abducible_order:
            abducible_rules.extend(self.transform_abducible(key))

        if self._options.ic_mode is ICModeType.DUAL:
            ic_rules = self.transform_ics_dual(framework.ics)
            dual_predicates.update(ic_alternative_name(index) for index in range(1, len(framework.ics) + 1))
            dual_predicates.add(SystemPredicateType.NOT_FALSE.value)
        else:
            ic_rules = self.transform_ics_subcheck(framework.ics, framework)

        program = TransformedProgram(
            tabled_rules=tuple(tabled),
            reuse_rules=tuple(reuse),
            direct_rules=tuple(direct),
            dual_rules=tuple(dual),
            abducible_rules=tuple(abducible_rules),
            ic_rules=tuple(ic_rules),
            tabling_set=tabling_set,
            ic_mode=self._options.ic_mode,
            options=self._options,
            source=framework,
            dual_predicates=frozenset(dual_predicates),
            elision=elision,
        )
        logger.debug(
            "Transformed %d source rules into %d rules, tabling %s",
            len(framework.program),
            sum(1 for _ in program.all_rules()),
            sorted(ProgramUtils.label(key) for key in tabling_set),
        )
        return program

    @staticmethod
    def select_tabled_predicates(framework: AbductiveFramework, mode: TablingModeType) -> frozenset[PredicateKey]:
        """Chooses the predicates evaluated through tables.

        In reduce mode a predicate is left untabled when each of its rules has a body made
        only of abducible literals and positive literals of fact-defined predicates.
        """
        defined = framework.defined_predicates
        if mode is TablingModeType.NORMAL:
            return frozenset(defined)

        def trivial(literal: Literal) -> bool:
            return framework.is_abducible(literal) or (literal.positive and framework.is_fact_defined(literal.key))

        return frozenset(
            key
            for key in defined
            if not all(all(trivial(literal) for literal in rule.body) for rule in framework.rules_for(key))
        )

    def transform_rule_tabling(self, rule: Rule, framework: AbductiveFramework) -> tuple[Rule, Rule]:
        """Builds the tabled rule of ``rule`` and the reuse rule of its predicate.

        Abducibles of the body are collected up front into the initial context of the
        threaded non-abducible goals, so ``p(X) :- q(0), s(X)`` with abducible ``q`` becomes
        ``p_ab(X, O) :- s(X, [q(0)], O)``.
        """
        abducibles, others = self._split_body(rule.body, framework)
        used = ProgramUtils.variable_names((rule.head, *rule.body))
        name = tabled_name(rule.head.predicate)
        if rule.is_fact:
            tabled = Rule(Literal(name, (*rule.head.args, EMPTY_CONTEXT)))
        elif not others:
            answer = ProgramUtils.fresh_variable("E", used)
            tabled = Rule(
                Literal(name, (*rule.head.args, answer)),
                (_produce_context(answer, EMPTY_CONTEXT, _abducible_list(abducibles)),),
            )
        else:
            output = ProgramUtils.fresh_variable("O", used)
            tabled = Rule(
                Literal(name, (*rule.head.args, output)),
                self._thread(others, _abducible_list(abducibles), output, used),
            )
        return tabled, self._reuse_rule(rule.head.key)

    def transform_rule_direct(self, rule: Rule, framework: AbductiveFramework) -> Rule:
        """Threads the context through an untabled rule without going through a table."""
        used = ProgramUtils.variable_names((rule.head, *rule.body))
        initial = ProgramUtils.fresh_variable("I", used)
        if rule.is_fact:
            return Rule(rule.head.with_args((*rule.head.args, initial, initial)))
        output = ProgramUtils.fresh_variable("O", used)
        head = rule.head.with_args((*rule.head.args, initial, output))
        abducibles, others = self._split_body(rule.body, framework)
        if not abducibles:
            return Rule(head, self._thread(others, initial, output, used))
        if not others:
            return Rule(head, (_produce_context(output, initial, _abducible_list(abducibles)),))
        contexts = self._intermediates(len(others), used)
        return Rule(
            head,
            (
                _produce_context(contexts[0], initial, _abducible_list(abducibles)),
                *self._thread_through(others, [*contexts, output]),
            ),
        )

    def transform_dual(self, key: PredicateKey, rules: Sequence[Rule]) -> list[Rule]:
        """Builds ``not_p`` and the falsification alternatives ``p*i`` of every rule.

        ``not_p`` chains the alternatives of all rules, so it holds once each rule is
        falsified. Alternative j of a rule assumes the first j-1 body literals and
        falsifies the j-th. A rule whose head arguments are not distinct variables also
        gets an alternative that holds when the call does not match its head.
        """
        name, arity = key
        if not rules:
            head_args = ProgramUtils.generic_args(arity)
            used = {var.name for var in head_args}
            initial = ProgramUtils.fresh_variable("I", used)
            return [Rule(Literal(dual_name(name), (*head_args, initial, initial)))]

        first_head = rules[0].head
        if ProgramUtils.has_distinct_variable_args(first_head):
            head_args = first_head.args
        else:
            head_args = ProgramUtils.generic_args(arity)
        used = {var.name for arg in head_args for var in arg.variables()}
        initial = ProgramUtils.fresh_variable("I", used)
        output = ProgramUtils.fresh_variable("O", used)
        calls = [Literal(alternative_name(name, index), tuple(head_args)) for index in range(1, len(rules) + 1)]
        dual_head = Literal(dual_name(name), (*head_args, initial, output))
        result = [Rule(dual_head, self._thread(calls, initial, output, used))]

        for index, rule in enumerate(rules, start=1):
            alternative = alternative_name(name, index)
            rule_vars = ProgramUtils.variable_names((rule.head, *rule.body))
            for position in range(len(rule.body)):
                used = set(rule_vars)
                initial = ProgramUtils.fresh_variable("I", used)
                output = ProgramUtils.fresh_variable("O", used)
                goals = [*rule.body[:position], rule.body[position].complement()]
                result.append(
                    Rule(
                        Literal(alternative, (*rule.head.args, initial, output)),
                        self._thread(goals, initial, output, used),
                    )
                )
            if not ProgramUtils.has_distinct_variable_args(rule.head):
                used = set(rule_vars)
                generic = ProgramUtils.generic_args(arity)
                call_args = tuple(ProgramUtils.fresh_variable(var.name, used) for var in generic)
                initial = ProgramUtils.fresh_variable("I", used)
                result.append(
                    Rule(
                        Literal(alternative, (*call_args, initial, initial)),
                        (
                            Literal(
                                SystemPredicateType.HEAD_MISMATCH.value,
                                (TermList(call_args), TermList(rule.head.args)),
                            ),
                        ),
                    )
                )
        return result

    @staticmethod
    def transform_abducible(key: PredicateKey) -> tuple[Rule, Rule]:
        """Insertion rules ``a(X, I, O)`` and ``not_a(X, I, O)`` of an abducible."""
        name, arity = key
        args = ProgramUtils.generic_args(arity)
        used = {var.name for var in args}
        initial = ProgramUtils.fresh_variable("I", used)
        output = ProgramUtils.fresh_variable("O", used)
        insert = SystemPredicateType.INSERT_ABDUCIBLE.value
        positive = Rule(
            Literal(name, (*args, initial, output)),
            (Literal(insert, (Literal(name, args), initial, output)),),
        )
        negative = Rule(
            Literal(dual_name(name), (*args, initial, output)),
            (Literal(insert, (Literal(name, args, positive=False), initial, output)),),
        )
        return positive, negative

    def transform_ics_dual(self, ics: Sequence[IntegrityConstraint]) -> list[Rule]:
        """Dualizes the constraints as if each were a rule for ``false``.

        ``not_false(I, O)`` holds when every constraint has one falsified literal; with no
        constraints it is the fact ``not_false(I, I)``.
        """
        initial, output = Var("I"), Var("O")
        not_false = SystemPredicateType.NOT_FALSE.value
        if not ics:
            return [Rule(Literal(not_false, (initial, initial)))]
        used = {"I", "O"}
        calls = [Literal(ic_alternative_name(index)) for index in range(1, len(ics) + 1)]
        result = [Rule(Literal(not_false, (initial, output)), self._thread(calls, initial, output, used))]
        for index, ic in enumerate(ics, start=1):
            ic_vars = ProgramUtils.variable_names(ic.body)
            for position in range(len(ic.body)):
                used = set(ic_vars)
                alt_initial = ProgramUtils.fresh_variable("I", used)
                alt_output = ProgramUtils.fresh_variable("O", used)
                goals = [*ic.body[:position], ic.body[position].complement()]
                result.append(
                    Rule(
                        Literal(ic_alternative_name(index), (alt_initial, alt_output)),
                        self._thread(goals, alt_initial, alt_output, used),
                    )
                )
        return result

    def transform_ics_subcheck(self, ics: Sequence[IntegrityConstraint], framework: AbductiveFramework) -> list[Rule]:
        """Compiles each constraint into a setup rule asserting its abducible patterns.

        ``U*i`` runs the non-abducible part of the constraint from its abducibles as the
        initial context and records every resulting context with ``assert_IC``; candidate
        solutions are later rejected when one of those patterns embeds into them.
        """
        result = [Rule(Literal(setup_name()), tuple(Literal(setup_name(index)) for index in range(1, len(ics) + 1)))]
        assert_ic = SystemPredicateType.ASSERT_IC.value
        for index, ic in enumerate(ics, start=1):
            abducibles, others = self._split_body(ic.body, framework)
            head = Literal(setup_name(index))
            if not others:
                result.append(Rule(head, (Literal(assert_ic, (_abducible_list(abducibles),)),)))
                continue
            used = ProgramUtils.variable_names(ic.body)
            answer = ProgramUtils.fresh_variable("E", used)
            goals = self._thread(others, _abducible_list(abducibles), answer, used)
            result.append(Rule(head, (*goals, Literal(assert_ic, (answer,)))))
        return result

    def transform_query(
        self,
        query: Sequence[Literal],
        initial: Context | None = None,
        mode: ICModeType | None = None,
    ) -> TransformedQuery:
        """Threads the query goals from the initial context and appends the constraint check.

        Dual mode finishes with ``not_false``; subcheck mode runs ``test_IC`` after every goal
        so that a violated pattern prunes the derivation as soon as it appears.
        """
        mode = mode or self._options.ic_mode
        start = (initial or Context.empty()).to_term()
        used = ProgramUtils.variable_names(query)
        if mode is ICModeType.DUAL:
            output = ProgramUtils.fresh_variable("O", used)
            if not query:
                return TransformedQuery((Literal(SystemPredicateType.NOT_FALSE.value, (start, output)),), output)
            contexts: list[Term] = [start, *self._intermediates(len(query), used)]
            not_false = Literal(SystemPredicateType.NOT_FALSE.value, (contexts[-1], output))
            goals = [*self._thread_through(query, contexts), not_false]
            return TransformedQuery(tuple(goals), output)

        test_ic = SystemPredicateType.TEST_IC.value
        if not query:
            return TransformedQuery((Literal(test_ic, (start,)),), start)
        output = ProgramUtils.fresh_variable("O", used)
        contexts = [start, *self._intermediates(len(query) - 1, used), output]
        goals = []
        for index, literal in enumerate(query):
            goals.append(self._alpha(literal, contexts[index], contexts[index + 1]))
            goals.append(Literal(test_ic, (contexts[index + 1],)))
        return TransformedQuery(tuple(goals), output)

    @staticmethod
    def check_size_bound(framework: AbductiveFramework, program: TransformedProgram) -> SizeBoundReportDTO:
        """Compares the emitted program size with ``8 * size(P) + 4 * |AB| + 3``.

        Emitted constraint rules count on the left. The right-hand side is reported twice:
        over the program rules alone, and with each constraint counted as a rule.
        """
        lhs = program.size()
        rhs = 8 * framework.size + 4 * len(framework.abducibles) + 3
        rhs_with_ics = rhs + 8 * framework.constraint_size
        if lhs > rhs:
            logger.info("Transformed size %d exceeds the linear bound %d", lhs, rhs)
        return SizeBoundReportDTO(
            lhs=lhs,
            rhs=rhs,
            holds=lhs <= rhs,
            rhs_with_ics=rhs_with_ics,
            holds_with_ics=lhs <= rhs_with_ics,
        )

    @staticmethod
    def _split_body(body: Sequence[Literal], framework: AbductiveFramework) -> tuple[list[Literal], list[Literal]]:
        abducibles = [literal for literal in body if framework.is_abducible(literal)]
        others = [literal for literal in body if not framework.is_abducible(literal)]
        return abducibles, others

    @staticmethod
    def _alpha(literal: Literal, before: Term, after: Term) -> Literal:
        name = literal.predicate if literal.positive else dual_name(literal.predicate)
        return Literal(name, (*literal.args, before, after))

    @staticmethod
    def _intermediates(count: int, used: set[str]) -> list[Var]:
        # one intermediate context is T, several are T1 .. Tn
        if count == 1:
            return [ProgramUtils.fresh_variable("T", used)]
        return [ProgramUtils.fresh_variable(f"T{index}", used) for index in range(1, count + 1)]

    def _thread(self, literals: Sequence[Literal], start: Term, end: Term, used: set[str]) -> tuple[Literal, ...]:
        contexts = [start, *self._intermediates(len(literals) - 1, used), end] if len(literals) > 1 else [start, end]
        return self._thread_through(literals, contexts)

    def _thread_through(self, literals: Sequence[Literal], contexts: Sequence[Term]) -> tuple[Literal, ...]:
        return tuple(
            self._alpha(literal, contexts[index], contexts[index + 1]) for index, literal in enumerate(literals)
        )

    def _reuse_rule(self, key: PredicateKey) -> Rule:
        name, arity = key
        args = ProgramUtils.generic_args(arity)
        used = {var.name for var in args}
        initial = ProgramUtils.fresh_variable("I", used)
        output = ProgramUtils.fresh_variable("O", used)
        answer = ProgramUtils.fresh_variable("E", used)
        return Rule(
            Literal(name, (*args, initial, output)),
            (Literal(tabled_name(name), (*args, answer)), _produce_context(output, initial, answer)),
        )

    @staticmethod
    def _check_generated_names(framework: AbductiveFramework) -> None:
        names = {key[0] for key in framework.defined_predicates}
        names.update(key[0] for key in framework.undefined_predicates)
        names.update(key[0] for key in framework.abducibles)
        for name in sorted(names):
            for generated in (tabled_name(name), dual_name(name)):
                if generated in names:
                    raise TransformFailedError(reason=f"generated predicate {generated} clashes with a source name")
        if FALSE_PREDICATE in names:
            raise TransformFailedError(reason=f"predicate {FALSE_PREDICATE} clashes with the constraint duals")


def transform_program(framework: AbductiveFramework, options: TransformOptionsDTO | None = None) -> TransformedProgram:
    return ProgramTransformer(options).transform_program(framework)


def transform_query(
    query: Sequence[Literal],
    mode: ICModeType,
    initial: Context | None = None,
) -> TransformedQuery:
    return ProgramTransformer(TransformOptionsDTO(ic_mode=mode)).transform_query(query, initial)


def check_size_bound(framework: AbductiveFramework, program: TransformedProgram) -> SizeBoundReportDTO:
    return ProgramTransformer.check_size_bound(framework, program)


def elide_query(query: Sequence[Literal], report: ElisionReportDTO) -> tuple[Literal, ...]:
    return ConstantElision.elide_literals(query, report)


def reinsert_constants(context: Context, report: ElisionReportDTO) -> Context:
    return ConstantElision.reinsert(context, report)
