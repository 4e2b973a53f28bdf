import itertools
import logging
import time
from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass
from typing import NamedTuple

from ablp.adapters.table_store.adapters import InMemoryTableStoreAdapter
from ablp.adapters.table_store.ports import Answer, CallKey, TableStorePort
from ablp.configs.base_config import BaseConfig
from ablp.configs.config_template import EngineConfig
from ablp.helpers.utils.context_utils import ContextUtils, Items
from ablp.helpers.utils.program_utils import ProgramUtils
from ablp.helpers.utils.unification_utils import Bindings, UnificationUtils
from ablp.models.dtos.options_dtos import EngineOptionsDTO
from ablp.models.dtos.solution_dtos import MetricsDTO
from ablp.models.entities import (
    Context,
    ContextTerm,
    Literal,
    PredicateKey,
    Rule,
    Solution,
    Substitution,
    Term,
    TransformedProgram,
    Var,
)
from ablp.models.errors import (
    InvalidArgumentError,
    ModeMismatchError,
    NegativeCycleError,
    NonGroundAbducibleError,
    NonGroundNegativeCallError,
    ResolutionTooDeepError,
    StepBudgetExceededError,
    UniverseClosedError,
)
from ablp.models.types.ic_mode_type import ICModeType
from ablp.models.types.insert_outcome_type import InsertOutcomeType
from ablp.models.types.subsumption_type import SubsumptionType
from ablp.models.types.system_predicate_type import SystemPredicateType
from ablp.models.types.table_status_type import TableStatusType
from ablp.services.transformer.naming import ALTERNATIVE_MARK, DUAL_PREFIX, setup_name, tabled_name
from ablp.services.transformer.program_transformer import ProgramTransformer

logger = logging.getLogger(__name__)

ANSWER_VAR = Var("$E")
CONTEXT_ARGS = 2

Variant = tuple[str, tuple[Term, ...]]


class _Path(NamedTuple):
    # active-stack height when the innermost dual call started; entries below it are
    # reached through negation
    neg_mark: int
    # dual variants entered since the last positive call, and those entered before it
    open_duals: frozenset[Variant]
    closed_duals: frozenset[Variant]

    def crossed(self) -> "_Path":
        if not self.open_duals:
            return self
        return _Path(self.neg_mark, frozenset(), self.closed_duals | self.open_duals)


ROOT_PATH = _Path(0, frozenset(), frozenset())


@dataclass
class _Frame:
    key: CallKey
    depth: int
    low: int
    mark: int
    recursive: bool = False


class AbductiveSolver:
    """Goal-directed abductive solver over a transformed program.

    Calls to tabled predicates are memoized per variant call. Recursive variant calls
    consume the answers found so far, and the leader of a group of mutually recursive
    calls re-evaluates the group until no new answers appear, then marks it complete.
    In subcheck mode the integrity constraints are set up on the first solve by grounding
    every ``U*i`` rule over the constant universe; the resulting ``ic`` patterns are then
    checked after each query goal.

    The solver keeps its tables between calls, so solving the same query twice reuses the
    answers of the first call. Use :meth:`abolish_tables` to start from empty tables.

    Args:
        program (TransformedProgram): The program to evaluate.
        options (EngineOptionsDTO, optional): Modes and limits. Defaults to options
            matching the modes ``program`` was transformed for.
        store (TableStorePort, optional): Answer tables. Defaults to a new
            :class:`InMemoryTableStoreAdapter`.
        constants (Sequence[Term], optional): Extra constants for the universe that
            integrity constraints are grounded over.
        engine_config (EngineConfig, optional): Engine settings. If None, retrieves
            from global config. Defaults to None.

    Raises:
        ModeMismatchError: If ``options`` disagree with the modes of ``program``.

    Examples:
        >>> solver = AbductiveSolver(program)
        >>> [str(solution.context) for solution in solver.solve(parser.parse_query("p(0)."))]
        ['[q(0),q(1),not t(0)]']
        >>> solver.metrics.inferences
        42
    """

    def __init__(
        self,
        program: TransformedProgram,
        options: EngineOptionsDTO | None = None,
        store: TableStorePort | None = None,
        constants: Sequence[Term] = (),
        engine_config: EngineConfig | None = None,
    ) -> None:
        config = BaseConfig.global_config().ENGINE if engine_config is None else engine_config
        self._options = options or EngineOptionsDTO.matching(program.options, subsumption=config.DEFAULT_SUBSUMPTION)
        for option in ("ic_mode", "tabling_mode"):
            expected = getattr(program.options, option)
            actual = getattr(self._options, option)
            if expected != actual:
                raise ModeMismatchError(option=option, expected=str(expected), actual=str(actual))
        self._program = program
        self._store = store or InMemoryTableStoreAdapter()
        self._max_steps = self._options.max_steps or config.MAX_STEPS
        self._extra_constants = tuple(constants)
        self._subcheck = program.ic_mode is ICModeType.SUBCHECK
        self._query_transformer = ProgramTransformer(program.options)
        self._tabled_names = frozenset(tabled_name(name) for name, _ in program.tabling_set)
        source = program.source
        self._source_predicates = frozenset(
            (*source.defined_predicates, *source.undefined_predicates, *source.abducibles),
        )
        self._falsifiers = self._falsifier_rules() if self._subcheck else {}
        self._builtins: dict[str, Callable[[Literal, Bindings], Iterator[Bindings]]] = {
            SystemPredicateType.PRODUCE_CONTEXT.value: self._produce_context,
            SystemPredicateType.INSERT_ABDUCIBLE.value: self._insert_abducible,
            SystemPredicateType.ASSERT_IC.value: self._assert_ic,
            SystemPredicateType.TEST_IC.value: self._test_ic,
            SystemPredicateType.HEAD_MISMATCH.value: self._head_mismatch,
        }

        self._inferences = 0
        self._tag = 0
        self._active: dict[CallKey, int] = {}
        self._frames: list[_Frame] = []
        self._incomplete: list[CallKey] = []
        self._added = 0
        self._set_up = not self._subcheck
        self._universe: frozenset[Term] = frozenset()
        self._universe_bound = False
        self._metrics = MetricsDTO()

    @property
    def metrics(self) -> MetricsDTO:
        """Counters of the most recent solve, including the setup it triggered."""
        return self._metrics

    @property
    def store(self) -> TableStorePort:
        return self._store

    def setup(self, query: Sequence[Literal] = (), initial: Context | None = None) -> None:
        """Asserts the ``ic`` patterns of every constraint and seals the store.

        Runs once per solver; later calls do nothing. The universe holds the program
        constants, the extra constants given at construction and those of ``query`` and
        ``initial``. Variables of a constraint that occur only in its abducibles stay
        variables of the stored pattern.
        """
        if self._set_up:
            return
        universe = set(self._program.constants) | set(self._extra_constants)
        universe |= ProgramUtils.constants_of(query)
        if initial is not None:
            universe |= ProgramUtils.constants_of(initial)
        ordered = sorted(universe, key=lambda term: term.sort_key())
        self._tick()
        for rule in self._program.ic_rules:
            if rule.head.predicate == setup_name():
                continue
            self._tick(2)
            domain = list(
                dict.fromkeys(
                    var
                    for goal in rule.body
                    if goal.predicate not in self._builtins
                    for arg in goal.args[:-CONTEXT_ARGS]
                    for var in arg.variables()
                ),
            )
            if domain:
                self._universe_bound = True
            for combination in itertools.product(ordered, repeat=len(domain)):
                tag = self._next_tag()
                body = tuple(UnificationUtils.rename(goal, tag) for goal in rule.body)
                bindings: Bindings = {
                    UnificationUtils.rename(var, tag): constant  # type: ignore[misc]
                    for var, constant in zip(domain, combination, strict=True)
                }
                for _ in self._solve(body, bindings, ROOT_PATH):
                    pass
        self._store.seal()
        self._universe = frozenset(ordered)
        self._set_up = True
        logger.debug(
            "Integrity constraints set up over %d constants: %d ic facts",
            len(ordered),
            len(self._store.ic_facts()),
        )

    def iter_solve(self, query: Sequence[Literal], initial: Context | None = None) -> Iterator[Solution]:
        """Yields solutions in derivation order, duplicates included.

        Raises:
            InvalidArgumentError: If the initial context holds a non-abducible literal.
            UniverseClosedError: If the query brings constants the constraints were not set up for.
            StepBudgetExceededError: If the resolution step budget runs out.
            ResolutionTooDeepError: If nested calls outgrow the interpreter stack.
        """
        initial = initial or Context.empty()
        for literal in initial:
            if literal.key not in self._program.abducibles:
                raise InvalidArgumentError(argument_name="initial", additional_data={"literal": str(literal)})
        self._inferences = 0
        self._active.clear()
        self._frames.clear()
        started = time.perf_counter()
        try:
            if not self._set_up:
                self.setup(query, initial)
            else:
                self._check_universe(query, initial)
            transformed = self._query_transformer.transform_query(query, initial)
            query_vars = list(dict.fromkeys(var for literal in query for var in literal.variables()))
            for bindings in self._solve(transformed.goals, {}, ROOT_PATH):
                yield self._solution(transformed.output, bindings, query_vars)
        except RecursionError as error:
            raise ResolutionTooDeepError(query=", ".join(map(str, query))) from error
        finally:
            self._metrics = MetricsDTO(
                inferences=self._inferences,
                table_bytes=self._store.table_bytes(),
                table_entries=self._store.entry_count(),
                table_answers=self._store.answer_count(),
                wall_ms=(time.perf_counter() - started) * 1000,
            )

    def solve(self, query: Sequence[Literal], initial: Context | None = None) -> list[Solution]:
        """Collects the distinct solutions of a query and applies the subsumption policy."""
        unique: dict[tuple[Context, tuple[tuple[str, str], ...]], Solution] = {}
        for solution in self.iter_solve(query, initial):
            unique.setdefault((solution.context, tuple(solution.binding_strings().items())), solution)
        solutions = list(unique.values())
        logger.debug("Query %s: %d solutions, %s", ", ".join(map(str, query)), len(solutions), self._metrics)
        return self._subsume(solutions)

    def abolish_tables(self) -> None:
        """Drops every table entry; the ``ic`` patterns of the setup are kept."""
        self._store.abolish()
        self._incomplete.clear()

    def _subsume(self, solutions: list[Solution]) -> list[Solution]:
        policy = self._options.subsumption
        if policy is SubsumptionType.ALL:
            return solutions
        if policy is SubsumptionType.CARDINALITY:
            keep = set(ContextUtils.minimum_cardinality(solution.context for solution in solutions))
            return [solution for solution in solutions if solution.context in keep]
        groups: dict[tuple[tuple[str, str], ...], list[Solution]] = {}
        for solution in solutions:
            groups.setdefault(tuple(solution.binding_strings().items()), []).append(solution)
        kept: list[Solution] = []
        for group in groups.values():
            minimal = set(ContextUtils.minimal_antichain(solution.context for solution in group))
            kept.extend(solution for solution in group if solution.context in minimal)
        return [solution for solution in solutions if solution in kept]

    def _solution(self, output: Term, bindings: Bindings, query_vars: list[Var]) -> Solution:
        resolved = UnificationUtils.resolve(output, bindings)
        items: tuple[Literal, ...] = resolved.items if isinstance(resolved, ContextTerm) else ()
        for literal in items:
            if not literal.is_ground():
                raise NonGroundAbducibleError(literal=str(literal))
        answer = {var: UnificationUtils.resolve(var, bindings) for var in query_vars}
        return Solution(Context.of(items), Substitution(answer))

    def _check_universe(self, query: Sequence[Literal], initial: Context) -> None:
        if not self._subcheck or not self._universe_bound:
            return
        constants = ProgramUtils.constants_of(query) | ProgramUtils.constants_of(initial)
        unseen = constants - self._universe
        if unseen:
            raise UniverseClosedError(constants=sorted(str(constant) for constant in unseen))

    def _tick(self, count: int = 1) -> None:
        self._inferences += count
        if self._inferences > self._max_steps:
            raise StepBudgetExceededError(max_steps=self._max_steps)

    def _next_tag(self) -> int:
        self._tag += 1
        return self._tag

    def _solve(self, goals: Sequence[Literal], bindings: Bindings, path: _Path) -> Iterator[Bindings]:
        if not goals:
            yield bindings
            return
        if len(goals) == 1:
            yield from self._call(goals[0], bindings, path)
            return
        for extended in self._call(goals[0], bindings, path):
            yield from self._solve(goals[1:], extended, path)

    def _call(self, goal: Literal, bindings: Bindings, path: _Path) -> Iterator[Bindings]:
        self._tick()
        name = goal.predicate
        builtin = self._builtins.get(name)
        if builtin is not None:
            yield from builtin(goal, bindings)
            return
        if name in self._tabled_names:
            yield from self._call_tabled(goal, bindings, path.crossed())
            return
        if name in self._program.dual_predicates:
            entered = self._enter_dual(goal, bindings, path)
            if entered is None:
                yield from self._keep_context(goal, bindings)
                return
            path = entered
        elif self._is_unknown_dual(goal):
            self._enter_dual(goal, bindings, path)
            yield from self._keep_context(goal, bindings)
            return
        else:
            path = path.crossed()
        yield from self._resolve_rules(goal, bindings, path)

    def _falsifier_rules(self) -> dict[PredicateKey, tuple[Rule, ...]]:
        """Falsification alternatives reduced to the literal each of them falsifies.

        Alternative j of a rule also proves the body literals before the j-th one. Without
        them a constraint pattern or an explanation only holds what the falsification
        needs. The earlier literals stay when the falsified one has variables that only
        they bind.
        """
        grouped: dict[PredicateKey, list[Rule]] = {}
        for rule in self._program.dual_rules:
            if ALTERNATIVE_MARK in rule.head.predicate:
                grouped.setdefault(rule.head.key, []).append(self._falsifier(rule))
        return {key: tuple(rules) for key, rules in grouped.items()}

    @staticmethod
    def _falsifier(rule: Rule) -> Rule:
        if len(rule.body) < 2:
            return rule
        head, falsified = rule.head, rule.body[-1]
        bound = {var for arg in head.args[:-CONTEXT_ARGS] for var in arg.variables()}
        needed = {var for arg in falsified.args[:-CONTEXT_ARGS] for var in arg.variables()}
        if not needed <= bound:
            return rule
        start, output = head.args[-2], falsified.args[-1]
        return Rule(head, (falsified.with_args((*falsified.args[:-CONTEXT_ARGS], start, output)),))

    @staticmethod
    def _keep_context(goal: Literal, bindings: Bindings) -> Iterator[Bindings]:
        extended = UnificationUtils.unify_with(goal.args[-1], goal.args[-2], bindings)
        if extended is not None:
            yield extended

    def _resolve_rules(self, goal: Literal, bindings: Bindings, path: _Path) -> Iterator[Bindings]:
        key = (goal.predicate, goal.arity)
        rules = self._falsifiers.get(key) or self._program.rules_for(*key)
        for rule in rules:
            self._tick()
            tag = self._next_tag()
            head: Literal = UnificationUtils.rename(rule.head, tag)  # type: ignore[assignment]
            extended = UnificationUtils.unify_args(goal.args, head.args, bindings)
            if extended is None:
                continue
            body = tuple(UnificationUtils.rename(literal, tag) for literal in rule.body)
            yield from self._solve(body, extended, path)  # type: ignore[arg-type]

    def _is_unknown_dual(self, goal: Literal) -> bool:
        """A ``not_x`` call for a predicate the program never mentions; it holds with O = I."""
        if not goal.predicate.startswith(DUAL_PREFIX) or goal.arity < CONTEXT_ARGS:
            return False
        if self._program.defines(goal.predicate, goal.arity):
            return False
        arity = goal.arity - CONTEXT_ARGS
        positive = goal.predicate.removeprefix(DUAL_PREFIX)
        sources = self._source_predicates
        return (positive, arity) not in sources and (goal.predicate, arity) not in sources

    def _enter_dual(self, goal: Literal, bindings: Bindings, path: _Path) -> _Path | None:
        """Extends the path with a dual call; None when the call closes a loop of duals.

        A dual variant met again with only dual calls in between stands for a positive
        loop of the source program, whose atoms are false unless something outside the
        loop supports them, so the repeated call holds without extending the context.
        Meeting it again after a positive call means it depends on its own negation.
        """
        args = goal.args[:-CONTEXT_ARGS]
        if self._subcheck:
            for arg in args:
                if not UnificationUtils.resolve(arg, bindings).is_ground():
                    raise NonGroundNegativeCallError(call=self._call_text(goal, bindings))
        variant = (goal.predicate, UnificationUtils.variant_key(args, bindings))
        if variant in path.closed_duals:
            raise NegativeCycleError(call=self._call_text(goal, bindings))
        if variant in path.open_duals:
            return None
        return _Path(len(self._frames), path.open_duals | {variant}, path.closed_duals)

    @staticmethod
    def _call_text(goal: Literal, bindings: Bindings) -> str:
        args = tuple(UnificationUtils.resolve(arg, bindings) for arg in goal.args[:-CONTEXT_ARGS])
        return str(Literal(goal.predicate, args))

    def _call_tabled(self, goal: Literal, bindings: Bindings, path: _Path) -> Iterator[Bindings]:
        call_args = goal.args[:-1]
        key: CallKey = (goal.predicate, UnificationUtils.variant_key(call_args, bindings))
        status = self._store.lookup(key)
        if status is TableStatusType.COMPLETE:
            pass
        elif key in self._active:
            depth = self._active[key]
            if depth < path.neg_mark:
                raise NegativeCycleError(call=str(Literal(goal.predicate, key[1])))
            frame = self._frames[-1]
            frame.low = min(frame.low, depth)
            frame.recursive = True
        else:
            self._evaluate(key, goal.predicate, path)
        for answer_args, answer_context in self._store.answers(key):
            tag = self._next_tag()
            renamed = tuple(UnificationUtils.rename(arg, tag) for arg in (*answer_args, ContextTerm(answer_context)))
            extended = UnificationUtils.unify_args(goal.args, renamed, bindings)
            if extended is not None:
                yield extended

    def _evaluate(self, key: CallKey, predicate: str, path: _Path) -> None:
        mark = len(self._incomplete)
        if self._store.lookup(key) is None:
            self._store.create(key)
            self._incomplete.append(key)
        depth = len(self._frames)
        frame = _Frame(key=key, depth=depth, low=depth, mark=mark)
        self._active[key] = depth
        self._frames.append(frame)
        call = Literal(predicate, (*key[1], ANSWER_VAR))
        subsumption = self._options.subsumption
        iterations = 0
        try:
            while True:
                iterations += 1
                frame.recursive = False
                added_before = self._added
                for bindings in self._resolve_rules(call, {}, path):
                    answer = self._answer(key, bindings)
                    if self._store.insert(key, answer, subsumption) is InsertOutcomeType.ADDED:
                        self._added += 1
                if frame.low < frame.depth:
                    break
                if not (frame.recursive and self._added > added_before):
                    break
        finally:
            self._frames.pop()
            del self._active[key]
        if frame.low < frame.depth:
            parent = self._frames[-1]
            parent.low = min(parent.low, frame.low)
            parent.recursive = True
            return
        completed = self._incomplete[frame.mark :]
        if key not in completed:
            completed.append(key)
        self._incomplete = [member for member in self._incomplete[: frame.mark] if member != key]
        for member in completed:
            self._store.complete(member)
        if iterations > 1 or len(completed) > 1:
            logger.debug("Completed %d table entries after %d iterations", len(completed), iterations)

    @staticmethod
    def _answer(key: CallKey, bindings: Bindings) -> Answer:
        resolved = UnificationUtils.variant_key((*key[1], ANSWER_VAR), bindings)
        context = resolved[-1]
        items = context.items if isinstance(context, ContextTerm) else ()
        return tuple(resolved[:-1]), tuple(items)

    def _context_items(self, term: Term, bindings: Bindings) -> Items | None:
        resolved = UnificationUtils.resolve(term, bindings)
        return resolved.items if isinstance(resolved, ContextTerm) else None

    def _merge(self, current: Items, extra: Items, bindings: Bindings) -> tuple[Items, Bindings] | None:
        if not self._subcheck:
            if not ContextUtils.is_consistent(current):
                return None
            return ContextUtils.merge_unifying(current, extra, bindings)
        for literal in extra:
            if not literal.is_ground():
                raise NonGroundAbducibleError(literal=str(literal))
        normalized = ContextUtils.merge_items((), current)
        if normalized is None:
            return None
        merged = ContextUtils.merge_items(normalized, extra)
        return None if merged is None else (merged, bindings)

    def _produce_context(self, goal: Literal, bindings: Bindings) -> Iterator[Bindings]:
        output, initial, extra = goal.args
        current = self._context_items(initial, bindings)
        answer = self._context_items(extra, bindings)
        if current is None or answer is None:
            return
        merged = self._merge(current, answer, bindings)
        if merged is None:
            return
        extended = UnificationUtils.unify_with(output, ContextTerm(merged[0]), merged[1])
        if extended is not None:
            yield extended

    def _insert_abducible(self, goal: Literal, bindings: Bindings) -> Iterator[Bindings]:
        literal, initial, output = goal.args
        current = self._context_items(initial, bindings)
        if current is None:
            return
        resolved: Literal = UnificationUtils.resolve(literal, bindings)  # type: ignore[assignment]
        merged = self._merge(current, (resolved,), bindings)
        if merged is None:
            return
        extended = UnificationUtils.unify_with(output, ContextTerm(merged[0]), merged[1])
        if extended is not None:
            yield extended

    def _assert_ic(self, goal: Literal, bindings: Bindings) -> Iterator[Bindings]:
        items = self._context_items(goal.args[0], bindings)
        if items is not None:
            self._store.assert_ic(items)
        yield bindings

    def _test_ic(self, goal: Literal, bindings: Bindings) -> Iterator[Bindings]:
        items = self._context_items(goal.args[0], bindings)
        if items is None:
            return
        self._tick()
        for pattern in self._store.ic_facts():
            self._tick()
            found, attempts = ContextUtils.find_embedding(pattern, items)
            self._tick(attempts)
            if found is not None:
                return
        yield bindings

    def _head_mismatch(self, goal: Literal, bindings: Bindings) -> Iterator[Bindings]:
        call_args, head_args = goal.args
        if UnificationUtils.unify_with(call_args, head_args, bindings) is None:
            yield bindings


def solve(
    program: TransformedProgram,
    query: Sequence[Literal],
    initial: Context | None = None,
    options: EngineOptionsDTO | None = None,
) -> tuple[list[Solution], MetricsDTO]:
    """Solves one query with a fresh solver.

    Returns:
        tuple[list[Solution], MetricsDTO]: The solutions after answer subsumption and the
            counters of the solve.
    """
    solver = AbductiveSolver(program, options)
    solutions = solver.solve(query, initial)
    return solutions, solver.metrics
