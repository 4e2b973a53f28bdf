import itertools
import logging
from collections.abc import Sequence

from ablp.configs.base_config import BaseConfig
from ablp.configs.config_template import OracleConfig
from ablp.helpers.utils.context_utils import ContextUtils
from ablp.models.dtos.report_dtos import CheckReportDTO
from ablp.models.entities import AbductiveFramework, Context, Literal
from ablp.models.errors import UniverseTooLargeError
from ablp.models.types.semantics_type import SemanticsType
from ablp.models.types.subsumption_type import SubsumptionType
from ablp.models.types.truth_value_type import TruthValueType
from ablp.services.oracle.grounding import GroundRule, ground_program
from ablp.services.oracle.well_founded import UNDEFINED_ATOM, wfm

logger = logging.getLogger(__name__)

# in S positively, in S negatively, left out of S
_CHOICES = (None, True, False)


class AbductiveOracle:
    """Reference solver that tries every consistent set of ground abducibles.

    For a candidate S the positive members of S become facts, the atoms of its negative
    members get no rule at all, and every other relevant ground abducible is made
    undefined by a rule whose body is the undefined atom. S is a solution when the query
    is true in the well-founded model and the integrity constraints pass under the
    chosen semantics.

    Args:
        oracle_config (OracleConfig, optional): Candidate limit. If None, retrieves from
            global config. Defaults to None.

    Examples:
        >>> oracle = AbductiveOracle()
        >>> oracle.enumerate_solutions(framework, query, SemanticsType.MODIFIED, SubsumptionType.MINIMAL)
        [Context(literals=(Literal(predicate='q', ...), ...))]
    """

    def __init__(self, oracle_config: OracleConfig | None = None) -> None:
        self._config = BaseConfig.global_config().ORACLE if oracle_config is None else oracle_config

    def enumerate_solutions(
        self,
        framework: AbductiveFramework,
        query: Sequence[Literal],
        semantics: SemanticsType = SemanticsType.MODIFIED,
        minimality: SubsumptionType = SubsumptionType.ALL,
        initial: Context | None = None,
    ) -> list[Context]:
        """Lists the solutions of a ground query, restricted to supersets of ``initial``.

        Raises:
            UniverseTooLargeError: If there are more candidates than ``MAX_CANDIDATES``.
            NonGroundQueryError: If the query has variables.
            UnsupportedTermError: If the framework has compound terms.
        """
        initial = initial or Context.empty()
        ground = ground_program(framework, query, initial)
        abducibles = ground.abducibles
        candidates = len(_CHOICES) ** len(abducibles)
        if candidates > self._config.MAX_CANDIDATES:
            raise UniverseTooLargeError(candidates=candidates, limit=self._config.MAX_CANDIDATES)
        required = {literal.atom(): literal.positive for literal in initial}
        base_rules = (*ground.rules, GroundRule(UNDEFINED_ATOM, negative=(UNDEFINED_ATOM,)))

        solutions: list[Context] = []
        for assignment in itertools.product(_CHOICES, repeat=len(abducibles)):
            if any(required.get(atom, choice) != choice for atom, choice in zip(abducibles, assignment, strict=True)):
                continue
            members: list[Literal] = []
            rules = list(base_rules)
            for atom, choice in zip(abducibles, assignment, strict=True):
                if choice is None:
                    rules.append(GroundRule(atom, positive=(UNDEFINED_ATOM,)))
                elif choice:
                    members.append(atom)
                    rules.append(GroundRule(atom))
                else:
                    members.append(atom.complement())
            model = wfm(rules)
            if model.conjunction(query) is not TruthValueType.TRUE:
                continue
            values = [model.conjunction(body) for body in ground.ics]
            if semantics is SemanticsType.CLASSIC:
                accepted = all(value is TruthValueType.FALSE for value in values)
            else:
                accepted = all(value is not TruthValueType.TRUE for value in values)
            if accepted:
                solutions.append(Context.of(members))
        logger.debug(
            "Oracle tried %d candidates over %d abducibles: %d solutions",
            candidates,
            len(abducibles),
            len(solutions),
        )
        if minimality is SubsumptionType.MINIMAL:
            return ContextUtils.minimal_antichain(solutions)
        if minimality is SubsumptionType.CARDINALITY:
            return ContextUtils.minimum_cardinality(ContextUtils.minimal_antichain(solutions))
        return solutions

    def check_solutions(
        self,
        framework: AbductiveFramework,
        query: Sequence[Literal],
        engine_solutions: Sequence[Context],
        minimality: SubsumptionType = SubsumptionType.MINIMAL,
        initial: Context | None = None,
    ) -> CheckReportDTO:
        """Diffs engine solutions against the oracle under the modified semantics.

        With ``minimality`` all, every engine solution must be an oracle solution and the
        subset-minimal elements of both sides must agree; the oracle also lists supersets
        that abduction never returns. Otherwise the two sides must be equal after applying
        the same minimality filter.
        """
        everything = self.enumerate_solutions(framework, query, SemanticsType.MODIFIED, SubsumptionType.ALL, initial)
        engine = list(dict.fromkeys(engine_solutions))
        if minimality is SubsumptionType.ALL:
            accepted = set(everything)
            oracle_side = ContextUtils.minimal_antichain(everything)
            engine_side = ContextUtils.minimal_antichain(engine)
            unexpected = [context for context in engine if context not in accepted]
            unexpected.extend(
                context for context in engine_side if context not in oracle_side and context not in unexpected
            )
        else:
            oracle_side = ContextUtils.minimal_antichain(everything)
            if minimality is SubsumptionType.CARDINALITY:
                oracle_side = ContextUtils.minimum_cardinality(oracle_side)
            engine_side = engine
            unexpected = [context for context in engine_side if context not in oracle_side]
        missing = [context for context in oracle_side if context not in engine_side]
        return CheckReportDTO(
            equal=not missing and not unexpected,
            missing=tuple(str(context) for context in missing),
            unexpected=tuple(str(context) for context in unexpected),
            engine_count=len(engine),
            oracle_count=len(oracle_side),
        )


def enumerate_solutions(
    framework: AbductiveFramework,
    query: Sequence[Literal],
    semantics: SemanticsType = SemanticsType.MODIFIED,
    minimality: SubsumptionType = SubsumptionType.ALL,
    initial: Context | None = None,
) -> list[Context]:
    return AbductiveOracle().enumerate_solutions(framework, query, semantics, minimality, initial)


def check_solutions(
    framework: AbductiveFramework,
    query: Sequence[Literal],
    engine_solutions: Sequence[Context],
    minimality: SubsumptionType = SubsumptionType.MINIMAL,
    initial: Context | None = None,
) -> CheckReportDTO:
    return AbductiveOracle().check_solutions(framework, query, engine_solutions, minimality, initial)
