from collections.abc import Iterator
from dataclasses import dataclass, field
from functools import cached_property

from ablp.models.dtos.options_dtos import TransformOptionsDTO
from ablp.models.dtos.report_dtos import ElisionReportDTO
from ablp.models.entities.framework import AbductiveFramework, PredicateKey
from ablp.models.entities.rules import Rule
from ablp.models.types.ic_mode_type import ICModeType


@dataclass(frozen=True)
class TransformedProgram:
    """The tabled, dualized program the engine evaluates.

    Rule groups keep the order they were emitted in, so printing the same framework
    under the same options is byte-identical.

    Attributes:
        tabled_rules: ``p_ab(args, E)`` rules of tabled predicates.
        reuse_rules: ``p(args, I, O)`` rules calling the table and merging its answer into I.
        direct_rules: Context-threaded rules of predicates left untabled.
        dual_rules: ``not_p`` rules and their ``p*i`` falsification alternatives.
        abducible_rules: Positive and negative insertion rules per abducible.
        ic_rules: ``false*i``/``not_false`` in dual mode, ``U*``/``U*i`` in subcheck mode.
        tabling_set: Predicates evaluated through answer tables.
        ic_mode: Integrity-constraint compilation mode.
        options: Options the program was transformed with.
        source: The framework that was transformed, after constant elision.
        dual_predicates: Names of every negative-side predicate (``not_*``, ``p*i``, ``false*i``).
        elision: Positions dropped by constant elision.
    """

    tabled_rules: tuple[Rule, ...]
    reuse_rules: tuple[Rule, ...]
    direct_rules: tuple[Rule, ...]
    dual_rules: tuple[Rule, ...]
    abducible_rules: tuple[Rule, ...]
    ic_rules: tuple[Rule, ...]
    tabling_set: frozenset[PredicateKey]
    ic_mode: ICModeType
    options: TransformOptionsDTO
    source: AbductiveFramework
    dual_predicates: frozenset[str] = frozenset()
    elision: ElisionReportDTO = field(default_factory=ElisionReportDTO)

    def all_rules(self) -> Iterator[Rule]:
        yield from self.tabled_rules
        yield from self.reuse_rules
        yield from self.direct_rules
        yield from self.abducible_rules
        yield from self.dual_rules
        yield from self.ic_rules

    @cached_property
    def _index(self) -> dict[PredicateKey, tuple[Rule, ...]]:
        grouped: dict[PredicateKey, list[Rule]] = {}
        for rule in self.all_rules():
            grouped.setdefault(rule.head.key, []).append(rule)
        return {key: tuple(rules) for key, rules in grouped.items()}

    def rules_for(self, name: str, arity: int) -> tuple[Rule, ...]:
        return self._index.get((name, arity), ())

    def defines(self, name: str, arity: int) -> bool:
        return (name, arity) in self._index

    @property
    def abducibles(self) -> frozenset[PredicateKey]:
        return self.source.abducibles

    @property
    def constants(self) -> tuple:
        return self.source.constants

    def size(self) -> int:
        return sum(rule.size() for rule in self.all_rules())

    def pretty(self) -> str:
        """Renders every rule group under a comment header."""
        sections = (
            ("tabled rules", self.tabled_rules),
            ("reuse rules", self.reuse_rules),
            ("direct rules", self.direct_rules),
            ("abducible rules", self.abducible_rules),
            ("dual rules", self.dual_rules),
            ("integrity constraint rules", self.ic_rules),
        )
        lines = [
            f"% ic_mode={self.options.ic_mode} tabling_mode={self.options.tabling_mode}",
            "% tabled: " + ", ".join(f"{name}/{arity}" for name, arity in sorted(self.tabling_set)),
        ]
        for title, rules in sections:
            if not rules:
                continue
            lines.append(f"% {title}")
            lines.extend(str(rule) for rule in rules)
        return "\n".join(lines) + "\n"
