import itertools
import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from ablp.helpers.utils.program_utils import ProgramUtils
from ablp.models.entities import AbductiveFramework, Compound, Context, Literal, Substitution, Term
from ablp.models.errors import NonGroundQueryError, UnsupportedTermError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class GroundRule:
    """A ground normal rule split into positive and negative body atoms."""

    head: Literal
    positive: tuple[Literal, ...] = ()
    negative: tuple[Literal, ...] = ()


@dataclass(frozen=True)
class GroundProgram:
    """Ground instances of a framework over its constant universe.

    Attributes:
        rules: Ground rules whose heads the query or a constraint depends on.
        ics: Ground constraint bodies.
        universe: Constants the variables were instantiated with.
        abducibles: Ground abducible atoms the query or a constraint depends on.
    """

    rules: tuple[GroundRule, ...]
    ics: tuple[tuple[Literal, ...], ...]
    universe: tuple[Term, ...]
    abducibles: tuple[Literal, ...]


def _instances(literals: Sequence[Literal], universe: Sequence[Term]) -> Iterable[tuple[Literal, ...]]:
    variables = list(dict.fromkeys(var for literal in literals for var in literal.variables()))
    if not variables:
        yield tuple(literals)
        return
    for combination in itertools.product(universe, repeat=len(variables)):
        substitution = Substitution(dict(zip(variables, combination, strict=True)))
        yield tuple(substitution.apply(literal) for literal in literals)  # type: ignore[misc]


def _reject_compounds(literals: Iterable[Literal]) -> None:
    for literal in literals:
        for arg in literal.args:
            if isinstance(arg, Compound):
                raise UnsupportedTermError(term=str(arg))


def ground_program(
    framework: AbductiveFramework,
    query: Sequence[Literal] = (),
    initial: Context | None = None,
) -> GroundProgram:
    """Instantiates rules and constraints over the constants of the framework and query.

    Only rules and abducibles reachable from the query, the constraints and the initial
    context in the ground dependency graph are kept.

    Raises:
        NonGroundQueryError: If a query literal has variables.
        UnsupportedTermError: If a compound term occurs anywhere.

    Examples:
        >>> ground = ground_program(framework, parser.parse_query("p(0)."))
        >>> len(ground.universe)
        2
    """
    for literal in query:
        if not literal.is_ground():
            raise NonGroundQueryError(query=", ".join(str(item) for item in query))
    _reject_compounds(query)
    for rule in framework.program:
        _reject_compounds((rule.head, *rule.body))
    for ic in framework.ics:
        _reject_compounds(ic.body)

    initial = initial or Context.empty()
    universe = set(framework.constants) | ProgramUtils.constants_of(query) | ProgramUtils.constants_of(initial)
    ordered = tuple(sorted(universe, key=lambda term: term.sort_key()))

    by_head: dict[Literal, list[GroundRule]] = {}
    for rule in framework.program:
        for instance in _instances((rule.head, *rule.body), ordered):
            head, *body = instance
            ground = GroundRule(
                head=head,
                positive=tuple(literal for literal in body if literal.positive),
                negative=tuple(literal.atom() for literal in body if not literal.positive),
            )
            by_head.setdefault(head, []).append(ground)
    ics = tuple(instance for ic in framework.ics for instance in _instances(ic.body, ordered))

    roots = [literal.atom() for literal in query]
    roots.extend(literal.atom() for body in ics for literal in body)
    roots.extend(literal.atom() for literal in initial)
    seen: set[Literal] = set()
    abducibles: dict[Literal, None] = {}
    rules: list[GroundRule] = []
    stack = list(reversed(roots))
    while stack:
        atom = stack.pop()
        if atom in seen:
            continue
        seen.add(atom)
        if framework.is_abducible(atom):
            abducibles[atom] = None
            continue
        for rule in by_head.get(atom, ()):
            rules.append(rule)
            stack.extend(reversed((*rule.positive, *rule.negative)))
    logger.debug(
        "Grounded %d rules and %d constraints over %d constants; %d relevant abducibles",
        len(rules),
        len(ics),
        len(ordered),
        len(abducibles),
    )
    return GroundProgram(
        rules=tuple(rules),
        ics=ics,
        universe=ordered,
        abducibles=tuple(sorted(abducibles, key=Literal.sort_key)),
    )
