from collections.abc import Collection, Iterable
from dataclasses import dataclass

from ablp.models.entities import Literal
from ablp.models.types.truth_value_type import TruthValueType
from ablp.services.oracle.grounding import GroundRule

UNDEFINED_ATOM = Literal("$undefined")


@dataclass(frozen=True)
class ThreeValuedModel:
    """A well-founded model: true, undefined and false atoms partition the ground atoms.

    Atoms outside all three sets are false as well.
    """

    true_atoms: frozenset[Literal]
    undefined_atoms: frozenset[Literal]
    false_atoms: frozenset[Literal]

    def value(self, literal: Literal) -> TruthValueType:
        atom = literal.atom()
        if atom in self.true_atoms:
            result = TruthValueType.TRUE
        elif atom in self.undefined_atoms:
            result = TruthValueType.UNDEFINED
        else:
            result = TruthValueType.FALSE
        return result if literal.positive else result.negate()

    def conjunction(self, literals: Iterable[Literal]) -> TruthValueType:
        return min((self.value(literal) for literal in literals), default=TruthValueType.TRUE)


def _least_model(rules: Collection[GroundRule], assumed: frozenset[Literal]) -> frozenset[Literal]:
    """Least model of the rules whose negative atoms are all outside ``assumed``."""
    remaining: dict[int, int] = {}
    watchers: dict[Literal, list[int]] = {}
    active: list[GroundRule] = []
    queue: list[Literal] = []
    for rule in rules:
        if any(atom in assumed for atom in rule.negative):
            continue
        index = len(active)
        active.append(rule)
        body = set(rule.positive)
        remaining[index] = len(body)
        for atom in body:
            watchers.setdefault(atom, []).append(index)
        if not body:
            queue.append(rule.head)
    derived: set[Literal] = set()
    while queue:
        atom = queue.pop()
        if atom in derived:
            continue
        derived.add(atom)
        for index in watchers.get(atom, ()):
            remaining[index] -= 1
            if remaining[index] == 0:
                queue.append(active[index].head)
    return frozenset(derived)


def wfm(rules: Collection[GroundRule]) -> ThreeValuedModel:
    """Computes the well-founded model by alternating fixpoint.

    Starting from no true atoms, each round takes the atoms derivable while treating the
    current true atoms as the only ones assumed true for negation (an overestimate), then
    the atoms derivable under that overestimate (the next underestimate).

    Examples:
        >>> a, b = Literal("a"), Literal("b")
        >>> model = wfm([GroundRule(a, negative=(b,)), GroundRule(b, negative=(a,))])
        >>> model.value(a)
        <TruthValueType.UNDEFINED: 1>
    """
    atoms: set[Literal] = set()
    for rule in rules:
        atoms.add(rule.head)
        atoms.update(rule.positive)
        atoms.update(rule.negative)
    true_atoms: frozenset[Literal] = frozenset()
    while True:
        possible = _least_model(rules, true_atoms)
        following = _least_model(rules, possible)
        if following == true_atoms:
            break
        true_atoms = following
    return ThreeValuedModel(
        true_atoms=true_atoms,
        undefined_atoms=possible - true_atoms,
        false_atoms=frozenset(atoms - possible),
    )
