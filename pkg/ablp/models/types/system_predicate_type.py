from enum import StrEnum


class SystemPredicateType(StrEnum):
    """Reserved predicates the transformation emits and the engine evaluates natively.

    Attributes:
        PRODUCE_CONTEXT (str): ``produce_context(O, I, E)`` merges a tabled answer E into context I.
        INSERT_ABDUCIBLE (str): ``insert_abducible(A, I, O)`` adds one abducible literal to I.
        ASSERT_IC (str): ``assert_IC(E)`` stores an integrity-constraint pattern list at setup.
        TEST_IC (str): ``test_IC(I)`` succeeds iff no stored pattern list embeds into I.
        HEAD_MISMATCH (str): ``head_mismatch(Args, Head)`` succeeds iff the call arguments
            do not unify with a rule head.
        NOT_FALSE (str): ``not_false(I, O)`` is the dual of the integrity constraints.
    """

    PRODUCE_CONTEXT = "produce_context"
    INSERT_ABDUCIBLE = "insert_abducible"
    ASSERT_IC = "assert_IC"
    TEST_IC = "test_IC"
    HEAD_MISMATCH = "head_mismatch"
    NOT_FALSE = "not_false"

    @classmethod
    def is_reserved(cls, name: str) -> bool:
        """Checks whether a predicate name belongs to a system predicate.

        Args:
            name: The predicate name to check.

        Returns:
            bool: True when the name is reserved.
        """
        return name in cls._value2member_map_
