"""Names of the predicates the transformation generates."""

TABLED_SUFFIX = "_ab"
DUAL_PREFIX = "not_"
FALSE_PREDICATE = "false"
SETUP_PREDICATE = "U*"
ALTERNATIVE_MARK = "*"


def tabled_name(predicate: str) -> str:
    return f"{predicate}{TABLED_SUFFIX}"


def dual_name(predicate: str) -> str:
    return f"{DUAL_PREFIX}{predicate}"


def alternative_name(predicate: str, index: int) -> str:
    """Name of the falsification alternatives of the ``index``-th rule, counted from 1."""
    return f"{predicate}{ALTERNATIVE_MARK}{index}"


def ic_alternative_name(index: int) -> str:
    return alternative_name(FALSE_PREDICATE, index)


def setup_name(index: int | None = None) -> str:
    return SETUP_PREDICATE if index is None else f"{SETUP_PREDICATE}{index}"
