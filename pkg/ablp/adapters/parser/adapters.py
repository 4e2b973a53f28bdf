import logging
from functools import cache
from typing import Any

from lark import Lark, Token, Transformer, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, UnexpectedToken, VisitError

from ablp.adapters.parser.grammar import ABLP_GRAMMAR
from ablp.adapters.parser.ports import ParserPort
from ablp.models.entities.context import Context
from ablp.models.entities.framework import AbductiveFramework, PredicateKey
from ablp.models.entities.literals import Literal
from ablp.models.entities.rules import IntegrityConstraint, Rule
from ablp.models.entities.source_program import SourceProgram
from ablp.models.entities.terms import ANONYMOUS_PREFIX, Compound, Const, Int, Term, Var
from ablp.models.errors import (
    AbducibleRuleHeadError,
    AbductiveSyntaxError,
    BaseError,
    EmptyIntegrityConstraintError,
    ReservedPredicateError,
)
from ablp.models.types.system_predicate_type import SystemPredicateType

logger = logging.getLogger(__name__)


@cache
def _lark_parser() -> Lark:
    return Lark(
        ABLP_GRAMMAR,
        parser="lalr",
        start=["program", "query", "context"],
        propagate_positions=True,
        maybe_placeholders=True,
    )


class _FrameworkBuilder(Transformer):
    """Builds domain values bottom-up from the parse tree."""

    def __init__(self) -> None:
        super().__init__()
        self._anonymous = 0

    def variable(self, children: list[Token]) -> Var:
        name = str(children[0])
        if name == "_":
            self._anonymous += 1
            return Var(f"{ANONYMOUS_PREFIX}{self._anonymous}")
        return Var(name)

    def integer(self, children: list[Token]) -> Int:
        return Int(int(children[0]))

    def constant(self, children: list[Token]) -> Const:
        return Const(str(children[0]))

    def compound(self, children: list[Any]) -> Compound:
        return Compound(str(children[0]), children[1])

    def arguments(self, children: list[Term]) -> tuple[Term, ...]:
        return tuple(children)

    def atom(self, children: list[Any]) -> Literal:
        name = str(children[0])
        _check_reserved(name)
        return Literal(name, children[1] or ())

    def positive(self, children: list[Literal]) -> Literal:
        return children[0]

    def negative(self, children: list[Literal]) -> Literal:
        return children[0].complement()

    def body(self, children: list[Literal]) -> tuple[Literal, ...]:
        return tuple(children)

    def predicate_spec(self, children: list[Token]) -> tuple[PredicateKey, int]:
        name, arity = str(children[0]), children[1]
        if int(arity) < 0:
            raise AbductiveSyntaxError(line=arity.line, column=arity.column, found=str(arity))
        _check_reserved(name)
        return (name, int(arity)), children[0].line or 0

    def abducible_decl(self, children: list[tuple[PredicateKey, int]]) -> tuple[str, list[PredicateKey], int]:
        return "abducible", [key for key, _ in children], children[0][1]

    @v_args(meta=True)
    def ic_clause(self, meta: Any, children: list[Any]) -> tuple[str, IntegrityConstraint, int]:
        if not children or children[0] is None:
            raise EmptyIntegrityConstraintError(line=meta.line)
        return "ic", IntegrityConstraint(children[0]), meta.line

    @v_args(meta=True)
    def rule_clause(self, meta: Any, children: list[Any]) -> tuple[str, Rule, int]:
        head, body = children
        return "rule", Rule(head, body or ()), meta.line

    def program(self, children: list[Any]) -> list[Any]:
        return children

    def query(self, children: list[Any]) -> list[Literal]:
        return list(children[0])

    def context(self, children: list[Any]) -> list[Literal]:
        return list(children[0] or ())


def _check_reserved(name: str) -> None:
    if SystemPredicateType.is_reserved(name):
        raise ReservedPredicateError(predicate=name)


class LarkParserAdapter(ParserPort):
    """Parser for the ``.ablp`` format built on a lark LALR grammar.

    Examples:
        >>> parser = LarkParserAdapter()
        >>> framework = parser.parse_program(SourceProgram("abducible a/1."))
        >>> sorted(framework.abducibles)
        [('a', 1)]
    """

    def parse_program(self, source: SourceProgram) -> AbductiveFramework:
        clauses = self._parse(source.text, "program", source.origin)
        rules: list[tuple[Rule, int]] = []
        abducibles: dict[PredicateKey, None] = {}
        ics: list[IntegrityConstraint] = []
        for kind, value, line in clauses:
            if kind == "abducible":
                abducibles.update(dict.fromkeys(value))
            elif kind == "ic":
                ics.append(value)
            else:
                rules.append((value, line))
        for rule, line in rules:
            if rule.head.key in abducibles:
                raise AbducibleRuleHeadError(predicate=f"{rule.head.predicate}/{rule.head.arity}", line=line)
        framework = AbductiveFramework(
            program=tuple(rule for rule, _ in rules),
            abducibles=frozenset(abducibles),
            ics=tuple(ics),
            abducible_order=tuple(abducibles),
        )
        logger.debug(
            "Parsed %s: %d rules, %d abducibles, %d ics",
            source.origin,
            len(framework.program),
            len(framework.abducibles),
            len(framework.ics),
        )
        return framework

    def parse_query(self, text: str) -> list[Literal]:
        return self._parse(text, "query", "<query>")

    def parse_context(self, text: str) -> Context:
        return Context.of(self._parse(text, "context", "<context>"))

    def pretty_print(self, framework: AbductiveFramework) -> str:
        lines: list[str] = []
        if framework.abducible_order:
            specs = ", ".join(f"{name}/{arity}" for name, arity in framework.abducible_order)
            lines.append(f"abducible {specs}.")
        lines.extend(str(rule) for rule in framework.program)
        lines.extend(str(ic) for ic in framework.ics)
        return "".join(f"{line}\n" for line in lines)

    @staticmethod
    def _parse(text: str, start: str, origin: str) -> Any:
        try:
            tree = _lark_parser().parse(text, start=start)
            return _FrameworkBuilder().transform(tree)
        except VisitError as error:
            if isinstance(error.orig_exc, BaseError):
                if isinstance(error.orig_exc, AbductiveSyntaxError):
                    error.orig_exc.additional_data["origin"] = origin
                raise error.orig_exc from None
            raise
        except UnexpectedEOF as error:
            raise AbductiveSyntaxError(
                line=text.count("\n") + 1,
                column=len(text.rsplit("\n", 1)[-1]) + 1,
                origin=origin,
                found="end of input",
            ) from error
        except UnexpectedCharacters as error:
            raise AbductiveSyntaxError(
                line=error.line,
                column=error.column,
                origin=origin,
                found=error.char,
            ) from error
        except UnexpectedToken as error:
            found = "end of input" if error.token.type == "$END" else str(error.token)
            raise AbductiveSyntaxError(line=error.line, column=error.column, origin=origin, found=found) from error
        except UnexpectedInput as error:
            raise AbductiveSyntaxError(line=error.line, column=error.column, origin=origin) from error
