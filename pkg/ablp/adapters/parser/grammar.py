"""Grammar of the ``.ablp`` abductive program format (lark, LALR).

A program is a sequence of clauses, each ending with a full stop:

* ``abducible q/1, r/1.`` declares abducible predicates by name and arity;
* ``ic :- q(X), r(X).`` declares an integrity constraint (a denial);
* ``p(X) :- q(0), not s(X).`` is a rule and ``b(1).`` a fact.

``not`` negates the atom that follows it, ``%`` starts a comment running to the
end of the line, variables start with an uppercase letter or ``_`` and a lone ``_``
is anonymous. Constants start with a lowercase letter or are (signed) integers.
"""

ABLP_GRAMMAR = r"""
program: _clause*

query: body "."?

context: "[" [body] "]" "."?
       | [body] "."?

_clause: abducible_decl
       | ic_clause
       | rule_clause

abducible_decl: "abducible" predicate_spec ("," predicate_spec)* "."
predicate_spec: NAME "/" INTEGER

ic_clause: "ic" [":-" [body]] "."
rule_clause: atom [":-" body] "."

body: literal ("," literal)*

literal: atom -> positive
       | "not" atom -> negative

atom: NAME ["(" arguments ")"]
arguments: term ("," term)*

term: VARIABLE -> variable
    | INTEGER -> integer
    | NAME -> constant
    | NAME "(" arguments ")" -> compound

NAME: /[a-z][A-Za-z0-9_]*/
VARIABLE: /[A-Z_][A-Za-z0-9_]*/
INTEGER: /-?[0-9]+/
COMMENT: /%[^\n]*/

%import common.WS
%ignore WS
%ignore COMMENT
"""
