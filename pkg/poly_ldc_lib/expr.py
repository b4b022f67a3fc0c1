# poly_ldc_lib/expr.py
"""
Expression language over polynomials.

    let p = y^2 + 1;
    close(lin(2) @ p, y) <| rep(3)

`@` (or `⊗`) is the Dirichlet product, `<|` (or `◁`) substitution and `+` the
coproduct; `@` binds tighter than `<|`, which binds tighter than `+`, and all
three associate to the left. Literals follow the printed notation `3y^2 + y + 2`,
with superscript exponents (`3y²`) also accepted, so `--unicode` output parses
back.
"""

from dataclasses import dataclass
from typing import Dict, Optional, Tuple, Union

import pyparsing as pp

from .closure import close, coclose
from .errors import ParseError
from .monoidal import substitute, tensor
from .polycore import Polynomial, constant, coproduct, format_polynomial, linear, representable

pp.ParserElement.enable_packrat()


@dataclass(frozen=True)
class PolyLiteral:
    poly: Polynomial


@dataclass(frozen=True)
class Ref:
    name: str
    line: int = 1
    col: int = 1


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Call:
    """close(e1, e2) or coclose(e1, e2)."""

    name: str
    args: Tuple["Expr", "Expr"]


@dataclass(frozen=True)
class Builtin:
    """lin(n) or rep(n)."""

    name: str
    size: int


@dataclass(frozen=True)
class Let:
    bindings: Tuple[Tuple[str, "Expr"], ...]
    body: "Expr"


Expr = Union[PolyLiteral, Ref, BinOp, Call, Builtin, Let]

KEYWORDS = ("close", "coclose", "lin", "rep", "let", "y")
PRECEDENCE = {"+": 1, "<|": 2, "@": 3}
FROM_SUPERSCRIPTS = str.maketrans("⁰¹²³⁴⁵⁶⁷⁸⁹", "0123456789")


def _binop(op: str, left: Expr, right: Expr) -> Expr:
    if op == "+" and isinstance(left, PolyLiteral) and isinstance(right, PolyLiteral):
        return PolyLiteral(coproduct(left.poly, right.poly))
    return BinOp(op, left, right)


def _fold(tokens):
    items = tokens[0]
    result = items[0]
    for i in range(1, len(items), 2):
        result = _binop(items[i], result, items[i + 1])
    return result


def _monomial(tokens):
    count = tokens[0]
    exponent = tokens[2] if len(tokens) > 2 else 1
    return PolyLiteral(Polynomial((exponent,) * count))


def _ref(s, loc, tokens):
    return Ref(tokens[0], pp.lineno(loc, s), pp.col(loc, s))


def _build_grammar() -> pp.ParserElement:
    integer = pp.Word(pp.nums).set_name("integer").set_parse_action(lambda t: int(t[0]))
    reserved = pp.MatchFirst([pp.Keyword(word) for word in KEYWORDS])
    name = (~reserved + pp.Word(pp.alphas + "_", pp.alphanums + "_")).set_name("name")

    expr = pp.Forward().set_name("expression")

    y = pp.Regex(r"y(?![A-Za-z0-9_])").set_name("y")
    superscript = pp.Word("⁰¹²³⁴⁵⁶⁷⁸⁹").set_name("exponent")
    superscript.set_parse_action(lambda t: int(t[0].translate(FROM_SUPERSCRIPTS)))
    exponent = (pp.Suppress("^") - integer) | superscript
    monomial = (pp.Opt(integer, default=1) + y + pp.Opt(exponent)).set_parse_action(_monomial)
    literal = integer.copy().set_parse_action(lambda t: PolyLiteral(constant(int(t[0]))))

    call = (
        (pp.Keyword("coclose") | pp.Keyword("close"))
        + pp.Suppress("(")
        - expr
        + pp.Suppress(",")
        + expr
        + pp.Suppress(")")
    ).set_parse_action(lambda t: Call(t[0], (t[1], t[2])))
    builtin = (
        (pp.Keyword("lin") | pp.Keyword("rep")) + pp.Suppress("(") - integer + pp.Suppress(")")
    ).set_parse_action(lambda t: Builtin(t[0], t[1]))
    ref = name.copy().set_parse_action(_ref)

    operand = call | builtin | monomial | literal | ref
    expr <<= pp.infix_notation(
        operand,
        [
            (pp.Literal("@") | pp.Literal("⊗").set_parse_action(pp.replace_with("@")), 2, pp.OpAssoc.LEFT, _fold),
            (pp.Literal("<|") | pp.Literal("◁").set_parse_action(pp.replace_with("<|")), 2, pp.OpAssoc.LEFT, _fold),
            (pp.Literal("+"), 2, pp.OpAssoc.LEFT, _fold),
        ],
    )

    binding = pp.Group(pp.Keyword("let").suppress() - name + pp.Suppress("=") + expr + pp.Suppress(";"))
    program = pp.ZeroOrMore(binding) + expr + pp.StringEnd()

    def _program(tokens):
        *bindings, body = tokens
        if not bindings:
            return body
        return Let(tuple((group[0], group[1]) for group in bindings), body)

    return program.set_parse_action(_program)


GRAMMAR = _build_grammar()


def parse(text: str) -> Expr:
    """
    Parse an expression.

    Raises:
        ParseError: with the 1-based line and column of the first bad token.
    """
    try:
        return GRAMMAR.parse_string(text, parse_all=True)[0]
    except pp.ParseBaseException as e:
        expected = e.msg[len("Expected "):] if e.msg.startswith("Expected ") else e.msg
        raise ParseError(e.lineno, e.col, expected, text) from None


# Printing


def _precedence(e: Expr) -> int:
    if isinstance(e, BinOp):
        return PRECEDENCE[e.op]
    if isinstance(e, PolyLiteral) and " + " in format_polynomial(e.poly):
        return PRECEDENCE["+"]
    if isinstance(e, Let):
        return 0
    return 4


def format_expr(e: Expr, unicode: bool = False) -> str:
    """Print with the fewest parentheses that parse back to the same tree."""
    if isinstance(e, PolyLiteral):
        return format_polynomial(e.poly, unicode=unicode)
    if isinstance(e, Ref):
        return e.name
    if isinstance(e, Builtin):
        return f"{e.name}({e.size})"
    if isinstance(e, Call):
        return f"{e.name}({format_expr(e.args[0], unicode)}, {format_expr(e.args[1], unicode)})"
    if isinstance(e, Let):
        lines = [f"let {name} = {format_expr(value, unicode)};" for name, value in e.bindings]
        lines.append(format_expr(e.body, unicode))
        return "\n".join(lines)
    level = PRECEDENCE[e.op]
    left = format_expr(e.left, unicode)
    right = format_expr(e.right, unicode)
    if _precedence(e.left) < level:
        left = f"({left})"
    if _precedence(e.right) <= level:
        right = f"({right})"
    symbol = {"@": "⊗", "<|": "◁", "+": "+"}[e.op] if unicode else e.op
    return f"{left} {symbol} {right}"


# Evaluation


def evaluate_expr(e: Expr, env: Optional[Dict[str, Polynomial]] = None) -> Polynomial:
    """
    Compute the polynomial an expression denotes.

    Raises:
        ParseError: for a name that no `let` binds.
    """
    env = env or {}
    if isinstance(e, PolyLiteral):
        return e.poly
    if isinstance(e, Ref):
        if e.name not in env:
            raise ParseError(e.line, e.col, f"a name bound by let, got '{e.name}'")
        return env[e.name]
    if isinstance(e, Builtin):
        return linear(e.size) if e.name == "lin" else representable(e.size)
    if isinstance(e, Call):
        p, q = (evaluate_expr(arg, env) for arg in e.args)
        return close(p, q) if e.name == "close" else coclose(p, q)
    if isinstance(e, Let):
        scope = dict(env)
        for name, value in e.bindings:
            scope[name] = evaluate_expr(value, scope)
        return evaluate_expr(e.body, scope)
    left, right = evaluate_expr(e.left, env), evaluate_expr(e.right, env)
    if e.op == "@":
        return tensor(left, right)
    if e.op == "<|":
        return substitute(left, right)
    return coproduct(left, right)


def parse_polynomial(text: str) -> Polynomial:
    return evaluate_expr(parse(text))
