"""Recursive-descent parser for closed-form sequences in n.

Grammar (whitespace-insensitive)::

    expr     := term (('+' | '-') term)*
    term     := unary (('*' | '/') unary)*
    unary    := '-' unary | factor
    factor   := base ('^' exponent)?
    exponent := signed-integer | '(' signed-integer ('/' positive-integer)? ')'
    base     := 'n' | rational | '(' expr ')' | 'sqrt' '(' expr ')' | 'eps' | 'omega'
    rational := integer ('/' positive-integer)?

``eps``, ``omega`` and parenthesized rational exponents are accepted only with
``allow_infinitesimals=True`` (the LC grammar), and rational exponents only on those atoms.
A minus directly in front of a bare numeric literal folds into a negative constant.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from loguru import logger

from sixthop.exceptions import ExprLimitError, ExprSyntaxError
from sixthop.sequences.ast import (
    MAX_DEPTH,
    MAX_EXPONENT,
    MAX_NODES,
    Add,
    Const,
    Div,
    Eps,
    Index,
    Mul,
    Neg,
    Omega,
    Pow,
    SeqExpr,
    Sqrt,
    Sub,
)

MAX_INPUT_LENGTH = 10_000

_TOKEN_PATTERN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(.))")

_KEYWORDS = {"n", "sqrt", "eps", "omega"}


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "name", "op", "end"
    text: str
    position: int


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_PATTERN.match(text, pos)
        if match is None:
            break
        number, name, op = match.groups()
        start = match.start(match.lastindex) if match.lastindex else match.end()
        if number is not None:
            tokens.append(Token("num", number, start))
        elif name is not None:
            if name not in _KEYWORDS:
                raise ExprSyntaxError(f"unknown identifier '{name}'", start)
            tokens.append(Token("name", name, start))
        elif op is not None:
            if op not in "+-*/^()":
                raise ExprSyntaxError(f"unexpected character '{op}'", start)
            tokens.append(Token("op", op, start))
        pos = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, allow_infinitesimals: bool):
        self.tokens = tokenize(text)
        self.index = 0
        self.allow_infinitesimals = allow_infinitesimals
        self.nodes = 0
        self.nesting = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _peek(self, offset: int = 1) -> Token:
        return self.tokens[min(self.index + offset, len(self.tokens) - 1)]

    def _advance(self) -> Token:
        token = self.current
        if token.kind != "end":
            self.index += 1
        return token

    def _accept(self, op: str) -> bool:
        if self.current.kind == "op" and self.current.text == op:
            self._advance()
            return True
        return False

    def _expect(self, op: str) -> Token:
        if self.current.kind == "op" and self.current.text == op:
            return self._advance()
        found = "end of input" if self.current.kind == "end" else f"'{self.current.text}'"
        raise ExprSyntaxError(f"expected '{op}', found {found}", self.current.position)

    def _node(self, node: SeqExpr, position: int) -> SeqExpr:
        self.nodes += 1
        if self.nodes > MAX_NODES:
            raise ExprLimitError(f"expression has more than {MAX_NODES} nodes", position)
        if node.depth > MAX_DEPTH:
            raise ExprLimitError(f"expression nesting exceeds depth {MAX_DEPTH}", position)
        return node

    def _enter(self, position: int) -> None:
        # guards the Python stack before the tree exists
        self.nesting += 1
        if self.nesting > MAX_DEPTH:
            raise ExprLimitError(f"expression nesting exceeds depth {MAX_DEPTH}", position)

    def _leave(self) -> None:
        self.nesting -= 1

    def parse(self) -> SeqExpr:
        expr = self.expr()
        if self.current.kind != "end":
            raise ExprSyntaxError(f"unexpected '{self.current.text}'", self.current.position)
        return expr

    def expr(self) -> SeqExpr:
        left = self.term()
        while self.current.kind == "op" and self.current.text in "+-":
            token = self._advance()
            right = self.term()
            node = Add(left, right) if token.text == "+" else Sub(left, right)
            left = self._node(node, token.position)
        return left

    def term(self) -> SeqExpr:
        left = self.unary()
        while self.current.kind == "op" and self.current.text in "*/":
            token = self._advance()
            right = self.unary()
            node = Mul(left, right) if token.text == "*" else Div(left, right)
            left = self._node(node, token.position)
        return left

    def unary(self) -> SeqExpr:
        if not (self.current.kind == "op" and self.current.text == "-"):
            return self.factor()
        token = self._advance()
        self._enter(token.position)
        try:
            if self.current.kind == "num":
                operand = self.factor()
                if isinstance(operand, Const):
                    return Const(-operand.value)
            else:
                operand = self.unary()
            return self._node(Neg(operand), token.position)
        finally:
            self._leave()

    def factor(self) -> SeqExpr:
        base_token = self.current
        base = self.base()
        if not self._accept("^"):
            return base
        exponent_position = self.current.position
        exponent = self.exponent(atomic=isinstance(base, (Eps, Omega)))
        if abs(exponent) > MAX_EXPONENT:
            raise ExprLimitError(f"exponent {exponent} exceeds the limit of {MAX_EXPONENT}", exponent_position)
        return self._node(Pow(base, exponent), base_token.position)

    def _integer(self) -> int:
        negative = self._accept("-")
        token = self.current
        if token.kind != "num":
            found = "end of input" if token.kind == "end" else f"'{token.text}'"
            raise ExprSyntaxError(f"expected an integer, found {found}", token.position)
        self._advance()
        return -int(token.text) if negative else int(token.text)

    def exponent(self, atomic: bool) -> Fraction:
        if not (self.current.kind == "op" and self.current.text == "("):
            return Fraction(self._integer())
        if not (atomic and self.allow_infinitesimals):
            raise ExprSyntaxError("rational exponents are only allowed on eps and omega", self.current.position)
        self._advance()
        value = Fraction(self._integer())
        if self._accept("/"):
            position = self.current.position
            denominator = self._integer()
            if denominator <= 0:
                raise ExprSyntaxError("exponent denominator must be positive", position)
            value /= denominator
        self._expect(")")
        return value

    def base(self) -> SeqExpr:
        token = self.current
        if token.kind == "num":
            self._advance()
            value = Fraction(int(token.text))
            if self.current.kind == "op" and self.current.text == "/" and self._peek().kind == "num":
                self._advance()
                denominator = self._advance()
                if int(denominator.text) == 0:
                    raise ExprSyntaxError("zero denominator in rational literal", denominator.position)
                value /= int(denominator.text)
            return self._node(Const(value), token.position)
        if token.kind == "name":
            self._advance()
            match token.text:
                case "n":
                    return self._node(Index(), token.position)
                case "sqrt":
                    self._expect("(")
                    self._enter(token.position)
                    try:
                        arg = self.expr()
                    finally:
                        self._leave()
                    self._expect(")")
                    return self._node(Sqrt(arg), token.position)
                case "eps" | "omega":
                    if not self.allow_infinitesimals:
                        raise ExprSyntaxError(
                            f"'{token.text}' is only allowed in Levi-Civita expressions", token.position
                        )
                    return self._node(Eps() if token.text == "eps" else Omega(), token.position)
        if token.kind == "op" and token.text == "(":
            self._advance()
            self._enter(token.position)
            try:
                inner = self.expr()
            finally:
                self._leave()
            self._expect(")")
            return inner
        found = "end of input" if token.kind == "end" else f"'{token.text}'"
        raise ExprSyntaxError(f"expected an operand, found {found}", token.position)


def parse_seq_expr(text: str, allow_infinitesimals: bool = False) -> SeqExpr:
    """Parse text into a SeqExpr.

    Raises:
        ExprSyntaxError: On malformed input, with the offending character offset.
        ExprLimitError: On inputs over the length, node, depth or exponent limits.
    """
    if len(text) > MAX_INPUT_LENGTH:
        raise ExprLimitError(f"input longer than {MAX_INPUT_LENGTH} characters", MAX_INPUT_LENGTH)
    expr = _Parser(text, allow_infinitesimals).parse()
    logger.debug(f"parsed {text!r} at depth {expr.depth}")
    return expr
