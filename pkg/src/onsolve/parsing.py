"""Expression grammar for functions and algebra-element literals.

Grammar (whitespace insignificant)::

    expr    := term ('+' term)*
    term    := factor (('*')? factor)*
    factor  := primary "'"*
    primary := '0' | '1' | atom | var | '(' expr ')'
    atom    := 'a' digits
    var     := 'x' digits          (x1 is the first variable)

Juxtaposition multiplies, postfix ``'`` complements and binds tightest.
For convenience the bare letters ``x y z w`` are accepted as aliases for
``x1 x2 x3 x4``, and callers may supply their own variable names instead.
Element literals use the same grammar without variables.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra, AlgebraElement, complement, join, meet


class ExpressionSyntaxError(ValueError):
    """Syntax error or unknown symbol, with its character position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


# ---------------------------------------------------------------------------
# Abstract syntax


class Expr:
    """Node of an expression tree; evaluable at a tuple of elements."""

    def evaluate(self, args: tuple[AlgebraElement, ...], algebra: Algebra) -> AlgebraElement:
        raise NotImplementedError


@dataclass(frozen=True)
class Var(Expr):
    index: int  # 0-based

    def evaluate(self, args, algebra):
        return args[self.index]


@dataclass(frozen=True)
class Const(Expr):
    value: AlgebraElement

    def evaluate(self, args, algebra):
        return self.value


@dataclass(frozen=True)
class Sum(Expr):
    parts: tuple[Expr, ...]

    def evaluate(self, args, algebra):
        out = algebra.zero
        for p in self.parts:
            out = join(out, p.evaluate(args, algebra))
        return out


@dataclass(frozen=True)
class Prod(Expr):
    parts: tuple[Expr, ...]

    def evaluate(self, args, algebra):
        out = algebra.one
        for p in self.parts:
            out = meet(out, p.evaluate(args, algebra))
        return out


@dataclass(frozen=True)
class Not(Expr):
    arg: Expr

    def evaluate(self, args, algebra):
        return complement(self.arg.evaluate(args, algebra))


# ---------------------------------------------------------------------------
# Tokenizer

_LETTER_ALIASES = {"x": 1, "y": 2, "z": 3, "w": 4}  # 1-based variable numbers


@dataclass(frozen=True)
class _Token:
    kind: str  # NAME, ZERO, ONE, PLUS, STAR, PRIME, LPAREN, RPAREN, END
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c == "0":
            tokens.append(_Token("ZERO", c, i))
            i += 1
        elif c == "1":
            tokens.append(_Token("ONE", c, i))
            i += 1
        elif c == "+":
            tokens.append(_Token("PLUS", c, i))
            i += 1
        elif c == "*":
            tokens.append(_Token("STAR", c, i))
            i += 1
        elif c == "'":
            tokens.append(_Token("PRIME", c, i))
            i += 1
        elif c == "(":
            tokens.append(_Token("LPAREN", c, i))
            i += 1
        elif c == ")":
            tokens.append(_Token("RPAREN", c, i))
            i += 1
        elif c.isalpha():
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(_Token("NAME", text[i:j], i))
            i = j
        else:
            raise ExpressionSyntaxError(f"unexpected character {c!r}", i)
    tokens.append(_Token("END", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, n: int, algebra: Algebra,
                 var_names: dict[str, int] | None):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.n = n
        self.algebra = algebra
        self.var_names = var_names  # name -> 0-based index, or None

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def next(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def parse(self) -> Expr:
        e = self.expr()
        tok = self.peek()
        if tok.kind != "END":
            raise ExpressionSyntaxError(f"unexpected {tok.text!r}", tok.pos)
        return e

    def expr(self) -> Expr:
        parts = [self.term()]
        while self.peek().kind == "PLUS":
            self.next()
            parts.append(self.term())
        return parts[0] if len(parts) == 1 else Sum(tuple(parts))

    _FACTOR_START = {"ZERO", "ONE", "NAME", "LPAREN"}

    def term(self) -> Expr:
        parts = [self.factor()]
        while True:
            tok = self.peek()
            if tok.kind == "STAR":
                self.next()
                parts.append(self.factor())
            elif tok.kind in self._FACTOR_START:
                parts.append(self.factor())
            else:
                break
        return parts[0] if len(parts) == 1 else Prod(tuple(parts))

    def factor(self) -> Expr:
        e = self.primary()
        while self.peek().kind == "PRIME":
            self.next()
            e = Not(e)
        return e

    def primary(self) -> Expr:
        tok = self.next()
        if tok.kind == "ZERO":
            return Const(self.algebra.zero)
        if tok.kind == "ONE":
            return Const(self.algebra.one)
        if tok.kind == "LPAREN":
            e = self.expr()
            closing = self.next()
            if closing.kind != "RPAREN":
                raise ExpressionSyntaxError("expected ')'", closing.pos)
            return e
        if tok.kind == "NAME":
            return self.resolve_name(tok)
        raise ExpressionSyntaxError(f"unexpected {tok.text or 'end of input'!r}", tok.pos)

    def resolve_name(self, tok: _Token) -> Expr:
        name = tok.text
        if self.var_names is not None:
            if name in self.var_names:
                return Var(self.var_names[name])
            if name[0] == "a" and len(name) > 1 and name[1:].isdigit():
                return self.resolve_atom(tok)
            raise ExpressionSyntaxError(f"unknown variable {name!r}", tok.pos)
        if name[0] == "x" and len(name) > 1:
            number = int(name[1:])
            if not 1 <= number <= self.n:
                raise ExpressionSyntaxError(
                    f"variable {name!r} outside x1..x{self.n}", tok.pos)
            return Var(number - 1)
        if name[0] == "a" and len(name) > 1:
            return self.resolve_atom(tok)
        if name in _LETTER_ALIASES and _LETTER_ALIASES[name] <= self.n:
            return Var(_LETTER_ALIASES[name] - 1)
        raise ExpressionSyntaxError(f"unknown symbol {name!r}", tok.pos)

    def resolve_atom(self, tok: _Token) -> Expr:
        atom = int(tok.text[1:])
        if atom >= self.algebra.atom_count:
            raise ExpressionSyntaxError(
                f"unknown atom {tok.text!r} (algebra has "
                f"{self.algebra.atom_count} atoms)", tok.pos)
        return Const(self.algebra.atom(atom))


def parse_expr(text: str, n: int, algebra: Algebra,
               var_names: list[str] | None = None) -> Expr:
    """Parse an n-variable expression into its syntax tree.

    ``var_names`` replaces the default scheme (x1..xn plus the x/y/z/w
    aliases) with explicit names, one per variable.
    """
    names = None
    if var_names is not None:
        if len(var_names) != n:
            raise ValueError(f"expected {n} variable names, got {len(var_names)}")
        names = {name: i for i, name in enumerate(var_names)}
        if len(names) != n:
            raise ValueError("variable names must be distinct")
    return _Parser(text, n, algebra, names).parse()


def parse_element(text: str, algebra: Algebra) -> AlgebraElement:
    """Parse a constant literal (no variables) into an algebra element."""
    expr = _Parser(text, 0, algebra, None).parse()
    return expr.evaluate((), algebra)
