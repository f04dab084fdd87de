"""Parser for the shared text grammar.

    expr    := term ('+' term)*
    term    := factor+                  (juxtaposition)
    factor  := atom ('^' INT)?
    atom    := 'Sq'INT | 'i1' | 'i2' | 'w'INT | '0' | '1' | '(' expr ')'
    twisted := term '|' term ('+' term '|' term)*

Inside a polynomial factor, Sq operators act on everything to their right,
so ``i1 Sq1 i2`` is i1 times Sq1(i2).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Union

from .steenrod import SteenrodElement
from .twisted import TwistedElement
from .unstable import K, Ambient, BOType, KType, PolyElement, apply_word


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__("%s (at position %d)" % (message, position))
        self.position = position


# ------------------------------------------------------------------------ AST


@dataclass(frozen=True)
class Num:
    value: int
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Sq:
    n: int
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Var:
    name: str  # "i1", "i2" or "w<n>"
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exp: int


@dataclass(frozen=True)
class Prod:
    factors: tuple


@dataclass(frozen=True)
class Sum:
    terms: tuple


@dataclass(frozen=True)
class Tensor:
    left: "Node"
    right: "Node"
    pos: int = field(default=0, compare=False)


Node = Union[Num, Sq, Var, Pow, Prod, Sum, Tensor]

_TOKEN = re.compile(r"\s*(?:(Sq\d+)|(i[12])|(w\d+)|(\d+)|([+^()|]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError("unexpected character %r" % text[start], start)
        kinds = ("sq", "iota", "w", "int", "op")
        for kind, val in zip(kinds, m.groups()):
            if val is not None:
                out.append((kind, val, m.start(m.lastindex)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, val: str):
        kind, v, pos = self.take()
        if v != val or kind != "op":
            raise ParseError("expected %r" % val, pos)

    def top(self) -> Node:
        terms = [self.tterm()]
        while self.peek()[1] == "+" and self.peek()[0] == "op":
            self.take()
            terms.append(self.tterm())
        kind, v, pos = self.peek()
        if kind != "end":
            raise ParseError("unexpected %r" % v, pos)
        tensors = [isinstance(t, Tensor) for t in terms]
        if any(tensors) and not all(tensors):
            pos = next(self._first_pos(t) for t, flag in zip(terms, tensors) if not flag)
            raise ParseError("every twisted term needs exactly one '|'", pos)
        return terms[0] if len(terms) == 1 else Sum(tuple(terms))

    def _first_pos(self, node) -> int:
        for attr in ("pos",):
            if hasattr(node, attr) and getattr(node, attr):
                return getattr(node, attr)
        if isinstance(node, Prod):
            return self._first_pos(node.factors[0])
        if isinstance(node, Pow):
            return self._first_pos(node.base)
        return 0

    def tterm(self) -> Node:
        left = self.term()
        kind, v, pos = self.peek()
        if kind == "op" and v == "|":
            self.take()
            right = self.term()
            kind2, v2, pos2 = self.peek()
            if kind2 == "op" and v2 == "|":
                raise ParseError("a twisted term has exactly one '|'", pos2)
            _check_poly_side(left)
            _check_steenrod_side(right)
            return Tensor(left, right, pos)
        return left

    def expr(self) -> Node:
        terms = [self.term()]
        while self.peek()[1] == "+" and self.peek()[0] == "op":
            self.take()
            terms.append(self.term())
        return terms[0] if len(terms) == 1 else Sum(tuple(terms))

    def term(self) -> Node:
        factors = []
        while True:
            kind, v, pos = self.peek()
            if kind in ("sq", "iota", "w", "int") or (kind == "op" and v == "("):
                factors.append(self.factor())
            else:
                break
        if not factors:
            kind, v, pos = self.peek()
            raise ParseError("expected a term" if kind != "end" else "unexpected end of input", pos)
        return factors[0] if len(factors) == 1 else Prod(tuple(factors))

    def factor(self) -> Node:
        base = self.atom()
        kind, v, pos = self.peek()
        if kind == "op" and v == "^":
            self.take()
            kind, v, pos = self.take()
            if kind != "int":
                raise ParseError("expected an integer exponent", pos)
            return Pow(base, int(v))
        return base

    def atom(self) -> Node:
        kind, v, pos = self.take()
        if kind == "sq":
            return Sq(int(v[2:]), pos)
        if kind == "iota":
            return Var(v, pos)
        if kind == "w":
            if int(v[1:]) < 1:
                raise ParseError("Stiefel-Whitney classes start at w1", pos)
            return Var(v, pos)
        if kind == "int":
            if v not in ("0", "1"):
                raise ParseError("only the constants 0 and 1 are allowed", pos)
            return Num(int(v), pos)
        if kind == "op" and v == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        raise ParseError("unexpected %r" % (v or "end of input"), pos)


def _walk(node: Node):
    yield node
    if isinstance(node, Pow):
        yield from _walk(node.base)
    elif isinstance(node, Prod):
        for f in node.factors:
            yield from _walk(f)
    elif isinstance(node, Sum):
        for t in node.terms:
            yield from _walk(t)
    elif isinstance(node, Tensor):
        yield from _walk(node.left)
        yield from _walk(node.right)


def _check_steenrod_side(node: Node) -> None:
    for n in _walk(node):
        if isinstance(n, Var):
            raise ParseError("polynomial variable %s on the Steenrod side of '|'" % n.name, n.pos)


def _check_poly_side(node: Node) -> None:
    if _is_operator(node):
        raise ParseError("Steenrod operation on the polynomial side of '|' has no operand", _pos_of(node))
    for n in _walk(node):
        if isinstance(n, Var) and n.name.startswith("w"):
            raise ParseError("twisted terms take i1, i2 on the left of '|'", n.pos)


def _pos_of(node: Node) -> int:
    for n in _walk(node):
        if isinstance(n, (Sq, Var, Num)):
            return n.pos
    return 0


def _is_operator(node: Node) -> bool:
    """True for factors that denote Steenrod operations (Sq present, no variables)."""
    kinds = [type(n) for n in _walk(node)]
    return Sq in kinds and Var not in kinds


def parse(text: str) -> Node:
    """Parse text in the shared grammar; raises ParseError with a position."""
    return _Parser(text).top()


# ------------------------------------------------------------------ rendering


def render(node: Node) -> str:
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Sq):
        return "Sq%d" % node.n
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Pow):
        base = render(node.base)
        if isinstance(node.base, (Prod, Sum, Pow)):
            base = "(%s)" % base
        return "%s^%d" % (base, node.exp)
    if isinstance(node, Prod):
        return " ".join("(%s)" % render(f) if isinstance(f, (Prod, Sum)) else render(f) for f in node.factors)
    if isinstance(node, Sum):
        return " + ".join("(%s)" % render(t) if isinstance(t, Sum) else render(t) for t in node.terms)
    if isinstance(node, Tensor):
        return "%s | %s" % (render(node.left), render(node.right))
    raise TypeError(node)


# ----------------------------------------------------------------- evaluation


def kind_of(node: Node) -> str:
    """'twisted', 'bo', 'k' or 'steenrod' depending on the atoms present."""
    names = [n.name for n in _walk(node) if isinstance(n, Var)]
    if any(isinstance(n, Tensor) for n in _walk(node)):
        return "twisted"
    if any(x.startswith("w") for x in names):
        if any(x.startswith("i") for x in names):
            raise ParseError("cannot mix i and w variables", _pos_of(node))
        return "bo"
    if names:
        return "k"
    return "steenrod"


def eval_steenrod(node: Node) -> SteenrodElement:
    if isinstance(node, Num):
        return SteenrodElement.one() if node.value else SteenrodElement.zero()
    if isinstance(node, Sq):
        return SteenrodElement.sq(node.n)
    if isinstance(node, Pow):
        base, out = eval_steenrod(node.base), SteenrodElement.one()
        for _ in range(node.exp):
            out = out * base
        return out
    if isinstance(node, Prod):
        out = SteenrodElement.one()
        for f in node.factors:
            out = out * eval_steenrod(f)
        return out
    if isinstance(node, Sum):
        out = SteenrodElement.zero()
        for t in node.terms:
            out = out + eval_steenrod(t)
        return out
    if isinstance(node, Var):
        raise ParseError("variable %s in a Steenrod expression" % node.name, node.pos)
    raise ParseError("'|' not allowed here", getattr(node, "pos", 0))


def _variable(name: str, ambient: Ambient, pos: int) -> PolyElement:
    if isinstance(ambient, KType):
        if not name.startswith("i"):
            raise ParseError("%s is not a variable of H*(K)" % name, pos)
        return PolyElement.generator(ambient, int(name[1]) - 1)
    if not name.startswith("w"):
        raise ParseError("%s is not a variable of %s" % (name, ambient), pos)
    j = int(name[1:])
    if j > ambient.n:
        raise ParseError("%s exceeds the variable bound %d" % (name, ambient.n), pos)
    return PolyElement.generator(ambient, j - 1)


def _apply_operator(op: SteenrodElement, x: PolyElement) -> PolyElement:
    out = PolyElement.zero(x.ambient)
    for m in op.terms:
        out = out + apply_word(m, x)
    return out


def eval_poly(node: Node, ambient: Ambient = K) -> PolyElement:
    if isinstance(node, Num):
        return PolyElement.one(ambient) if node.value else PolyElement.zero(ambient)
    if isinstance(node, Var):
        return _variable(node.name, ambient, node.pos)
    if isinstance(node, Sum):
        out = PolyElement.zero(ambient)
        for t in node.terms:
            out = out + eval_poly(t, ambient)
        return out
    if isinstance(node, Pow) and not _is_operator(node):
        return eval_poly(node.base, ambient) ** node.exp
    if isinstance(node, Prod):
        value = None
        for f in reversed(node.factors):
            if _is_operator(f):
                if value is None:
                    raise ParseError("Steenrod operation without an operand", _pos_of(f))
                value = _apply_operator(eval_steenrod(f), value)
            else:
                x = eval_poly(f, ambient)
                value = x if value is None else x * value
        return value
    if isinstance(node, (Sq, Pow)):
        raise ParseError("Steenrod operation without an operand", _pos_of(node))
    raise ParseError("'|' not allowed here", getattr(node, "pos", 0))


def eval_twisted(node: Node) -> TwistedElement:
    terms = node.terms if isinstance(node, Sum) else (node,)
    if not any(isinstance(t, Tensor) for t in terms):
        kind = kind_of(node)
        if kind == "k":
            return TwistedElement.from_poly(eval_poly(node, K))
        if kind == "steenrod":
            return TwistedElement.from_steenrod(eval_steenrod(node))
        raise ParseError("w variables are not part of the twisted algebra", _pos_of(node))
    out = TwistedElement.zero()
    for t in terms:
        out = out + TwistedElement.tensor(eval_poly(t.left, K), eval_steenrod(t.right))
    return out


def parse_steenrod(text: str) -> SteenrodElement:
    return eval_steenrod(parse(text))


def parse_twisted(text: str) -> TwistedElement:
    return eval_twisted(parse(text))


def parse_poly(text: str, ambient: Ambient = K) -> PolyElement:
    return eval_poly(parse(text), ambient)


def parse_bo(text: str, n: int) -> PolyElement:
    return eval_poly(parse(text), BOType(n))
