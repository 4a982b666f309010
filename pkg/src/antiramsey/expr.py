"""A small language for graphs.

    expr   := term ("+" term)*              disjoint union
    term   := factor ("v" factor)*          join
    factor := INT "*" factor | atom         copies
    atom   := K n | C n | P n | S n | M n | T(n,p) | Q(p,k)
            | fan(k) | fan(k,p) | petersen | "(" expr ")"

Whitespace is ignored. Integers are capped at 10**6 and the evaluated
graph at MAX_VERTICES vertices.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from . import graph as gr

MAX_INT = 10**6
MAX_VERTICES = 10_000

KEYWORDS = ("petersen", "fan", "K", "C", "P", "S", "M", "T", "Q", "v")


class ExprError(ValueError):
    def __init__(self, msg: str, pos: int | None = None, expected: tuple[str, ...] = ()):
        self.pos = pos
        self.expected = expected
        where = f"at position {pos}: " if pos is not None else ""
        super().__init__(where + msg)


@dataclass(frozen=True)
class Atom:
    kind: str
    args: tuple[int, ...]


@dataclass(frozen=True)
class Copies:
    count: int
    child: "Node"


@dataclass(frozen=True)
class Join:
    parts: tuple["Node", ...]


@dataclass(frozen=True)
class Union_:
    parts: tuple["Node", ...]


Node = Union[Atom, Copies, Join, Union_]


def tokenize(text: str) -> list[tuple[str, object, int]]:
    toks = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            value = int(text[i:j])
            if value > MAX_INT:
                raise ExprError(f"integer {text[i:j]} exceeds the cap {MAX_INT}", i)
            toks.append(("INT", value, i))
            i = j
            continue
        if ch in "+*,()":
            toks.append((ch, ch, i))
            i += 1
            continue
        for kw in KEYWORDS:
            if text.startswith(kw, i):
                toks.append(("KW", kw, i))
                i += len(kw)
                break
        else:
            raise ExprError(f"unexpected character {ch!r}", i)
    toks.append(("END", None, len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind: str, value=None, expected: tuple[str, ...] = ()):
        tok = self.peek()
        if tok[0] != kind or (value is not None and tok[1] != value):
            got = "end of input" if tok[0] == "END" else repr(tok[1])
            want = expected or ((value or kind),)
            raise ExprError(f"expected {' or '.join(want)}, got {got}", tok[2], want)
        self.i += 1
        return tok

    def expr(self) -> Node:
        parts = [self.term()]
        while self.peek()[0] == "+":
            self.i += 1
            parts.append(self.term())
        return parts[0] if len(parts) == 1 else Union_(tuple(parts))

    def term(self) -> Node:
        parts = [self.factor()]
        while self.peek()[:2] == ("KW", "v"):
            self.i += 1
            parts.append(self.factor())
        return parts[0] if len(parts) == 1 else Join(tuple(parts))

    def factor(self) -> Node:
        if self.peek()[0] == "INT":
            count = self.take("INT")[1]
            self.take("*", expected=("'*'",))
            return Copies(count, self.factor())
        return self.atom()

    def atom(self) -> Node:
        tok = self.peek()
        atoms = ("K", "C", "P", "S", "M", "T(", "Q(", "fan(", "petersen", "(", "INT")
        if tok[0] == "(":
            self.i += 1
            node = self.expr()
            self.take(")", expected=("')'",))
            return node
        if tok[0] != "KW" or tok[1] == "v":
            got = "end of input" if tok[0] == "END" else repr(tok[1])
            raise ExprError(f"expected a graph, got {got}", tok[2], atoms)
        kw = tok[1]
        self.i += 1
        if kw == "petersen":
            return Atom("petersen", ())
        if kw in "KCPSM":
            return Atom(kw, (self.take("INT", expected=(f"a count after {kw}",))[1],))
        self.take("(", expected=("'('",))
        args = [self.take("INT", expected=("integer",))[1]]
        if kw in "TQ" or (kw == "fan" and self.peek()[0] == ","):
            self.take(",", expected=("','",))
            args.append(self.take("INT", expected=("integer",))[1])
        self.take(")", expected=("')'",))
        return Atom(kw, tuple(args))


def parse(text: str) -> Node:
    p = _Parser(text)
    node = p.expr()
    tok = p.peek()
    if tok[0] != "END":
        raise ExprError(f"unexpected {tok[1]!r} after a complete expression", tok[2], ("'+'", "'v'", "end of input"))
    return node


def to_text(node: Node) -> str:
    if isinstance(node, Atom):
        if node.kind == "petersen":
            return "petersen"
        if node.kind in "KCPSM":
            return f"{node.kind}{node.args[0]}"
        return f"{node.kind}({','.join(map(str, node.args))})"
    if isinstance(node, Copies):
        inner = to_text(node.child)
        if isinstance(node.child, (Join, Union_)):
            inner = f"({inner})"
        return f"{node.count}*{inner}"
    if isinstance(node, Join):
        return " v ".join(f"({to_text(c)})" if isinstance(c, (Join, Union_)) else to_text(c) for c in node.parts)
    return " + ".join(f"({to_text(c)})" if isinstance(c, Union_) else to_text(c) for c in node.parts)


def vertex_count(node: Node) -> int:
    if isinstance(node, Atom):
        a = node.args
        if node.kind == "petersen":
            return 10
        if node.kind in "KCPSMT":
            return a[0]
        if node.kind == "Q":
            return a[0] * a[1] + 1
        k, p = a[0], a[1] if len(a) > 1 else 2
        return k * p + 1
    if isinstance(node, Copies):
        return node.count * vertex_count(node.child)
    return sum(vertex_count(c) for c in node.parts)


def evaluate(node: Node) -> gr.Graph:
    size = vertex_count(node)
    if size > MAX_VERTICES:
        raise ExprError(f"expression has {size} vertices, above the limit {MAX_VERTICES}")
    return _eval(node)


def _eval(node: Node) -> gr.Graph:
    if isinstance(node, Atom):
        a = node.args
        k = node.kind
        if k == "K":
            return gr.complete(a[0])
        if k == "C":
            return gr.cycle(a[0])
        if k == "P":
            return gr.path(a[0])
        if k == "S":
            return gr.star(a[0])
        if k == "M":
            return gr.matching(a[0])
        if k == "T":
            if a[1] < 1:
                raise ExprError(f"T(n,p) needs p >= 1, got {a[1]}")
            return gr.turan(a[0], a[1])
        if k == "Q":
            if a[0] < 1 or a[1] < 1:
                raise ExprError(f"Q(p,k) needs p, k >= 1, got {a}")
            return gr.q_graph(a[0], a[1])
        if k == "fan":
            if min(a) < 1:
                raise ExprError(f"fan needs positive arguments, got {a}")
            return gr.general_fan(a[0], a[1] if len(a) > 1 else 2)
        return gr.petersen()
    if isinstance(node, Copies):
        return gr.copies(node.count, _eval(node.child))
    if isinstance(node, Join):
        out = _eval(node.parts[0])
        for c in node.parts[1:]:
            out = gr.join(out, _eval(c))
        return out
    out = _eval(node.parts[0])
    for c in node.parts[1:]:
        out = gr.disjoint_union(out, _eval(c))
    return out


def parse_graph(text: str) -> gr.Graph:
    return evaluate(parse(text))
