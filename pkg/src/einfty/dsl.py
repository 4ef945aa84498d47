"""Text syntax for cooperation terms.

::

    term := "id" "(" int ")" | "eps" | "delta" | "star"
          | ["-"] "perm" "(" int ("," int)* ")"
          | "comp" "(" term "," term ")" | "ten" "(" term ("," term)* ")"
          | "cup" "(" int ")" | "itdelta" "(" int ")" | "itstar" "(" int ")"
          | "shuffle" "(" int ("," int)* ";" int ("," int)* ")"

Whitespace is ignored. ``cup``, ``itdelta``, ``itstar`` and ``shuffle`` are
expanded into the primitive nodes on parsing, so :func:`render_term` only
ever emits ``id``, ``eps``, ``delta``, ``star``, ``perm``, ``comp`` and ``ten``.
"""
from __future__ import annotations

import re

from . import terms as T
from .algebra import Permutation

_TOKEN = re.compile(r"\s*(?:(?P<word>[A-Za-z_]+)|(?P<int>-?\d+)|(?P<punct>[(),;\-]))")
_KEYWORDS = ("id", "eps", "delta", "star", "perm", "comp", "ten", "cup", "itdelta", "itstar", "shuffle")


class TermSyntaxError(ValueError):
    def __init__(self, message: str, pos: int, expected=()):
        self.pos = pos
        self.expected = tuple(expected)
        hint = f"; expected {' or '.join(self.expected)}" if self.expected else ""
        super().__init__(f"{message} at position {pos}{hint}")


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.toks = []
        pos = 0
        while True:
            while pos < len(src) and src[pos].isspace():
                pos += 1
            if pos >= len(src):
                break
            m = _TOKEN.match(src, pos)
            if not m or m.end() == pos:
                raise TermSyntaxError(f"unexpected character {src[pos]!r}", pos)
            kind = m.lastgroup
            start = m.start(kind)
            self.toks.append((kind, m.group(kind), start))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else ("eof", "", len(self.src))

    def take(self, value=None, kind=None, expected=()):
        tok = self.peek()
        if (value is not None and tok[1] != value) or (kind is not None and tok[0] != kind) or tok[0] == "eof":
            what = "end of input" if tok[0] == "eof" else repr(tok[1])
            raise TermSyntaxError(f"unexpected {what}", tok[2], expected or ((repr(value),) if value else (kind,)))
        self.i += 1
        return tok

    def integer(self) -> int:
        return int(self.take(kind="int", expected=("integer",))[1])

    def int_list(self, stop=(")",)) -> list:
        out = [self.integer()]
        while self.peek()[1] == ",":
            self.take(",")
            out.append(self.integer())
        if self.peek()[1] not in stop:
            tok = self.peek()
            raise TermSyntaxError("unexpected " + (repr(tok[1]) if tok[0] != "eof" else "end of input"),
                                  tok[2], ("','",) + tuple(repr(s) for s in stop))
        return out

    def term(self) -> T.Term:
        tok = self.peek()
        negate = False
        if tok[1] == "-":
            self.take("-")
            negate = True
            tok = self.peek()
            if tok[1] != "perm":
                raise TermSyntaxError("a sign may only precede perm", tok[2], ("'perm'",))
        if tok[0] != "word" or tok[1] not in _KEYWORDS:
            what = "end of input" if tok[0] == "eof" else repr(tok[1])
            raise TermSyntaxError(f"unexpected {what}", tok[2], tuple(repr(k) for k in _KEYWORDS))
        self.take()
        name, at = tok[1], tok[2]
        try:
            return self._build(name, negate)
        except TermSyntaxError:
            raise
        except ValueError as exc:  # arity, shuffle or permutation errors from the constructors
            raise TermSyntaxError(f"invalid {name}: {exc}", at) from None

    def _build(self, name: str, negate: bool) -> T.Term:
        if name == "eps":
            return T.Counit()
        if name == "delta":
            return T.Cop()
        if name == "star":
            return T.Prod()
        self.take("(")
        if name == "perm":
            vals = self.int_list()
            out = T.Perm(Permutation(vals), -1 if negate else 1)
        elif name in ("id", "cup", "itdelta", "itstar"):
            k = self.integer()
            out = {"id": T.Id, "cup": T.cup_i, "itdelta": T.iterated_coproduct,
                   "itstar": T.iterated_product}[name](k)
        elif name == "comp":
            outer = self.term()
            self.take(",", expected=("','",))
            inner = self.term()
            out = T.Compose(outer, inner)
        elif name == "ten":
            fs = [self.term()]
            while self.peek()[1] == ",":
                self.take(",")
                fs.append(self.term())
            out = T.Tensor(tuple(fs)) if len(fs) > 1 else fs[0]
        else:  # shuffle
            parts = self.int_list(stop=(";",))
            self.take(";")
            sigma = self.int_list()
            out = T.shuffle_graph(T.ShuffleSpec(tuple(parts), Permutation(sigma)))
        self.take(")", expected=("')'",))
        return out


def parse_term(src: str) -> T.Term:
    p = _Parser(src)
    term = p.term()
    tok = p.peek()
    if tok[0] != "eof":
        raise TermSyntaxError(f"trailing {tok[1]!r}", tok[2], ("end of input",))
    return term


def render_term(term: T.Term) -> str:
    if isinstance(term, T.Id):
        return f"id({term.k})"
    if isinstance(term, T.Counit):
        return "eps"
    if isinstance(term, T.Cop):
        return "delta"
    if isinstance(term, T.Prod):
        return "star"
    if isinstance(term, T.Perm):
        body = f"perm({','.join(str(v) for v in term.sigma)})"
        return "-" + body if term.sign < 0 else body
    if isinstance(term, T.Compose):
        return f"comp({render_term(term.outer)},{render_term(term.inner)})"
    if isinstance(term, T.Tensor):
        return "ten(" + ",".join(render_term(f) for f in term.factors) + ")"
    raise TypeError(f"cannot render {term!r}")


__all__ = ["TermSyntaxError", "parse_term", "render_term"]
