"""Normalized chains of simplices: Alexander-Whitney coalgebra and join product.

A simplex is a strictly increasing tuple of vertex labels, read in the
global vertex order. A product simplex of ``(simplex^1)^{x k}`` is a tuple of
``k`` non-decreasing 0/1 rows of common length; column ``j`` is its vertex
``j``. It is degenerate when two consecutive columns coincide.
"""
from __future__ import annotations

import re
from functools import lru_cache
from itertools import combinations

from .algebra import Bialgebra, Chain, RingMismatchError


class SimplexError(ValueError):
    pass


def degree(s: tuple) -> int:
    return len(s) - 1


def check_simplex(s: tuple) -> tuple:
    s = tuple(int(v) for v in s)
    if not s or any(a >= b for a, b in zip(s, s[1:])):
        raise SimplexError(f"simplex vertices must be strictly increasing and nonempty: {s}")
    return s


def faces_of(vertices, deg: int | None = None):
    """All nonempty faces of the simplex on ``vertices`` (optionally of one degree)."""
    vertices = tuple(sorted(vertices))
    dims = range(len(vertices)) if deg is None else [deg]
    for d in dims:
        yield from combinations(vertices, d + 1)


def render(s: tuple) -> str:
    return "[" + ",".join(str(v) for v in s) + "]"


def render_tensor(key: tuple) -> str:
    return " ⊗ ".join(render(s) for s in key)


def parse_simplex(text: str) -> tuple:
    t = text.strip()
    if not (t.startswith("[") and t.endswith("]")):
        raise SimplexError(f"expected '[v0,...,vm]', got {text!r}")
    body = t[1:-1].strip()
    if not body:
        raise SimplexError("empty simplex")
    if "," in body:
        parts = [p.strip() for p in body.split(",")]
    else:
        # compact form "[012]" for single-digit labels
        parts = list(body.replace(" ", ""))
    try:
        return check_simplex(int(p) for p in parts)
    except ValueError as exc:
        raise SimplexError(f"bad simplex {text!r}: {exc}") from None


# structure maps on basis simplices --------------------------------------------

def _boundary(s: tuple) -> list:
    if len(s) == 1:
        return []
    return [(-1 if i % 2 else 1, s[:i] + s[i + 1:]) for i in range(len(s))]


def _counit(s: tuple) -> int:
    return 1 if len(s) == 1 else 0


@lru_cache(maxsize=None)
def _aw(s: tuple) -> list:
    return [(1, (s[:i + 1], s[i:])) for i in range(len(s))]


@lru_cache(maxsize=None)
def _join(a: tuple, b: tuple) -> list:
    verts = a + b
    if len(set(verts)) != len(verts):
        return []
    order = sorted(range(len(verts)), key=verts.__getitem__)
    inv = sum(1 for i in range(len(order)) for j in range(i + 1, len(order)) if order[i] > order[j])
    p = len(a) - 1
    return [(-1 if (p + inv) % 2 else 1, tuple(sorted(verts)))]


SIMPLICIAL = Bialgebra(
    name="simplicial",
    degree=degree,
    counit=_counit,
    coproduct=_aw,
    product=_join,
    boundary=_boundary,
    render=render,
)


def _as_chain(x) -> Chain:
    return x if isinstance(x, Chain) else Chain.basis(check_simplex(x))


def s_boundary(x) -> Chain:
    if isinstance(x, ProductSimplex):
        return p_boundary(x)
    x = _as_chain(x)
    if x and isinstance(next(iter(x.raw())), ProductSimplex):
        return p_boundary(x)
    return x.map(lambda s: ((s2, c) for c, s2 in _boundary(s)))


def aw_coproduct(x) -> Chain:
    if isinstance(x, ProductSimplex):
        return p_aw(x)
    x = _as_chain(x)
    if x and isinstance(next(iter(x.raw())), ProductSimplex):
        return p_aw(x)
    return x.map(lambda s: ((k, c) for c, k in _aw(s)))


def _dim(s) -> int:
    return s.dim if isinstance(s, ProductSimplex) else len(s) - 1


def s_counit(x) -> int:
    if not isinstance(x, Chain):
        x = Chain.basis(x if isinstance(x, ProductSimplex) else check_simplex(x))
    return x.ring(sum(c for s, c in x.raw().items() if _dim(s) == 0))


def join(a, b) -> Chain:
    a, b = _as_chain(a), _as_chain(b)
    if a.ring != b.ring:
        raise RingMismatchError("join of chains over different rings")
    acc: dict = {}
    for x, cx in a.raw().items():
        for y, cy in b.raw().items():
            for c, z in _join(x, y):
                acc[z] = acc.get(z, 0) + cx * cy * c
    return Chain._wrap(acc, a.ring)


# product simplices -------------------------------------------------------------

class ProductSimplex(tuple):
    """An m-simplex of ``(simplex^1)^{x k}``: ``k`` monotone 0/1 rows of length ``m + 1``."""

    def __new__(cls, rows):
        rows = tuple(tuple(int(v) for v in r) for r in rows)
        if not rows:
            raise SimplexError("a product simplex needs at least one factor")
        m1 = len(rows[0])
        for r in rows:
            if len(r) != m1 or m1 == 0:
                raise SimplexError(f"rows must share a positive length: {rows}")
            if any(v not in (0, 1) for v in r) or any(a > b for a, b in zip(r, r[1:])):
                raise SimplexError(f"rows must be non-decreasing 0/1 words: {rows}")
        return super().__new__(cls, rows)

    @property
    def dim(self) -> int:
        return len(self[0]) - 1

    @property
    def columns(self) -> list:
        return [tuple(r[j] for r in self) for j in range(len(self[0]))]

    @classmethod
    def from_columns(cls, cols) -> "ProductSimplex":
        cols = list(cols)
        return cls(tuple(c[i] for c in cols) for i in range(len(cols[0])))

    def is_degenerate(self) -> bool:
        cols = self.columns
        return any(a == b for a, b in zip(cols, cols[1:]))

    def __repr__(self):
        return f"ProductSimplex({render_product(self)!r})"


def render_product(s: ProductSimplex) -> str:
    return "x".join("".join(str(v) for v in r) for r in s)


def render_product_tensor(key: tuple) -> str:
    return " ⊗ ".join(render_product(s) for s in key)


def parse_product(text: str) -> ProductSimplex:
    parts = re.split(r"\s*[x×]\s*", text.strip())
    if any(not p or set(p) - {"0", "1"} for p in parts):
        raise SimplexError(f"expected rows like '011x001', got {text!r}")
    return ProductSimplex(tuple(int(ch) for ch in p) for p in parts)


def _p_sub(s: ProductSimplex, idx) -> ProductSimplex | None:
    cols = s.columns
    out = ProductSimplex.from_columns([cols[j] for j in idx])
    return None if out.is_degenerate() else out


def p_boundary(x) -> Chain:
    x = x if isinstance(x, Chain) else Chain.basis(x)

    def f(s):
        m = s.dim
        if m == 0:
            return
        for i in range(m + 1):
            face = _p_sub(s, [j for j in range(m + 1) if j != i])
            if face is not None:
                yield face, (-1 if i % 2 else 1)

    return x.map(f)


def p_aw(x) -> Chain:
    x = x if isinstance(x, Chain) else Chain.basis(x)

    def f(s):
        m = s.dim
        for i in range(m + 1):
            front = _p_sub(s, range(i + 1))
            back = _p_sub(s, range(i, m + 1))
            if front is not None and back is not None:
                yield (front, back), 1

    return x.map(f)


def transport_to_product(s: ProductSimplex, face: tuple) -> ProductSimplex | None:
    """Image of the face ``[v_0..v_q]`` of the standard simplex under the characteristic map of ``s``."""
    return _p_sub(s, face)


__all__ = [
    "SIMPLICIAL", "ProductSimplex", "SimplexError", "aw_coproduct", "check_simplex",
    "degree", "faces_of", "join", "p_aw", "p_boundary", "parse_product", "parse_simplex",
    "render", "render_product", "render_product_tensor", "render_tensor", "s_boundary",
    "s_counit", "transport_to_product",
]
