"""Comparison maps between cubical and simplicial chains.

``cs_map`` is the Cartan-Serre map ``chains(cube^n) -> chains(simplex^n)``.
``ez_word`` sends a cube word to the signed sum of staircase simplices
subdividing it inside ``(simplex^1)^{x n}``; ``ez_map`` does the same on a
lattice complex, landing in its triangulation.
"""
from __future__ import annotations

from itertools import permutations

from . import cubical as cub
from .algebra import Chain, Permutation
from .complexes import LatticeCubicalComplex, TriangulatedComplex, cube_dim, staircase, triangulate
from .simplicial import ProductSimplex


def _cs_word(word: tuple):
    qs = cub.intervals(word)
    n = len(word)
    p = next((l for l, s in enumerate(word, 1) if s == cub.V0), n + 1)
    if qs and p < qs[-1]:
        return None
    return tuple(q - 1 for q in qs) + (p - 1,)


def cs_map(x) -> Chain:
    """Cartan-Serre map on a word or a chain of words of ``cube^n``."""
    x = x if isinstance(x, Chain) else Chain.basis(tuple(x))

    def f(w):
        s = _cs_word(w)
        return () if s is None else ((s, 1),)

    return x.map(f)


def cs_tensor(x: Chain) -> Chain:
    """``CS`` applied to every factor of a chain of tensor words."""
    def f(key):
        out = tuple(_cs_word(w) for w in key)
        return () if any(s is None for s in out) else ((out, 1),)

    return x.map(f)


def _ez_word(word: tuple) -> list:
    qs = [j for j, s in enumerate(word) if s == cub.I]
    m = len(qs)
    base = [0 if s == cub.V0 else 1 for s in word]
    out = []
    for order in permutations(range(1, m + 1)):
        cols = []
        for col in staircase(m, order):
            v = list(base)
            for k, j in enumerate(qs):
                v[j] = col[k]
            cols.append(tuple(v))
        out.append((Permutation(order).sign(), ProductSimplex.from_columns(cols)))
    return out


def ez_word(x) -> Chain:
    """``EZ(w) = sum over sigma of sign(sigma) * staircase(sigma)`` with constant rows off the intervals."""
    x = x if isinstance(x, Chain) else Chain.basis(tuple(x))
    if x and not next(iter(x.raw())):
        raise ValueError("EZ needs cube words of positive length")
    return x.map(lambda w: ((s, c) for c, s in _ez_word(w)))


def ez_tensor(x: Chain) -> Chain:
    def f(key):
        parts = [_ez_word(w) for w in key]
        out = [((), 1)]
        for p in parts:
            out = [(k + (s,), c * c2) for k, c in out for c2, s in p]
        return out

    return x.map(f)


def product_pushforward(term, x) -> Chain:
    """Natural extension of a one-input term to product simplices.

    Each product simplex ``s`` of dimension ``m`` is the image of the standard
    ``m``-simplex; the term is evaluated there and each factor is carried to
    ``s``, dropping degenerate images.
    """
    from .simplicial import transport_to_product
    from .terms import evaluator

    x = x if isinstance(x, Chain) else Chain.basis(x)
    ev = evaluator("simplicial")

    def f(s):
        for key, c in ev.basis(term, (tuple(range(s.dim + 1)),)).items():
            out = tuple(transport_to_product(s, face) for face in key)
            if all(o is not None for o in out):
                yield out, c

    return x.map(f)


def ez_map(X: LatticeCubicalComplex, x, T: TriangulatedComplex | None = None) -> Chain:
    """EZ on a lattice complex, valued in the chains of its triangulation."""
    T = T if T is not None else triangulate(X)
    x = x if isinstance(x, Chain) else Chain.basis(x)

    def f(c):
        n = cube_dim(c)
        for order in permutations(range(1, n + 1)):
            simplex = tuple(T.point_of(c, col) for col in staircase(n, order))
            yield simplex, Permutation(order).sign()

    return x.map(f)


__all__ = ["cs_map", "cs_tensor", "ez_map", "ez_tensor", "ez_word", "product_pushforward"]
