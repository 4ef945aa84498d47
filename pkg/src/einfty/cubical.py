"""Normalized chains of representable cubes with their Serre coalgebra and degree 1 product.

A basis word of ``chains(cube^n)`` is a tuple of length ``n`` over the
symbols ``V0 = [0]``, ``I = [0,1]`` and ``V1 = [1]``. The integer encoding
``V0 < I < V1`` is also the symbolwise order used to compare words.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import product as _cartesian

from .algebra import Bialgebra, Chain, RingMismatchError, permute_factors

V0, I, V1 = 0, 1, 2
SYMBOLS = (V0, I, V1)
_NAMES = {V0: "[0]", I: "[01]", V1: "[1]"}


class DimensionMismatchError(ValueError):
    pass


def degree(word: tuple) -> int:
    return word.count(I)


def intervals(word: tuple) -> tuple:
    """1-indexed positions ``q_1 < ... < q_m`` holding ``[0,1]``."""
    return tuple(i for i, s in enumerate(word, 1) if s == I)


def all_words(n: int, deg: int | None = None):
    for w in _cartesian(SYMBOLS, repeat=n):
        if deg is None or w.count(I) == deg:
            yield w


def top_word(n: int) -> tuple:
    return (I,) * n


def leq(x: tuple, y: tuple) -> bool:
    """Symbolwise order with ``[0] < [0,1] < [1]``."""
    return len(x) == len(y) and all(a <= b for a, b in zip(x, y))


# rendering / parsing -------------------------------------------------------

def render(word: tuple) -> str:
    if not word:
        return "[]"
    return "".join(_NAMES[s] for s in word)


def render_tensor(key: tuple) -> str:
    return " ⊗ ".join(render(w) for w in key)


_TOKEN = re.compile(r"\[\s*(0\s*,?\s*1|0|1)?\s*\]")


def parse_word(text: str) -> tuple:
    """Parse ``"[0][01][1]"``; ``[0,1]`` is accepted for the interval."""
    s = text.strip()
    if s in ("", "[]"):
        return ()
    out = []
    pos = 0
    for m in _TOKEN.finditer(s):
        if s[pos:m.start()].strip():
            raise ValueError(f"unexpected {s[pos:m.start()]!r} at position {pos} in cube word {text!r}")
        body = (m.group(1) or "").replace(" ", "").replace(",", "")
        if body == "0":
            out.append(V0)
        elif body == "1":
            out.append(V1)
        elif body == "01":
            out.append(I)
        else:
            raise ValueError(f"empty symbol at position {m.start()} in cube word {text!r}")
        pos = m.end()
    if s[pos:].strip():
        raise ValueError(f"unexpected {s[pos:]!r} at position {pos} in cube word {text!r}")
    return tuple(out)


# structure maps on basis words ---------------------------------------------

@lru_cache(maxsize=None)
def _boundary(word: tuple) -> list:
    out = []
    sign = 1
    for i, s in enumerate(word):
        if s == I:
            out.append((sign, word[:i] + (V1,) + word[i + 1:]))
            out.append((-sign, word[:i] + (V0,) + word[i + 1:]))
            sign = -sign
    return out


def _counit(word: tuple) -> int:
    return 0 if I in word else 1


_DELTA_1 = {V0: ((V0, V0),), V1: ((V1, V1),), I: ((V0, I), (I, V1))}


def shuffle_deck_permutation(n: int) -> tuple:
    """One-line form of the (n, n)-shuffle sending deck one to odd slots and deck two to even slots."""
    return tuple(2 * l - 1 for l in range(1, n + 1)) + tuple(2 * l for l in range(1, n + 1))


@lru_cache(maxsize=None)
def _coproduct(word: tuple) -> list:
    # Apply the interval coproduct factorwise, then regroup the 2n factors
    # into two decks by the inverse deck shuffle, with Koszul signs.
    n = len(word)
    sigma = shuffle_deck_permutation(n)
    inv = [0] * (2 * n)
    for l, s in enumerate(sigma, 1):
        inv[s - 1] = l
    out = []
    for choice in _cartesian(*(_DELTA_1[s] for s in word)):
        flat = tuple(sym for pair in choice for sym in pair)
        sign, regrouped = permute_factors(inv, flat, [1 if sym == I else 0 for sym in flat])
        out.append((sign, (regrouped[:n], regrouped[n:])))
    return out


def coproduct_top_closed(n: int) -> Chain:
    """Coproduct of ``[0,1]^{(x)n}`` summed over maps ``lam: {1..n} -> {0,1}``.

    ``lam(i) = 0`` puts ``[0,1]`` left and ``[1]`` right; ``lam(i) = 1`` puts
    ``[0]`` left and ``[0,1]`` right. The sign counts pairs ``i < j`` with
    ``lam(i) > lam(j)``.
    """
    acc = {}
    for lam in _cartesian((0, 1), repeat=n):
        x = tuple(I if b == 0 else V0 for b in lam)
        y = tuple(V1 if b == 0 else I for b in lam)
        ind = sum(1 for i in range(n) for j in range(i + 1, n) if lam[i] > lam[j])
        acc[(x, y)] = acc.get((x, y), 0) + (-1) ** ind
    return Chain(acc)


_STAR_1 = {(V0, V1): 1, (V1, V0): -1}


@lru_cache(maxsize=None)
def _star(x: tuple, y: tuple) -> list:
    if len(x) != len(y):
        raise DimensionMismatchError(f"star of words in cubes of dimension {len(x)} and {len(y)}")
    n = len(x)
    sign0 = -1 if degree(x) % 2 else 1
    # suffix_free[i]: x_{>i} has no interval
    suffix_free = [True] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix_free[i] = suffix_free[i + 1] and x[i] != I
    out = []
    for i in range(n):
        c = _STAR_1.get((x[i], y[i]))
        if c is not None and suffix_free[i + 1]:
            out.append((sign0 * c, x[:i] + (I,) + y[i + 1:]))
        if y[i] == I:
            break  # every later summand carries counit(y_{<i}) = 0
    return out


CUBICAL = Bialgebra(
    name="cubical",
    degree=degree,
    counit=_counit,
    coproduct=_coproduct,
    product=_star,
    boundary=_boundary,
    render=render,
)


# public, linear operations ---------------------------------------------------

def _as_chain(x) -> Chain:
    return x if isinstance(x, Chain) else Chain.basis(tuple(x))


def boundary(x) -> Chain:
    x = _as_chain(x)
    return x.map(lambda w: ((w2, c) for c, w2 in _boundary(w)))


def counit(x) -> int:
    x = _as_chain(x)
    return x.ring(sum(c * _counit(w) for w, c in x.raw().items()))


def coproduct(x) -> Chain:
    x = _as_chain(x)
    return x.map(lambda w: ((k, c) for c, k in _coproduct(w)))


def star(x, y) -> Chain:
    """Degree 1 product, bilinear in ``x`` and ``y``."""
    x, y = _as_chain(x), _as_chain(y)
    if x.ring != y.ring:
        raise RingMismatchError("star of chains over different rings")
    acc: dict = {}
    for a, ca in x.raw().items():
        for b, cb in y.raw().items():
            for c, z in _star(a, b):
                acc[z] = acc.get(z, 0) + ca * cb * c
    return Chain._wrap(acc, x.ring)


# cubical operators -----------------------------------------------------------

@dataclass(frozen=True)
class CubicalOperator:
    """A morphism ``2^m -> 2^n`` of the cube category.

    ``images[k]`` describes output coordinate ``k + 1``: either the string
    ``"0"``/``"1"`` (a constant, from a coface) or a 1-indexed input
    coordinate. Input coordinates appear in increasing order; unused ones are
    collapsed by codegeneracies.
    """

    domain: int
    images: tuple

    def __post_init__(self):
        last = 0
        for im in self.images:
            if isinstance(im, str):
                if im not in ("0", "1"):
                    raise ValueError(f"bad constant {im!r}")
            else:
                if not (last < im <= self.domain):
                    raise ValueError(f"input coordinates must increase within 1..{self.domain}: {self.images}")
                last = im

    @property
    def codomain(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "CubicalOperator":
        return cls(n, tuple(range(1, n + 1)))

    @classmethod
    def coface(cls, n: int, i: int, e: int) -> "CubicalOperator":
        """``delta_i^e : 2^{n-1} -> 2^n`` inserting ``e`` at coordinate ``i``."""
        if not 1 <= i <= n or e not in (0, 1):
            raise IndexError(f"coface index {i} (e={e}) out of range for n={n}")
        ims = list(range(1, n))
        ims.insert(i - 1, str(e))
        return cls(n - 1, tuple(ims))

    @classmethod
    def codegeneracy(cls, n: int, i: int) -> "CubicalOperator":
        """``sigma_i : 2^n -> 2^{n-1}`` forgetting coordinate ``i``."""
        if not 1 <= i <= n:
            raise IndexError(f"codegeneracy index {i} out of range for n={n}")
        return cls(n, tuple(j for j in range(1, n + 1) if j != i))

    def __matmul__(self, other: "CubicalOperator") -> "CubicalOperator":
        """Composite ``self o other``."""
        if other.codomain != self.domain:
            raise ValueError(f"cannot compose {self.domain}-ary after {other.codomain}-ary")
        ims = tuple(im if isinstance(im, str) else other.images[im - 1] for im in self.images)
        return CubicalOperator(other.domain, ims)

    def steps(self) -> list:
        """Normal form: codegeneracies (decreasing index) then cofaces (increasing index).

        Each step is ``("s", i)`` or ``("d", i, e)``, listed in order of application.
        """
        used = [im for im in self.images if not isinstance(im, str)]
        out = [("s", j) for j in range(self.domain, 0, -1) if j not in used]
        for k, im in enumerate(self.images, 1):
            if isinstance(im, str):
                out.append(("d", k, int(im)))
        return out

    @classmethod
    def from_steps(cls, n: int, steps) -> "CubicalOperator":
        op = cls.identity(n)
        for st in steps:
            if st[0] == "s":
                op = cls.codegeneracy(op.codomain, st[1]) @ op
            elif st[0] == "d":
                op = cls.coface(op.codomain + 1, st[1], st[2]) @ op
            else:
                raise ValueError(f"unknown step {st!r}")
        return op

    def apply_word(self, word: tuple):
        if len(word) != self.domain:
            raise DimensionMismatchError(f"operator on 2^{self.domain} applied to a word of length {len(word)}")
        used = set()
        out = []
        for im in self.images:
            if isinstance(im, str):
                out.append(V0 if im == "0" else V1)
            else:
                used.add(im)
                out.append(word[im - 1])
        for j in range(1, self.domain + 1):
            if j not in used and word[j - 1] == I:
                return None  # degenerate
        return tuple(out)


def apply_operator(op: CubicalOperator, x) -> Chain:
    x = _as_chain(x)

    def f(w):
        w2 = op.apply_word(w)
        return () if w2 is None else ((w2, 1),)

    return x.map(f)


__all__ = [
    "V0", "I", "V1", "CUBICAL", "CubicalOperator", "DimensionMismatchError",
    "all_words", "apply_operator", "boundary", "coproduct", "coproduct_top_closed",
    "counit", "degree", "intervals", "leq", "parse_word", "render", "render_tensor",
    "shuffle_deck_permutation", "star", "top_word",
]
