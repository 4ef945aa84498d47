"""Exact coefficient rings, sparse free-module elements, permutations and Koszul signs.

Graded basis elements are plain hashable tuples. Tensor products of basis
elements are tuples of basis elements, so an element of ``C^{(x)r}`` is a
:class:`Chain` whose keys are ``r``-tuples.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Mapping


class RingMismatchError(ValueError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class Ring:
    """The integers (``p=None``) or the prime field ``Z/p``.

    Python integers are arbitrary precision, so integral arithmetic cannot
    overflow.
    """

    __slots__ = ("p",)

    def __init__(self, p: int | None = None):
        if p is not None and not _is_prime(int(p)):
            raise ValueError(f"modulus must be prime, got {p}")
        object.__setattr__(self, "p", None if p is None else int(p))

    def __setattr__(self, name, value):
        raise AttributeError("Ring is immutable")

    def __call__(self, value: int) -> int:
        return value if self.p is None else value % self.p

    def __eq__(self, other):
        return isinstance(other, Ring) and other.p == self.p

    def __hash__(self):
        return hash(("Ring", self.p))

    def __repr__(self):
        return "Z" if self.p is None else f"Z/{self.p}"

    @classmethod
    def parse(cls, spec: str) -> "Ring":
        s = spec.strip().replace(" ", "")
        if s in ("Z", "ZZ"):
            return ZZ
        if s.startswith("Z/"):
            try:
                return cls(int(s[2:]))
            except ValueError as exc:
                raise ValueError(f"bad ring spec {spec!r}: {exc}") from None
        raise ValueError(f"bad ring spec {spec!r}; expected 'Z' or 'Z/p'")


ZZ = Ring()
GF2 = Ring(2)


class Chain(Mapping):
    """Finite formal linear combination of basis elements.

    Zero coefficients are never stored. Iteration follows the natural tuple
    order of the keys, so printed output is reproducible.
    """

    __slots__ = ("_terms", "ring")

    def __init__(self, terms=(), ring: Ring = ZZ):
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, c in items:
            acc[key] = acc.get(key, 0) + c
        self._terms = {k: ring(c) for k, c in acc.items() if ring(c) != 0}
        self.ring = ring

    @classmethod
    def _wrap(cls, terms: dict, ring: Ring = ZZ) -> "Chain":
        # trusted constructor: terms already accumulated, may contain zeros
        self = cls.__new__(cls)
        if ring.p is None:
            self._terms = {k: c for k, c in terms.items() if c != 0}
        else:
            p = ring.p
            self._terms = {k: c % p for k, c in terms.items() if c % p != 0}
        self.ring = ring
        return self

    @classmethod
    def basis(cls, key, coeff: int = 1, ring: Ring = ZZ) -> "Chain":
        return cls({key: coeff}, ring)

    @classmethod
    def zero(cls, ring: Ring = ZZ) -> "Chain":
        return cls((), ring)

    # Mapping protocol
    def __getitem__(self, key):
        return self._terms[key]

    def __iter__(self) -> Iterator:
        return iter(sorted(self._terms))

    def __len__(self):
        return len(self._terms)

    def coeff(self, key) -> int:
        return self._terms.get(key, 0)

    def raw(self) -> dict:
        """Unordered view of the underlying association (do not mutate)."""
        return self._terms

    def support(self) -> set:
        return set(self._terms)

    def _check(self, other: "Chain"):
        if not isinstance(other, Chain):
            return NotImplemented
        if other.ring != self.ring:
            raise RingMismatchError(f"cannot combine chains over {self.ring} and {other.ring}")
        return None

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) + c
        return Chain._wrap(acc, self.ring)

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Chain._wrap({k: -c for k, c in self._terms.items()}, self.ring)

    def __rmul__(self, scalar: int):
        if not isinstance(scalar, int):
            return NotImplemented
        return Chain._wrap({k: scalar * c for k, c in self._terms.items()}, self.ring)

    __mul__ = __rmul__

    def __eq__(self, other):
        if isinstance(other, Chain):
            return self.ring == other.ring and self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self._terms.items())))

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        if not self._terms:
            return f"Chain(0, {self.ring})"
        body = ", ".join(f"{k!r}: {self._terms[k]}" for k in self)
        return f"Chain({{{body}}}, {self.ring})"

    def to_ring(self, ring: Ring) -> "Chain":
        """Reduce integral coefficients into ``ring``."""
        if ring == self.ring:
            return self
        if self.ring.p is not None and ring.p != self.ring.p:
            raise RingMismatchError(f"cannot move a chain over {self.ring} to {ring}")
        return Chain._wrap(dict(self._terms), ring)

    def map(self, fn: Callable[[object], Iterable[tuple[object, int]]]) -> "Chain":
        """Linear extension of ``fn`` which sends a key to ``(key, coeff)`` pairs."""
        acc: dict = {}
        for k, c in self._terms.items():
            for k2, c2 in fn(k):
                acc[k2] = acc.get(k2, 0) + c * c2
        return Chain._wrap(acc, self.ring)

    def format(self, render: Callable[[object], str]) -> str:
        if not self._terms:
            return "0"
        out = []
        for k in self:
            c = self._terms[k]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = render(k) if mag == 1 else f"{mag}*{render(k)}"
            out.append((sign, body))
        first_sign, first = out[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text


def add(a: Chain, b: Chain) -> Chain:
    return a + b


class Permutation(tuple):
    """Bijection of ``{1..k}`` in 1-indexed one-line notation.

    ``p(l)`` is ``p[l - 1]``; composition ``(s * t)(l) = s(t(l))``.
    """

    def __new__(cls, values: Iterable[int] = ()):
        vals = tuple(int(v) for v in values)
        if sorted(vals) != list(range(1, len(vals) + 1)):
            raise ValueError(f"not a permutation in one-line notation: {vals}")
        return super().__new__(cls, vals)

    @classmethod
    def identity(cls, k: int) -> "Permutation":
        return cls(range(1, k + 1))

    @classmethod
    def from_cycles(cls, k: int, *cycles: Iterable[int]) -> "Permutation":
        img = list(range(1, k + 1))
        for cyc in cycles:
            cyc = list(cyc)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a - 1] = b
        return cls(img)

    def __call__(self, l: int) -> int:
        return self[l - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if len(other) != len(self):
            raise ValueError("cannot compose permutations of different size")
        return Permutation(self[t - 1] for t in other)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for l, s in enumerate(self, 1):
            inv[s - 1] = l
        return Permutation(inv)

    def inversions(self) -> int:
        return sum(1 for a in range(len(self)) for b in range(a + 1, len(self)) if self[a] > self[b])

    def sign(self) -> int:
        return -1 if self.inversions() % 2 else 1

    def is_shuffle(self, parts: Iterable[int]) -> bool:
        parts = list(parts)
        if sum(parts) != len(self) or any(p < 1 for p in parts):
            return False
        start = 0
        for p in parts:
            block = self[start:start + p]
            if any(block[j] >= block[j + 1] for j in range(len(block) - 1)):
                return False
            start += p
        return True

    def __repr__(self):
        return f"Permutation({tuple(self)})"


def koszul_sign(sigma: Iterable[int], degrees: Iterable[int]) -> int:
    """Sign of sending tensor factor ``l`` to slot ``sigma(l)``.

    Every pair of factors whose relative order is reversed contributes
    ``(-1)^{p q}``.
    """
    sigma = tuple(sigma)
    degrees = tuple(degrees)
    if len(sigma) != len(degrees):
        raise ValueError(f"permutation of size {len(sigma)} acting on {len(degrees)} degrees")
    odd = 0
    k = len(sigma)
    for a in range(k):
        if degrees[a] % 2 == 0:
            continue
        for b in range(a + 1, k):
            if degrees[b] % 2 and sigma[a] > sigma[b]:
                odd += 1
    return -1 if odd % 2 else 1


def permute_factors(sigma: Iterable[int], word: tuple, degrees: Iterable[int]) -> tuple[int, tuple]:
    """Return ``(sign, permuted)`` where slot ``sigma(l)`` receives factor ``l``."""
    sigma = tuple(sigma)
    if len(sigma) != len(word):
        raise ValueError(f"permutation of size {len(sigma)} acting on {len(word)} factors")
    out = [None] * len(word)
    for l, s in enumerate(sigma):
        out[s - 1] = word[l]
    return koszul_sign(sigma, degrees), tuple(out)


def act_on_degrees(sigma: Iterable[int], degrees: Iterable[int]) -> tuple:
    sigma = tuple(sigma)
    degrees = tuple(degrees)
    out = [0] * len(degrees)
    for l, s in enumerate(sigma):
        out[s - 1] = degrees[l]
    return tuple(out)


@dataclass(frozen=True)
class Bialgebra:
    """The structure maps of an M-bialgebra on a family of representables.

    ``coproduct`` and ``product`` return lists of ``(coeff, key)`` pairs;
    ``product`` takes two basis elements and has degree 1.
    """

    name: str
    degree: Callable[[object], int]
    counit: Callable[[object], int]
    coproduct: Callable[[object], list]
    product: Callable[[object, object], list]
    boundary: Callable[[object], list]
    render: Callable[[object], str]

    def tensor_degree(self, key: tuple) -> int:
        return sum(self.degree(w) for w in key)


def tensor_boundary(x: Chain, structure: "Bialgebra") -> Chain:
    """Boundary on a tensor power, with Leibniz signs."""
    acc: dict = {}
    for key, c in x.raw().items():
        prefix = 0
        for j, w in enumerate(key):
            for c2, w2 in structure.boundary(w):
                s = -1 if prefix % 2 else 1
                k2 = key[:j] + (w2,) + key[j + 1:]
                acc[k2] = acc.get(k2, 0) + s * c * c2
            prefix += structure.degree(w)
    return Chain._wrap(acc, x.ring)
