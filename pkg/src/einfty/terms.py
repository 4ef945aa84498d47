"""Cooperation terms built from the counit, coproduct and degree 1 product.

A term is a tree whose leaves are ``Id(k)``, ``Counit()``, ``Cop()``,
``Prod()`` and ``Perm(sigma)`` and whose nodes are ``Compose(f, g)`` (apply
``g`` then ``f``) and ``Tensor(f_1, ..., f_r)``. Terms are immutable and
hashable; arity is checked at construction.

Evaluation follows the Koszul rule
``(f (x) g)(x (x) y) = (-1)^{|g||x|} f(x) (x) g(y)``, and ``Perm(sigma)`` sends
tensor factor ``l`` to slot ``sigma(l)`` with the Koszul sign.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as _cartesian

from .algebra import Bialgebra, Chain, Permutation, ZZ, koszul_sign, Ring
from .cubical import CUBICAL
from .simplicial import SIMPLICIAL


class ArityError(ValueError):
    pass


class ShuffleError(ValueError):
    pass


class Term:
    inputs: int
    outputs: int
    degree: int

    def _finish(self, *key):
        object.__setattr__(self, "_hash", hash((type(self).__name__,) + key))

    def __hash__(self):
        return self._hash

    @property
    def arity(self) -> tuple:
        return (self.inputs, self.outputs)


@dataclass(frozen=True, eq=True)
class Id(Term):
    k: int = 1
    _hash: int = field(init=False, repr=False, compare=False, default=0)

    def __post_init__(self):
        if self.k < 0:
            raise ArityError(f"id({self.k}) needs a non-negative arity")
        self._finish(self.k)

    inputs = property(lambda self: self.k)
    outputs = property(lambda self: self.k)
    degree = property(lambda self: 0)


@dataclass(frozen=True, eq=True)
class Counit(Term):
    _hash: int = field(init=False, repr=False, compare=False, default=0)

    def __post_init__(self):
        self._finish()

    inputs, outputs, degree = 1, 0, 0


@dataclass(frozen=True, eq=True)
class Cop(Term):
    _hash: int = field(init=False, repr=False, compare=False, default=0)

    def __post_init__(self):
        self._finish()

    inputs, outputs, degree = 1, 2, 0


@dataclass(frozen=True, eq=True)
class Prod(Term):
    _hash: int = field(init=False, repr=False, compare=False, default=0)

    def __post_init__(self):
        self._finish()

    inputs, outputs, degree = 2, 1, 1


@dataclass(frozen=True, eq=True)
class Perm(Term):
    """Signed permutation of tensor factors; ``sign`` is ``+1`` or ``-1``."""

    sigma: Permutation = Permutation()
    sign: int = 1
    _hash: int = field(init=False, repr=False, compare=False, default=0)

    def __post_init__(self):
        object.__setattr__(self, "sigma", Permutation(self.sigma))
        if self.sign not in (1, -1):
            raise ValueError(f"permutation sign must be +1 or -1, got {self.sign}")
        self._finish(tuple(self.sigma), self.sign)

    inputs = property(lambda self: len(self.sigma))
    outputs = property(lambda self: len(self.sigma))
    degree = property(lambda self: 0)


@dataclass(frozen=True, eq=True)
class Compose(Term):
    """``outer o inner``."""

    outer: Term
    inner: Term
    _hash: int = field(init=False, repr=False, compare=False, default=0)
    _deg: int = field(init=False, repr=False, compare=False, default=0)

    def __post_init__(self):
        if self.inner.outputs != self.outer.inputs:
            raise ArityError(
                f"cannot compose: inner term has {self.inner.outputs} outputs, "
                f"outer term expects {self.outer.inputs} inputs")
        object.__setattr__(self, "_deg", self.outer.degree + self.inner.degree)
        self._finish(self.outer, self.inner)

    inputs = property(lambda self: self.inner.inputs)
    outputs = property(lambda self: self.outer.outputs)
    degree = property(lambda self: self._deg)


@dataclass(frozen=True, eq=True)
class Tensor(Term):
    factors: tuple
    _hash: int = field(init=False, repr=False, compare=False, default=0)
    _ar: tuple = field(init=False, repr=False, compare=False, default=(0, 0, 0))

    def __post_init__(self):
        fs = tuple(self.factors)
        if not fs:
            raise ArityError("tensor of no terms")
        if not all(isinstance(f, Term) for f in fs):
            raise ArityError("tensor factors must be terms")
        object.__setattr__(self, "factors", fs)
        object.__setattr__(self, "_ar", (sum(f.inputs for f in fs), sum(f.outputs for f in fs),
                                         sum(f.degree for f in fs)))
        self._finish(fs)

    inputs = property(lambda self: self._ar[0])
    outputs = property(lambda self: self._ar[1])
    degree = property(lambda self: self._ar[2])


def ten(*factors: Term) -> Term:
    return factors[0] if len(factors) == 1 else Tensor(factors)


def validate(term: Term) -> tuple:
    """Return ``(inputs, outputs, degree)``; arity errors surface when a term is built."""
    if not isinstance(term, Term):
        raise ArityError(f"not a term: {term!r}")
    return (term.inputs, term.outputs, term.degree)


# constructors --------------------------------------------------------------------

def iterated_coproduct(k: int) -> Term:
    """Left comb ``Delta^k`` with ``k + 1`` outputs; ``Delta^0 = id``."""
    if k < 0:
        raise ValueError(f"iterated coproduct needs k >= 0, got {k}")
    if k == 0:
        return Id(1)
    if k == 1:
        return Cop()
    return Compose(Tensor((iterated_coproduct(k - 1), Id(1))), Cop())


def iterated_product(k: int) -> Term:
    """Left comb of products with ``k`` inputs: ``Star[1] = id``, ``Star[2] = star``."""
    if k < 1:
        raise ValueError(f"iterated product needs k >= 1 inputs, got {k}")
    if k == 1:
        return Id(1)
    if k == 2:
        return Prod()
    return Compose(Prod(), Tensor((iterated_product(k - 1), Id(1))))


def shuffle_sigma(i: int) -> Permutation:
    """The deck shuffle in ``S_{i+2}``: first ``ceil((i+2)/2)`` entries to odd slots."""
    if i < 0:
        raise ValueError(f"shuffle_sigma needs i >= 0, got {i}")
    n = i + 2
    c = (n + 1) // 2
    return Permutation(2 * l - 1 if l <= c else 2 * (l - c) for l in range(1, n + 1))


@dataclass(frozen=True)
class ShuffleSpec:
    parts: tuple
    sigma: Permutation

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        try:
            sigma = Permutation(self.sigma)
        except ValueError as exc:
            raise ShuffleError(str(exc)) from None
        object.__setattr__(self, "sigma", sigma)
        if not parts or any(p < 1 for p in parts):
            raise ShuffleError(f"shuffle parts must be positive: {parts}")
        if sum(parts) != len(sigma):
            raise ShuffleError(f"parts {parts} do not add up to {len(sigma)}")
        if not sigma.is_shuffle(parts):
            raise ShuffleError(f"{tuple(sigma)} is not a {parts}-shuffle")

    @property
    def k(self) -> int:
        return len(self.sigma)


def all_shuffle_specs(k: int):
    """Every composition of ``k`` paired with every shuffle for it."""
    from itertools import permutations

    def compositions(n):
        if n == 0:
            yield ()
            return
        for first in range(1, n + 1):
            for rest in compositions(n - first):
                yield (first,) + rest

    perms = [Permutation(p) for p in permutations(range(1, k + 1))]
    for parts in compositions(k):
        for p in perms:
            if p.is_shuffle(parts):
                yield ShuffleSpec(parts, p)


def shuffle_graph(spec: ShuffleSpec | tuple, sigma=None) -> Term:
    """``(Star[k_1] (x) ... (x) Star[k_r]) o sigma^{-1} o Delta^{k-1}``."""
    if not isinstance(spec, ShuffleSpec):
        spec = ShuffleSpec(tuple(spec), sigma)
    combs = ten(*(iterated_product(p) for p in spec.parts))
    return Compose(combs, Compose(Perm(spec.sigma.inverse()), iterated_coproduct(spec.k - 1)))


def cup_i_closed(i: int) -> Term:
    if i < 0:
        raise ValueError(f"cup-i needs i >= 0, got {i}")
    if i == 0:
        return Cop()
    n = i + 2
    return shuffle_graph(ShuffleSpec(((n + 1) // 2, n // 2), shuffle_sigma(i)))


def cup_i_recursive(i: int) -> Term:
    """Cup-i coproducts by recursion on ``i``, equal to :func:`cup_i_closed` term by term.

    Odd steps put the new product on the first deck,
    ``Delta_i = (star (x) id) o (23) o (Delta_{i-1} (x) id) o Delta``.
    Even steps put it on the second deck,
    ``Delta_i = (-1)^{i/2} (id (x) star) o (Delta_{i-1} (x) id) o Delta``;
    the sign undoes the Koszul sign picked up by ``star`` passing the first deck.
    """
    if i < 0:
        raise ValueError(f"cup-i needs i >= 0, got {i}")
    if i == 0:
        return Cop()
    inner = Compose(Tensor((cup_i_recursive(i - 1), Id(1))), Cop())
    if i % 2:
        return Compose(Tensor((Prod(), Id(1))), Compose(Perm((1, 3, 2)), inner))
    return Compose(Tensor((Id(1), Prod())), Compose(Perm((1, 2, 3), (-1) ** (i // 2)), inner))


def cup_i_recursive_literal(i: int) -> Term:
    """``Delta_i = (star (x) id) o (23) o (Delta_{i-1} (x) id) o Delta`` at every step.

    Agrees with the closed form for ``i <= 1`` only; from ``i = 2`` on it
    breaks the mod 2 coherence relation.
    """
    if i < 0:
        raise ValueError(f"cup-i needs i >= 0, got {i}")
    if i == 0:
        return Cop()
    return Compose(
        Tensor((Prod(), Id(1))),
        Compose(Perm((1, 3, 2)), Compose(Tensor((cup_i_recursive_literal(i - 1), Id(1))), Cop())),
    )


cup_i = cup_i_closed


def tilde_cup1() -> Term:
    """``(star (x) id) o (123) o Delta^2``: a cup-1 that is not a shuffle graph."""
    return Compose(Tensor((Prod(), Id(1))), Compose(Perm(Permutation.from_cycles(3, (1, 2, 3))),
                                                     iterated_coproduct(2)))


def transposition() -> Term:
    return Perm((2, 1))


# evaluation ----------------------------------------------------------------------

_STRUCTURES = {"cubical": CUBICAL, "simplicial": SIMPLICIAL}


def structure_for(side) -> Bialgebra:
    if isinstance(side, Bialgebra):
        return side
    try:
        return _STRUCTURES[side]
    except KeyError:
        raise ValueError(f"unknown side {side!r}; expected 'cubical' or 'simplicial'") from None


class Evaluator:
    """Memoized evaluation of terms on basis tensors of one bialgebra."""

    def __init__(self, structure: Bialgebra):
        self.s = structure
        self._cache: dict = {}

    def clear(self):
        self._cache.clear()

    def basis(self, term: Term, key: tuple) -> dict:
        ck = (term, key)
        hit = self._cache.get(ck)
        if hit is not None:
            return hit
        out = self._eval(term, key)
        self._cache[ck] = out
        return out

    def _eval(self, term: Term, key: tuple) -> dict:
        s = self.s
        if len(key) != term.inputs:
            raise ArityError(f"term with {term.inputs} inputs applied to {len(key)} factors")
        if isinstance(term, Id):
            return {key: 1}
        if isinstance(term, Counit):
            c = s.counit(key[0])
            return {(): c} if c else {}
        if isinstance(term, Cop):
            out: dict = {}
            for c, k in s.coproduct(key[0]):
                out[k] = out.get(k, 0) + c
            return out
        if isinstance(term, Prod):
            out = {}
            for c, w in s.product(key[0], key[1]):
                out[(w,)] = out.get((w,), 0) + c
            return out
        if isinstance(term, Perm):
            degs = [s.degree(w) for w in key]
            sign = term.sign * koszul_sign(term.sigma, degs)
            moved = [None] * len(key)
            for l, t in enumerate(term.sigma):
                moved[t - 1] = key[l]
            return {tuple(moved): sign}
        if isinstance(term, Compose):
            out = {}
            for k1, c1 in self.basis(term.inner, key).items():
                for k2, c2 in self.basis(term.outer, k1).items():
                    out[k2] = out.get(k2, 0) + c1 * c2
            return {k: c for k, c in out.items() if c}
        if isinstance(term, Tensor):
            pieces = []
            pos = 0
            prefix_deg = 0
            sign = 1
            for f in term.factors:
                chunk = key[pos:pos + f.inputs]
                pos += f.inputs
                if f.degree % 2 and prefix_deg % 2:
                    sign = -sign
                prefix_deg += sum(s.degree(w) for w in chunk)
                res = self.basis(f, chunk)
                if not res:
                    return {}
                pieces.append(res.items())
            out = {}
            for combo in _cartesian(*pieces):
                k = ()
                c = sign
                for kk, cc in combo:
                    k += kk
                    c *= cc
                out[k] = out.get(k, 0) + c
            return {k: c for k, c in out.items() if c}
        raise TypeError(f"unknown term node {term!r}")

    def chain(self, term: Term, x: Chain) -> Chain:
        acc: dict = {}
        for key, c in x.raw().items():
            for k2, c2 in self.basis(term, key).items():
                acc[k2] = acc.get(k2, 0) + c * c2
        return Chain._wrap(acc, x.ring)


_EVALUATORS: dict = {}


def evaluator(side="cubical") -> Evaluator:
    s = structure_for(side)
    ev = _EVALUATORS.get(s.name)
    if ev is None or ev.s is not s:
        ev = _EVALUATORS[s.name] = Evaluator(s)
    return ev


def clear_caches():
    """Drop memoized term values and the cached structure maps."""
    from . import cubical, simplicial

    for ev in _EVALUATORS.values():
        ev.clear()
    for fn in (cubical._boundary, cubical._coproduct, cubical._star, simplicial._aw, simplicial._join):
        fn.cache_clear()


def as_tensor_chain(x, inputs: int, ring: Ring = ZZ) -> Chain:
    """Coerce a word, a tuple of words or a chain of words into a chain of ``inputs``-tuples."""
    if isinstance(x, Chain):
        keys = list(x.raw())
        if keys and not (isinstance(keys[0], tuple) and len(keys[0]) == inputs
                         and all(isinstance(w, tuple) for w in keys[0])):
            if inputs == 1:
                return Chain._wrap({(k,): c for k, c in x.raw().items()}, x.ring)
            raise ArityError(f"chain keys are not {inputs}-fold tensors")
        return x
    x = tuple(x)
    if inputs == 1 and (not x or not isinstance(x[0], tuple)):
        return Chain.basis((x,), ring=ring)
    if len(x) != inputs:
        raise ArityError(f"term with {inputs} inputs applied to {len(x)} factors")
    return Chain.basis(tuple(tuple(w) for w in x), ring=ring)


def evaluate(term: Term, x, side="cubical") -> Chain:
    """Evaluate ``term`` on an element of ``C^{(x)m}`` for cubical or simplicial representables."""
    validate(term)
    return evaluator(side).chain(term, as_tensor_chain(x, term.inputs))


__all__ = [
    "ArityError", "Compose", "Cop", "Counit", "Evaluator", "Id", "Perm", "Prod", "ShuffleError",
    "ShuffleSpec", "Tensor", "Term", "all_shuffle_specs", "as_tensor_chain", "clear_caches",
    "cup_i", "cup_i_closed", "cup_i_recursive", "cup_i_recursive_literal", "evaluate", "evaluator", "iterated_coproduct",
    "iterated_product", "shuffle_graph", "shuffle_sigma", "structure_for", "ten", "tilde_cup1",
    "transposition", "validate",
]
