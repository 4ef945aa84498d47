"""Relation suites: exact checks of the bialgebra, cup-i and comparison-map identities.

Every suite is a pure function of its bounds and seed and returns a
:class:`SuiteReport`. The CLI maps a failed report to exit status 1.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product

from . import cubical as C
from . import simplicial as S
from .algebra import Chain, GF2, tensor_boundary
from .comparison import cs_map, cs_tensor, ez_tensor, ez_word, product_pushforward
from .terms import (
    all_shuffle_specs, cup_i_closed, cup_i_recursive, evaluate, evaluator, iterated_coproduct,
    iterated_product, shuffle_graph, tilde_cup1,
)


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class SuiteReport:
    suite: str
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = ""):
        self.checks.append(Check(name, bool(passed), detail))

    def to_json(self) -> dict:
        return {"suite": self.suite, "passed": self.passed,
                "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks]}

    def text(self) -> str:
        lines = [f"[{self.suite}]"]
        for c in self.checks:
            lines.append(f"  {'ok  ' if c.passed else 'FAIL'} {c.name}" + (f": {c.detail}" if c.detail else ""))
        lines.append("  all relations hold" if self.passed else "  some relations FAILED")
        return "\n".join(lines)


def _first_failure(items, pred):
    """Count items and return the first one failing ``pred`` (or None)."""
    n = 0
    for it in items:
        n += 1
        if not pred(it):
            return n, it
    return n, None


def _report(rep: SuiteReport, name: str, items, pred, render=repr):
    n, bad = _first_failure(items, pred)
    rep.add(name, bad is None, f"{n} cases" if bad is None else f"fails on {render(bad)}")


# cubical bialgebra ---------------------------------------------------------------

def _left_counit(w) -> Chain:
    return C.coproduct(w).map(lambda k: (((k[1]), C._counit(k[0])),))


def _right_counit(w) -> Chain:
    return C.coproduct(w).map(lambda k: (((k[0]), C._counit(k[1])),))


def boundary_relation_holds(x, y, side=C) -> bool:
    """``d(x*y) + dx*y + (-1)^{|x|} x*dy = eps(x) y - eps(y) x``."""
    if side is C:
        star, bd, eps, deg = C.star, C.boundary, C.counit, C.degree
    else:
        star, bd, eps, deg = S.join, S.s_boundary, S.s_counit, S.degree
    X, Y = Chain.basis(x), Chain.basis(y)
    lhs = bd(star(X, Y)) + star(bd(X), Y) + (-1) ** deg(x) * star(X, bd(Y))
    rhs = eps(X) * Y - eps(Y) * X
    return lhs == rhs


def _random_pairs(count: int, nmax: int, seed: int):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, nmax)
        yield (tuple(rng.choice(C.SYMBOLS) for _ in range(n)), tuple(rng.choice(C.SYMBOLS) for _ in range(n)))


def suite_bialgebra(n: int = 3, seed: int = 0, random_pairs: int = 1000, random_nmax: int = 6) -> SuiteReport:
    rep = SuiteReport("bialgebra")
    words = [w for m in range(n + 1) for w in C.all_words(m)]
    pairs = [(x, y) for m in range(n + 1) for x in C.all_words(m) for y in C.all_words(m)]
    rnd = list(_random_pairs(random_pairs, random_nmax, seed))
    show = lambda p: " , ".join(C.render(w) for w in p) if isinstance(p[0], tuple) else C.render(p)
    _report(rep, f"counitality (eps x id)Delta = id, n <= {n}", words,
            lambda w: _left_counit(w) == Chain.basis(w), C.render)
    _report(rep, f"counitality (id x eps)Delta = id, n <= {n}", words,
            lambda w: _right_counit(w) == Chain.basis(w), C.render)
    _report(rep, f"eps(x * y) = 0, exhaustive n <= {n}", pairs, lambda p: C.counit(C.star(*p)) == 0, show)
    _report(rep, f"boundary of product, exhaustive n <= {n}", pairs, lambda p: boundary_relation_holds(*p), show)
    _report(rep, f"counitality, {random_pairs} random words n <= {random_nmax}", [p[0] for p in rnd],
            lambda w: _left_counit(w) == Chain.basis(w) == _right_counit(w), C.render)
    _report(rep, f"eps(x * y) = 0, {random_pairs} random pairs", rnd, lambda p: C.counit(C.star(*p)) == 0, show)
    _report(rep, f"boundary of product, {random_pairs} random pairs n <= {random_nmax} (seed {seed})", rnd,
            lambda p: boundary_relation_holds(*p), show)
    return rep


def worked_boundary_example() -> tuple:
    """``([0][0][0]) * ([1][1][1])`` and its boundary."""
    x, y = C.parse_word("[0][0][0]"), C.parse_word("[1][1][1]")
    prod = C.star(x, y)
    return prod, C.boundary(prod)


def suite_coproduct(n: int = 6) -> SuiteReport:
    rep = SuiteReport("coproduct")
    _report(rep, f"closed formula = compositional Delta on [01]^n, n <= {n}", range(n + 1),
            lambda m: C.coproduct_top_closed(m) == C.coproduct(C.top_word(m)), str)
    small = min(n, 4)
    words = [w for m in range(small + 1) for w in C.all_words(m)]
    coassoc = lambda w: (evaluate(iterated_coproduct(2), w)
                         == evaluate(_right_comb2(), w))
    _report(rep, f"coassociativity, n <= {small}", words, coassoc, C.render)
    _report(rep, f"d Delta = Delta d, n <= {small}", words,
            lambda w: tensor_boundary(C.coproduct(w).map(lambda k: ((k, 1),)), C.CUBICAL)
            == C.coproduct(C.boundary(w)), C.render)
    _report(rep, f"eps d = 0, n <= {small}", words, lambda w: C.counit(C.boundary(w)) == 0, C.render)
    return rep


def _right_comb2():
    from .terms import Compose, Cop, Id, Tensor
    return Compose(Tensor((Id(1), Cop())), Cop())


# cup-i ---------------------------------------------------------------------------

def _simplices(nmax: int):
    """Every simplex of the standard ``nmax``-simplex."""
    yield from S.faces_of(range(nmax + 1))


def suite_cupi(imax: int = 4, n: int = 5, sn: int = 5) -> SuiteReport:
    rep = SuiteReport("cupi")
    for i in range(imax + 1):
        rec, clo = cup_i_recursive(i), cup_i_closed(i)
        words = [w for m in range(n + 1) for w in C.all_words(m)]
        _report(rep, f"recursive = closed, i = {i}, cubical n <= {n}", words,
                lambda w: evaluate(rec, w) == evaluate(clo, w), C.render)
        _report(rep, f"recursive = closed, i = {i}, simplicial n <= {sn}", list(_simplices(sn)),
                lambda s: evaluate(rec, s, "simplicial") == evaluate(clo, s, "simplicial"), S.render)
    return rep


def _swap(x: Chain) -> Chain:
    return x.map(lambda k: (((k[1], k[0]), 1),))


def coherence_holds(i: int, w, side: str = "cubical") -> bool:
    """``d Delta_i + Delta_i d = (1 + T) Delta_{i-1}`` over Z/2."""
    st = C.CUBICAL if side == "cubical" else S.SIMPLICIAL
    bd = C.boundary if side == "cubical" else S.s_boundary
    x = Chain.basis((w,), ring=GF2)
    ev = evaluator(side)
    di = ev.chain(cup_i_closed(i), x) if i >= 0 else Chain.zero(GF2)
    lhs = tensor_boundary(di, st) + ev.chain(cup_i_closed(i), bd(Chain.basis(w, ring=GF2)).map(lambda k: (((k,), 1),)))
    prev = ev.chain(cup_i_closed(i - 1), x) if i >= 1 else Chain.zero(GF2)
    return lhs == prev + _swap(prev)


def suite_coherence(imax: int = 3, n: int = 5, sn: int = 5) -> SuiteReport:
    rep = SuiteReport("coherence")
    words = [w for m in range(n + 1) for w in C.all_words(m)]
    for i in range(imax + 1):
        _report(rep, f"mod 2 coherence, i = {i}, cubical n <= {n}", words,
                lambda w: coherence_holds(i, w), C.render)
        _report(rep, f"mod 2 coherence, i = {i}, simplicial n <= {sn}", list(_simplices(sn)),
                lambda s: coherence_holds(i, s, "simplicial"), S.render)
    return rep


# Cartan-Serre ------------------------------------------------------------------

def ordered_summands_hold(k: int, n: int) -> bool:
    """Every summand of ``Delta^{k-1}([01]^n)`` is weakly increasing in the symbolwise order."""
    out = evaluate(iterated_coproduct(k - 1), C.top_word(n))
    return all(all(C.leq(a, b) for a, b in zip(key, key[1:])) for key in out.raw())


def _ordered_tuples(k: int, n: int):
    # weakly increasing k-tuples of words, coordinatewise
    per_coord = list(combinations_with_replacement(C.SYMBOLS, k))
    for cols in product(per_coord, repeat=n):
        yield tuple(tuple(col[j] for col in cols) for j in range(k))


def cs_product_order_holds(xs) -> bool:
    k = len(xs)
    lhs = cs_map(evaluate(iterated_product(k), xs).map(lambda key: ((key[0], 1),)))
    imgs = [cs_map(x) for x in xs]
    if any(not im for im in imgs):
        return not lhs
    key = tuple(next(iter(im.raw())) for im in imgs)
    sign = 1
    for im in imgs:
        sign *= next(iter(im.raw().values()))
    rhs = sign * evaluate(iterated_product(k), key, "simplicial").map(lambda kk: ((kk[0], 1),))
    return lhs == rhs


def shuffle_equivariance_holds(spec, n: int) -> bool:
    g = shuffle_graph(spec)
    lhs = cs_tensor(evaluate(g, C.top_word(n)))
    rhs = evaluate(g, tuple(range(n + 1)), "simplicial")
    return lhs == rhs


def suite_cs(n: int = 5, kmax: int = 4, nsh: int = 4) -> SuiteReport:
    rep = SuiteReport("cs")
    words = [w for m in range(1, n + 1) for w in C.all_words(m)]
    _report(rep, f"CS chain map, n <= {n}", words, lambda w: cs_map(C.boundary(w)) == S.s_boundary(cs_map(w)),
            C.render)
    _report(rep, f"(CS x CS) Delta = Delta_AW CS, n <= {n}", words,
            lambda w: cs_tensor(C.coproduct(w)) == S.aw_coproduct(cs_map(w)), C.render)
    _report(rep, f"CS preserves the counit, n <= {n}", words,
            lambda w: C.counit(w) == S.s_counit(cs_map(w)) if cs_map(w) else C.counit(w) == 0, C.render)
    specs = [s for k in range(1, kmax + 1) for s in all_shuffle_specs(k)]
    cases = [(s, m) for s in specs for m in range(nsh + 1)]
    _report(rep, f"shuffle-graph equivariance, {len(specs)} specs k <= {kmax}, n <= {nsh}", cases,
            lambda c: shuffle_equivariance_holds(*c),
            lambda c: f"parts={c[0].parts} sigma={tuple(c[0].sigma)} n={c[1]}")
    _report(rep, f"ordered iterated coproduct, k <= {kmax + 1}, n <= {nsh + 1}",
            [(k, m) for k in range(1, kmax + 2) for m in range(nsh + 2)], lambda c: ordered_summands_hold(*c), str)
    tuples = [xs for k in range(1, kmax + 1) for m in range(1, nsh + 1) for xs in _ordered_tuples(k, m)]
    _report(rep, f"CS Star[k] = Star[k] CS^k on ordered tuples, k <= {kmax}, n <= {nsh}", tuples,
            cs_product_order_holds, lambda xs: " , ".join(C.render(x) for x in xs))
    return rep


# Eilenberg-Zilber ---------------------------------------------------------------

def suite_ez(n: int = 4) -> SuiteReport:
    rep = SuiteReport("ez")
    words = [w for m in range(1, n + 1) for w in C.all_words(m)]
    _report(rep, f"d EZ = EZ d, n <= {n}", words, lambda w: ez_word(C.boundary(w)) == S.p_boundary(ez_word(w)),
            C.render)
    _report(rep, f"(EZ x EZ) Delta = Delta_AW EZ, n <= {n}", words,
            lambda w: ez_tensor(C.coproduct(w)) == S.p_aw(ez_word(w)), C.render)
    got = ez_word(C.parse_word("[01][01]"))
    a, b = S.parse_product("011x001"), S.parse_product("001x011")
    rep.add("EZ([01][01]) = 011x001 + 001x011 up to sign",
            got.support() == {a, b} and all(abs(v) == 1 for v in got.raw().values()),
            got.format(S.render_product))
    return rep


# simplicial structure ---------------------------------------------------------

def suite_simplicial(n: int = 3) -> SuiteReport:
    rep = SuiteReport("simplicial")
    simplices = list(_simplices(n))
    pairs = [(a, b) for m in range(n + 1) for a in S.faces_of(range(m + 1)) for b in S.faces_of(range(m + 1))]
    show = lambda p: " , ".join(S.render(s) for s in p)
    _report(rep, f"AW counitality, n <= {n}", simplices,
            lambda s: S.aw_coproduct(s).map(lambda k: ((k[1], S._counit(k[0])),)) == Chain.basis(s)
            == S.aw_coproduct(s).map(lambda k: ((k[0], S._counit(k[1])),)), S.render)
    _report(rep, f"AW coassociativity, n <= {n}", simplices,
            lambda s: evaluate(iterated_coproduct(2), s, "simplicial") == evaluate(_right_comb2(), s, "simplicial"),
            S.render)
    _report(rep, f"d AW = AW d, n <= {n}", simplices,
            lambda s: tensor_boundary(S.aw_coproduct(s), S.SIMPLICIAL) == S.aw_coproduct(S.s_boundary(s)), S.render)
    _report(rep, f"eps(x * y) = 0, n <= {n}", pairs, lambda p: S.s_counit(S.join(*p)) == 0 if S.join(*p) else True,
            show)
    _report(rep, f"boundary of join, n <= {n}", pairs, lambda p: boundary_relation_holds(*p, side=S), show)
    prods = [ps for m in range(1, 4) for ps in _product_simplices(2, m)]
    _report(rep, "product-simplex AW counital and coassociative, (simplex^1)^2", prods, _product_aw_ok,
            S.render_product)
    return rep


def _product_simplices(k: int, m: int):
    rows = [tuple(0 if j < c else 1 for j in range(m + 1)) for c in range(m + 2)]
    for choice in product(rows, repeat=k):
        ps = S.ProductSimplex(choice)
        if not ps.is_degenerate():
            yield ps


def _product_aw_ok(s) -> bool:
    d = S.p_aw(s)
    left = d.map(lambda k: ((k[1], 1 if k[0].dim == 0 else 0),))
    right = d.map(lambda k: ((k[0], 1 if k[1].dim == 0 else 0),))
    a = d.map(lambda k: (((k[0],) + tuple(kk), c) for kk, c in S.p_aw(k[1]).raw().items()))
    b = d.map(lambda k: ((tuple(kk) + (k[1],), c) for kk, c in S.p_aw(k[0]).raw().items()))
    return left == Chain.basis(s) == right and a == b


# counterexamples ---------------------------------------------------------------

@dataclass
class NoGo:
    name: str
    lhs: Chain
    rhs: Chain
    render: object
    holds: bool
    note: str = ""

    def text(self) -> str:
        return (f"{self.name}\n    left : {self.lhs.format(self.render)}\n"
                f"    right: {self.rhs.format(self.render)}\n    {self.note}")


WITNESS = ("01x11", "011x001")


def counterexamples() -> list:
    out = []
    w = C.parse_word("[01][01]")
    d1 = cup_i_closed(1)
    lhs = ez_tensor(evaluate(d1, w))
    rhs = product_pushforward(d1, ez_word(w))
    wit = tuple(S.parse_product(t) for t in WITNESS)
    present = (lhs.coeff(wit) != 0, rhs.coeff(wit) != 0)
    out.append(NoGo("EZ does not commute with Delta_1: (EZ x EZ) Delta_1([01][01]) vs Delta_1 EZ([01][01])",
                    lhs, rhs, S.render_product_tensor, lhs != rhs and present == (True, False),
                    f"witness {' ⊗ '.join(WITNESS)}: left coeff {lhs.coeff(wit)}, right coeff {rhs.coeff(wit)}"))

    x, y = C.parse_word("[1][1]"), C.parse_word("[0][01]")
    l2 = cs_map(C.star(x, y))
    r2 = S.join(cs_map(x), cs_map(y)) if cs_map(y) else Chain.zero()
    out.append(NoGo("CS does not commute with *: CS([1][1] * [0][01]) vs CS([1][1]) * CS([0][01])",
                    l2, r2, S.render,
                    l2.support() == {(0, 1, 2)} and abs(l2.coeff((0, 1, 2))) == 1 and not r2,
                    f"CS([0][01]) = {cs_map(y).format(S.render)}"))

    t1 = tilde_cup1()
    l3 = cs_tensor(evaluate(t1, w))
    r3 = evaluate(t1, cs_map(w).map(lambda s: (((s,), 1),)), "simplicial")
    d1s = evaluate(d1, (0, 1, 2), "simplicial")
    Td1 = d1s.map(lambda k: (((k[1], k[0]), (-1) ** (S.degree(k[0]) * S.degree(k[1]))),))
    same_up_to_sign = lambda a, b: a == b or a == -b
    out.append(NoGo("CS does not commute with the non-shuffle cup-1: CS tilde-Delta_1([01][01]) vs tilde-Delta_1 CS([01][01])",
                    l3, r3, S.render_tensor,
                    l3 != r3 and same_up_to_sign(l3, Td1) and same_up_to_sign(r3, d1s),
                    f"left = T Delta_1([0,1,2]) ({'exact' if l3 == Td1 else 'up to sign'}), "
                    f"right = Delta_1([0,1,2]) ({'exact' if r3 == d1s else 'up to sign'})"))
    return out


def suite_counterexamples() -> SuiteReport:
    rep = SuiteReport("counterexamples")
    for ng in counterexamples():
        rep.add(ng.name, ng.holds, ng.note)
    return rep


SUITES = {
    "bialgebra": suite_bialgebra,
    "coproduct": suite_coproduct,
    "cupi": suite_cupi,
    "coherence": suite_coherence,
    "cs": suite_cs,
    "ez": suite_ez,
    "simplicial": suite_simplicial,
    "counterexamples": suite_counterexamples,
}

__all__ = [
    "Check", "NoGo", "SUITES", "SuiteReport", "WITNESS", "boundary_relation_holds", "coherence_holds",
    "counterexamples", "cs_product_order_holds", "ordered_summands_hold", "shuffle_equivariance_holds",
    "suite_bialgebra", "suite_coherence", "suite_coproduct", "suite_counterexamples", "suite_cs", "suite_cupi",
    "suite_ez", "suite_simplicial", "worked_boundary_example",
]
