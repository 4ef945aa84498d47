import random

import pytest
from hypothesis import given, strategies as st

from einfty import cubical as C
from einfty.algebra import Chain
from einfty.cubical import I, V0, V1, CubicalOperator, DimensionMismatchError

W = C.parse_word


def chain(*pairs):
    return Chain({W(t): c for t, c in pairs})


def test_parse_and_render():
    assert W("[0][01][1]") == (V0, I, V1)
    assert W("[0,1]") == (I,)
    assert C.render((V0, I, V1)) == "[0][01][1]"
    with pytest.raises(ValueError, match="position"):
        W("[0]x[1]")


def test_boundary_examples():
    assert C.boundary(W("[01]")) == chain(("[1]", 1), ("[0]", -1))
    assert C.boundary(W("[0]")) == 0
    x = chain(("[01][1][1]", 1), ("[0][01][1]", 1), ("[0][0][01]", 1))
    assert C.boundary(x) == chain(("[1][1][1]", 1), ("[0][0][0]", -1))


@pytest.mark.parametrize("n", range(7))
def test_boundary_squares_to_zero(n):
    for w in C.all_words(n):
        assert C.boundary(C.boundary(w)) == 0


def test_counit_examples():
    assert C.counit(W("[0][1]")) == 1
    assert C.counit(W("[01]")) == 0
    assert C.counit(()) == 1


def test_coproduct_examples():
    assert C.coproduct(W("[01]")) == Chain({((V0,), (I,)): 1, ((I,), (V1,)): 1})
    assert C.coproduct(W("[1]")) == Chain({((V1,), (V1,)): 1})
    expected = Chain({
        (W("[01][01]"), W("[1][1]")): 1,
        (W("[01][0]"), W("[1][01]")): 1,
        (W("[0][01]"), W("[01][1]")): -1,
        (W("[0][0]"), W("[01][01]")): 1,
    })
    assert C.coproduct(W("[01][01]")) == expected


def test_empty_cube():
    assert C.coproduct(()) == Chain({((), ()): 1})
    assert C.star((), ()) == 0


@pytest.mark.parametrize("n", range(7))
def test_closed_coproduct_formula(n):
    assert C.coproduct_top_closed(n) == C.coproduct(C.top_word(n))


def test_star_examples():
    assert C.star(W("[0][0][0]"), W("[1][1][1]")) == chain(
        ("[01][1][1]", 1), ("[0][01][1]", 1), ("[0][0][01]", 1))
    assert C.star(W("[0]"), W("[0]")) == 0
    assert C.star(W("[0]"), W("[1]")) == chain(("[01]", 1))
    assert C.star(W("[1]"), W("[0]")) == chain(("[01]", -1))
    # regression value for the pair used by the Cartan-Serre no-go example
    assert C.star(W("[1][1]"), W("[0][01]")) == chain(("[01][01]", -1))
    with pytest.raises(DimensionMismatchError):
        C.star(W("[0]"), W("[0][0]"))


def _star_by_formula(x, y):
    # literal sum (-1)^{|x|} sum_i x_<i eps(y_<i) (x_i * y_i) eps(x_>i) y_>i
    out = Chain()
    for i in range(len(x)):
        c = {(V0, V1): 1, (V1, V0): -1}.get((x[i], y[i]), 0)
        c *= C.counit(y[:i]) * C.counit(x[i + 1:])
        if c:
            out = out + Chain.basis(x[:i] + (I,) + y[i + 1:], (-1) ** C.degree(x) * c)
    return out


@pytest.mark.parametrize("n", range(4))
def test_star_matches_literal_formula(n):
    for x in C.all_words(n):
        for y in C.all_words(n):
            assert C.star(x, y) == _star_by_formula(x, y)


def test_operator_examples():
    d10 = CubicalOperator.coface(2, 1, 0)
    assert C.apply_operator(d10, W("[01]")) == chain(("[0][01]", 1))
    s1 = CubicalOperator.codegeneracy(2, 1)
    assert C.apply_operator(s1, W("[01][1]")) == 0
    assert C.apply_operator(s1, W("[0][01]")) == chain(("[01]", 1))
    with pytest.raises(IndexError):
        CubicalOperator.coface(2, 3, 0)
    with pytest.raises(DimensionMismatchError):
        C.apply_operator(s1, W("[0]"))


words = st.integers(0, 5).flatmap(lambda n: st.tuples(*[st.sampled_from(C.SYMBOLS)] * n))


@st.composite
def operators(draw, dom=None):
    n = draw(st.integers(0, 4)) if dom is None else dom
    steps = []
    m = n
    for _ in range(draw(st.integers(0, 4))):
        if m > 0 and draw(st.booleans()):
            steps.append(("s", draw(st.integers(1, m))))
            m -= 1
        else:
            steps.append(("d", draw(st.integers(1, m + 1)), draw(st.integers(0, 1))))
            m += 1
    return n, CubicalOperator.from_steps(n, steps)


@given(operators())
def test_operator_normal_form_round_trips(data):
    n, op = data
    assert CubicalOperator.from_steps(n, op.steps()) == op


@given(operators(), st.data())
def test_counit_and_coproduct_are_natural(data, draw):
    n, op = data
    w = draw.draw(st.tuples(*[st.sampled_from(C.SYMBOLS)] * n))
    img = C.apply_operator(op, w)
    assert C.counit(img) == C.counit(w)
    lhs = C.coproduct(w).map(lambda k: (((a, b), 1) for a in [op.apply_word(k[0])] for b in [op.apply_word(k[1])]
                                          if a is not None and b is not None))
    assert lhs == C.coproduct(img)


def test_boundary_relation_random_sweep():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 6)
        x = tuple(rng.choice(C.SYMBOLS) for _ in range(n))
        y = tuple(rng.choice(C.SYMBOLS) for _ in range(n))
        X, Y = Chain.basis(x), Chain.basis(y)
        lhs = C.boundary(C.star(X, Y)) + C.star(C.boundary(X), Y) + (-1) ** C.degree(x) * C.star(X, C.boundary(Y))
        assert lhs == C.counit(X) * Y - C.counit(Y) * X
        assert C.counit(C.star(X, Y)) == 0


@given(words)
def test_star_has_degree_one(w):
    for y in C.all_words(len(w)):
        for z in C.star(w, y).raw():
            assert C.degree(z) == C.degree(w) + C.degree(y) + 1
