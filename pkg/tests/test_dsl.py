import pytest
from hypothesis import given, strategies as st

from einfty import cubical as C
from einfty.algebra import Permutation
from einfty.dsl import TermSyntaxError, parse_term, render_term
from einfty.terms import (
    Compose, Cop, Counit, Id, Perm, Prod, Tensor, cup_i_closed, cup_i_recursive, evaluate, iterated_coproduct,
)


def test_atoms():
    assert parse_term("delta") == Cop()
    assert parse_term("eps") == Counit()
    assert parse_term("star") == Prod()
    assert parse_term(" id( 2 ) ") == Id(2)
    assert parse_term("-perm(2,1)") == Perm((2, 1), -1)


def test_cup_one_spelled_out():
    t = parse_term("comp(ten(star,id(1)),comp(perm(1,3,2),itdelta(2)))")
    assert t == cup_i_closed(1)
    assert parse_term("shuffle(2,1;1,3,2)") == cup_i_closed(1)
    assert parse_term("cup(3)") == cup_i_closed(3)


def test_ten_of_one_factor_is_that_factor():
    assert parse_term("ten(delta)") == Cop()


@pytest.mark.parametrize("src,pos", [
    ("", 0), ("delta)", 5), ("comp(delta delta)", 11), ("perm(1,1)", 0),
    ("comp(delta,delta)", 0), ("-delta", 1), ("shuffle(2,1;3,1,2)", 0), ("foo", 0), ("id(1", 4), ("id(#)", 3),
])
def test_errors_report_positions(src, pos):
    with pytest.raises(TermSyntaxError) as exc:
        parse_term(src)
    assert exc.value.pos == pos
    assert "position" in str(exc.value)


@pytest.mark.parametrize("i", range(5))
def test_round_trip_of_recursive_terms(i):
    t = cup_i_recursive(i)
    assert parse_term(render_term(t)) == t


def test_parsed_term_evaluates():
    t = parse_term("comp(ten(delta,id(1)),delta)")
    assert evaluate(t, C.top_word(2)) == evaluate(iterated_coproduct(2), C.top_word(2))


leaves = st.one_of(
    st.integers(0, 3).map(Id), st.just(Counit()), st.just(Cop()), st.just(Prod()),
    st.integers(1, 4).flatmap(lambda k: st.tuples(st.permutations(range(1, k + 1)), st.sampled_from((1, -1))))
    .map(lambda a: Perm(Permutation(a[0]), a[1])),
)


def _fill(draw, n):
    # a tensor of leaves with exactly n inputs
    fs, left = [], n
    while left:
        f = draw(st.sampled_from([Id(1), Cop(), Counit()] + ([Prod()] if left >= 2 else [])))
        fs.append(f)
        left -= f.inputs
    return fs[0] if len(fs) == 1 else Tensor(tuple(fs))


@st.composite
def terms(draw, depth=3):
    if depth == 0 or draw(st.integers(0, 2)) == 0:
        return draw(leaves)
    if draw(st.booleans()):
        return Tensor(tuple(draw(st.lists(terms(depth=depth - 1), min_size=2, max_size=3))))
    inner = draw(terms(depth=depth - 1))
    if inner.outputs == 0:
        return inner
    return Compose(_fill(draw, inner.outputs), inner)


@given(terms())
def test_render_parse_round_trip(t):
    assert parse_term(render_term(t)) == t
