from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from einfty import simplicial as S
from einfty.algebra import Chain


def ch(*pairs):
    return Chain({k: c for k, c in pairs})


def test_boundary_examples():
    assert S.s_boundary((0, 1)) == ch(((1,), 1), ((0,), -1))
    assert S.s_boundary((0, 1, 2)) == ch(((1, 2), 1), ((0, 2), -1), ((0, 1), 1))


def test_product_boundary_example():
    s = S.parse_product("011x001")
    # deleting column 0 gives 11x01, column 1 gives 01x01, column 2 gives 01x00
    expected = Chain({S.parse_product("11x01"): 1, S.parse_product("01x01"): -1, S.parse_product("01x00"): 1})
    assert S.p_boundary(s) == expected
    assert S.p_boundary(S.p_boundary(s)) == 0


def test_product_degenerate_faces_are_dropped():
    s = S.parse_product("0011x0001")
    for face in S.p_boundary(s).raw():
        assert not face.is_degenerate()


def test_aw_examples():
    assert S.aw_coproduct((0, 1)) == ch((((0,), (0, 1)), 1), (((0, 1), (1,)), 1))
    assert S.aw_coproduct((5,)) == ch((((5,), (5,)), 1))
    assert S.aw_coproduct((0, 1, 2)) == ch((((0,), (0, 1, 2)), 1), (((0, 1), (1, 2)), 1), (((0, 1, 2), (2,)), 1))


def test_counit_examples():
    assert S.s_counit((3,)) == 1
    assert S.s_counit((0, 1)) == 0
    assert S.s_counit(ch(((0,), 2), ((1,), 3))) == 5


def test_join_examples():
    assert S.join((0,), (1,)) == ch(((0, 1), 1))
    assert S.join((1,), (0,)) == ch(((0, 1), -1))
    assert S.join((0, 1), (1,)) == 0


def _join_oracle(a, b):
    # bubble-sort the concatenated vertex list, counting swaps
    if set(a) & set(b):
        return Chain()
    v = list(a + b)
    swaps = 0
    for i in range(len(v)):
        for j in range(len(v) - 1 - i):
            if v[j] > v[j + 1]:
                v[j], v[j + 1] = v[j + 1], v[j]
                swaps += 1
    return Chain.basis(tuple(v), (-1) ** (len(a) - 1 + swaps))


simplices = st.sets(st.integers(0, 6), min_size=1, max_size=4).map(lambda s: tuple(sorted(s)))


@given(simplices, simplices)
def test_join_against_sorting_oracle(a, b):
    assert S.join(a, b) == _join_oracle(a, b)


@given(simplices, simplices)
def test_join_boundary_relation(a, b):
    A, B = Chain.basis(a), Chain.basis(b)
    lhs = S.s_boundary(S.join(A, B)) + S.join(S.s_boundary(A), B) + (-1) ** S.degree(a) * S.join(A, S.s_boundary(B))
    assert lhs == S.s_counit(A) * B - S.s_counit(B) * A


@pytest.mark.parametrize("n", range(6))
def test_boundary_squares_to_zero(n):
    for s in S.faces_of(range(n + 1)):
        assert S.s_boundary(S.s_boundary(s)) == 0


def test_parse_render():
    assert S.parse_simplex("[0,1,2]") == (0, 1, 2) == S.parse_simplex("[012]")
    assert S.render((0, 2)) == "[0,2]"
    assert S.render_product(S.parse_product("011×001")) == "011x001"
    with pytest.raises(S.SimplexError):
        S.parse_simplex("[1,0]")
    with pytest.raises(S.SimplexError):
        S.parse_product("012x001")


def test_product_aw_is_coassociative_and_counital():
    rows = [(0, 0, 0, 1), (0, 0, 1, 1), (0, 1, 1, 1)]
    for r1, r2 in permutations(rows, 2):
        s = S.ProductSimplex((r1, r2))
        if s.is_degenerate():
            continue
        d = S.p_aw(s)
        assert d.map(lambda k: ((k[1], 1 if k[0].dim == 0 else 0),)) == Chain.basis(s)
        a = d.map(lambda k: (((k[0],) + kk, c) for kk, c in S.p_aw(k[1]).raw().items()))
        b = d.map(lambda k: ((kk + (k[1],), c) for kk, c in S.p_aw(k[0]).raw().items()))
        assert a == b
