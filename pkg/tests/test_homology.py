import numpy as np
import pytest
from hypothesis import given, strategies as st
from sympy import Matrix, ZZ as SZZ
from sympy.matrices.normalforms import invariant_factors

from einfty.algebra import GF2, Ring, ZZ
from einfty.catalog import EXAMPLES, LATTICE_EXAMPLES, cube_surface, hollow_square, lattice_torus, point, rp2, torus_presented
from einfty.complexes import triangulate
from einfty.homology import (
    Cochain, CochainError, CohomologyMod2, bockstein_oracle, cup_product, ez_is_quasi_isomorphism, homology,
    matmul, smith_normal_form, snf_diagonal, sq_agrees_under_ez, steenrod_report, steenrod_sq, unit_class,
)


def _det(M):
    return Matrix(M).det() if M else 1


@pytest.mark.parametrize("M,diag", [
    ([[2, 4], [6, 8]], [2, 4]),
    ([[0, 0], [0, 0]], []),
    ([[1, 1, 0], [0, 1, 1], [1, 0, 1]], [1, 1, 2]),
    ([[6]], [6]),
    ([[-3, 0], [0, 0]], [3]),
])
def test_snf_examples(M, diag):
    assert snf_diagonal(M) == diag


matrices = st.integers(1, 5).flatmap(lambda r: st.integers(1, 5).flatmap(
    lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=r, max_size=r)))


@given(matrices)
def test_snf_against_sympy(M):
    U, D, V = smith_normal_form(M)
    assert matmul(matmul(U, M), V) == D
    assert abs(_det(U)) == 1 and abs(_det(V)) == 1
    diag = [D[i][i] for i in range(min(len(D), len(D[0]))) if D[i][i]]
    assert all(D[i][j] == 0 for i in range(len(D)) for j in range(len(D[0])) if i != j)
    assert all(b % a == 0 for a, b in zip(diag, diag[1:]))
    oracle = [abs(int(x)) for x in invariant_factors(Matrix(M), domain=SZZ) if x != 0]
    assert diag == oracle


def _groups(X, ring=ZZ):
    return [str(g) for g in homology(X, ring)]


def test_integral_homology_of_classical_spaces():
    assert _groups(point()) == ["Z"]
    assert _groups(hollow_square()) == ["Z", "Z"]
    assert _groups(cube_surface()) == ["Z", "0", "Z"]
    assert _groups(lattice_torus()) == ["Z", "Z^2", "Z"]
    assert _groups(torus_presented()) == ["Z", "Z^2", "Z"]
    assert _groups(rp2()) == ["Z", "Z/2", "0"]


def test_homology_with_field_coefficients():
    assert [g.betti for g in homology(rp2(), GF2)] == [1, 1, 1]
    assert [g.betti for g in homology(rp2(), Ring(3))] == [1, 0, 0]
    assert str(homology(lattice_torus(), GF2)[1]) == "Z/2^2"


@pytest.mark.parametrize("name", sorted(LATTICE_EXAMPLES))
def test_triangulation_preserves_homology(name):
    X = LATTICE_EXAMPLES[name]()
    T = triangulate(X)
    assert _groups(X) == _groups(T)
    assert ez_is_quasi_isomorphism(X, T)


def test_cohomology_dimensions():
    for name, dims in [("rp2", [1, 1, 1]), ("lattice_torus", [1, 2, 1]), ("cube_surface", [1, 0, 1]),
                       ("torus_presented", [1, 2, 1])]:
        H = CohomologyMod2(EXAMPLES[name]())
        assert [H.dimension(d) for d in range(3)] == dims


def test_torus_cup_pairing_is_nondegenerate():
    for X in (lattice_torus(), torus_presented()):
        H = CohomologyMod2(X)
        a, b = H.basis(1)
        assert H.express(cup_product(a, b)) == (1,) == H.express(cup_product(b, a))
        assert H.express(cup_product(a, a)) == (0,) == H.express(cup_product(b, b))


def test_rp2_generator_squares_to_top_class():
    H = CohomologyMod2(rp2())
    (a,) = H.basis(1)
    assert H.express(cup_product(a, a)) == (1,)


def test_unit_class_is_a_unit():
    X = lattice_torus()
    H = CohomologyMod2(X)
    one = unit_class(X)
    for a in H.basis(1):
        assert H.express(cup_product(one, a)) == H.express(a) == H.express(cup_product(a, one))


def _random_coboundary(X, d, draw):
    if d == 0:
        return Cochain.zero(X, 0)
    bits = draw(st.lists(st.integers(0, 1), min_size=len(X.cells(d - 1)), max_size=len(X.cells(d - 1))))
    return Cochain(X, d - 1, bits).coboundary()


@given(st.sampled_from(["lattice_torus", "rp2", "torus_presented"]), st.data())
def test_cup_product_independent_of_representatives(name, data):
    X = EXAMPLES[name]()
    H = CohomologyMod2(X)
    a, b = data.draw(st.sampled_from(H.basis(1))), data.draw(st.sampled_from(H.basis(1)))
    a2 = a + _random_coboundary(X, 1, data.draw)
    b2 = b + _random_coboundary(X, 1, data.draw)
    assert H.express(cup_product(a, b)) == H.express(cup_product(a2, b2))


@given(st.sampled_from(sorted(EXAMPLES)), st.data())
def test_sq_independent_of_representatives(name, data):
    X = EXAMPLES[name]()
    H = CohomologyMod2(X)
    d = data.draw(st.integers(0, X.dim))
    if not H.basis(d):
        return
    a = data.draw(st.sampled_from(H.basis(d)))
    a2 = a + _random_coboundary(X, d, data.draw)
    for k in range(0, X.dim - d + 1):
        assert H.express(steenrod_sq(k, a)) == H.express(steenrod_sq(k, a2))


@pytest.mark.parametrize("name", sorted(EXAMPLES))
def test_steenrod_axioms(name):
    X = EXAMPLES[name]()
    H = CohomologyMod2(X)
    for d in range(X.dim + 1):
        for a in H.basis(d):
            assert H.express(steenrod_sq(0, a)) == H.express(a)
            if d + 1 <= X.dim:
                assert H.express(steenrod_sq(1, a)) == H.express(bockstein_oracle(a))
            if 2 * d <= X.dim:
                assert H.express(steenrod_sq(d, a)) == H.express(cup_product(a, a))
            for k in range(d + 1, X.dim - d + 1):
                assert not steenrod_sq(k, a).values.any()


def test_sq1_on_rp2_and_torus():
    rep = steenrod_report(rp2(), 1)
    assert rep[1]["sq"]["matrix"] == [[1]] and rep[1]["torsion"] == [2]
    rep = steenrod_report(lattice_torus(), 1)
    assert rep[1]["sq"]["matrix"] == [[0, 0]]


@pytest.mark.parametrize("name", sorted(LATTICE_EXAMPLES))
def test_sq_agrees_under_ez(name):
    X = LATTICE_EXAMPLES[name]()
    T = triangulate(X)
    for k in range(X.dim + 1):
        assert sq_agrees_under_ez(X, k, T)


def test_cochain_errors():
    X = rp2()
    with pytest.raises(CochainError):
        Cochain(X, 1, [0, 1])
    not_closed = Cochain.from_cells(X, 1, [X.cells(1)[0]])
    with pytest.raises(CochainError):
        steenrod_sq(1, not_closed)
    with pytest.raises(CochainError):
        CohomologyMod2(X).express(not_closed)
    with pytest.raises(ValueError):
        steenrod_sq(-1, unit_class(X))
    with pytest.raises(CochainError):
        Cochain.zero(X, 1) + Cochain.zero(X, 2)
