"""Small named complexes with classically known (co)homology."""
from __future__ import annotations

from itertools import product

from .complexes import LatticeCubicalComplex, PresentedCubicalSet, SimplicialComplex


def point() -> LatticeCubicalComplex:
    return LatticeCubicalComplex([[[0, 0]]])


def hollow_square() -> LatticeCubicalComplex:
    """Boundary of the unit square in ``Z^2``: a circle."""
    return LatticeCubicalComplex([
        [[0, 1], [0, 0]], [[0, 1], [1, 1]], [[0, 0], [0, 1]], [[1, 1], [0, 1]],
    ])


def _unit_cube(corner):
    return tuple((c, c + 1) for c in corner)


def _surface(solid) -> LatticeCubicalComplex:
    """Squares lying on exactly one unit cube of ``solid``."""
    count: dict = {}
    for corner in solid:
        cube = _unit_cube(corner)
        for j in range(3):
            a, b = cube[j]
            for v in (a, b):
                face = cube[:j] + ((v, v),) + cube[j + 1:]
                count[face] = count.get(face, 0) + 1
    return LatticeCubicalComplex([f for f, k in count.items() if k == 1])


def cube_surface() -> LatticeCubicalComplex:
    """The six squares bounding ``[0,1]^3``: a 2-sphere."""
    return _surface([(0, 0, 0)])


def lattice_torus() -> LatticeCubicalComplex:
    """Surface of a 3x3x1 block with its centre cube removed: a torus made of 32 squares."""
    solid = [(x, y, 0) for x, y in product(range(3), repeat=2) if (x, y) != (1, 1)]
    return _surface(solid)


def torus_presented() -> PresentedCubicalSet:
    """One square ``Q`` with opposite edges identified."""
    return PresentedCubicalSet(
        cells=[{"id": "v", "dim": 0}, {"id": "a", "dim": 1}, {"id": "b", "dim": 1}, {"id": "Q", "dim": 2}],
        faces={
            "a": [{"i": 1, "e": 0, "target": "v"}, {"i": 1, "e": 1, "target": "v"}],
            "b": [{"i": 1, "e": 0, "target": "v"}, {"i": 1, "e": 1, "target": "v"}],
            "Q": [{"i": 1, "e": 0, "target": "a"}, {"i": 1, "e": 1, "target": "a"},
                  {"i": 2, "e": 0, "target": "b"}, {"i": 2, "e": 1, "target": "b"}],
        },
    )


RP2_FACETS = [
    (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
    (1, 2, 4), (2, 3, 5), (1, 3, 4), (2, 4, 5), (1, 3, 5),
]


def rp2() -> SimplicialComplex:
    """Six-vertex real projective plane."""
    return SimplicialComplex(RP2_FACETS)


LATTICE_EXAMPLES = {
    "point": point,
    "hollow_square": hollow_square,
    "cube_surface": cube_surface,
    "lattice_torus": lattice_torus,
}

EXAMPLES = dict(LATTICE_EXAMPLES, torus_presented=torus_presented, rp2=rp2)

__all__ = ["EXAMPLES", "LATTICE_EXAMPLES", "RP2_FACETS", "cube_surface", "hollow_square",
           "lattice_torus", "point", "rp2", "torus_presented"]
