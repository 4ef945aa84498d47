"""Finite cubical and simplicial complexes, their chains, and per-cell pushforward of terms.

Three input models share the :class:`CellComplex` interface:

* :class:`LatticeCubicalComplex` -- elementary cubes in ``Z^d``;
* :class:`PresentedCubicalSet` -- cells glued by explicit face tables;
* :class:`SimplicialComplex` -- facets over globally ordered integer vertices.

A term of arity ``(1, r)`` is pushed forward cell by cell. On a cubical cell
of dimension ``n`` the term is evaluated once on the top word ``[0,1]^n`` and
each output word is transported along the cell's characteristic map. On a
simplex it is evaluated directly, since the Alexander-Whitney coproduct and the
join never leave the faces of the simplex.
"""
from __future__ import annotations

import json
import os
from itertools import combinations, permutations

from . import cubical as cub
from .algebra import Chain
from .terms import ArityError, Term, evaluator, validate


class ComplexError(ValueError):
    pass


class CellComplex:
    """Common chain-level interface; subclasses supply cells, boundaries and transport."""

    side = "cubical"

    # subclasses implement
    def cells(self, d: int) -> list:
        raise NotImplementedError

    @property
    def dim(self) -> int:
        raise NotImplementedError

    def cell_dim(self, c) -> int:
        raise NotImplementedError

    def boundary_cell(self, c) -> list:
        raise NotImplementedError

    def _pushforward_cell(self, term: Term, c) -> dict:
        raise NotImplementedError

    # derived
    def index(self, d: int) -> dict:
        cache = self.__dict__.setdefault("_index", {})
        if d not in cache:
            cache[d] = {c: k for k, c in enumerate(self.cells(d))}
        return cache[d]

    def all_cells(self) -> list:
        return [c for d in range(self.dim + 1) for c in self.cells(d)]

    def ranks(self) -> list:
        return [len(self.cells(d)) for d in range(self.dim + 1)]

    def boundary(self, x: Chain) -> Chain:
        return x.map(lambda c: ((c2, s) for s, c2 in self.boundary_cell(c)))

    def boundary_matrix(self, d: int) -> list:
        """Integer matrix of ``d_d : C_d -> C_{d-1}``; rows follow ``cells(d-1)``."""
        rows = self.cells(d - 1) if d >= 1 else []
        cols = self.cells(d)
        idx = self.index(d - 1) if d >= 1 else {}
        mat = [[0] * len(cols) for _ in rows]
        for j, c in enumerate(cols):
            for s, f in self.boundary_cell(c):
                mat[idx[f]][j] += s
        return mat

    def pushforward(self, term: Term, x) -> Chain:
        """Apply a term of arity ``(1, r)`` to a chain of this complex."""
        m, _, _ = validate(term)
        if m != 1:
            raise ArityError(f"pushforward needs a term with one input, got {term.arity}")
        x = x if isinstance(x, Chain) else Chain.basis(x)
        acc: dict = {}
        for c, coeff in x.raw().items():
            for key, v in self._pushforward_cell(term, c).items():
                acc[key] = acc.get(key, 0) + coeff * v
        return Chain._wrap(acc, x.ring)

    def pushforward_cell(self, term: Term, c) -> Chain:
        return self.pushforward(term, Chain.basis(c))


# lattice cubical complexes -------------------------------------------------------

def _check_cube(cube) -> tuple:
    out = []
    for iv in cube:
        a, b = (int(v) for v in iv)
        if b not in (a, a + 1):
            raise ComplexError(f"elementary interval must be [k,k] or [k,k+1], got {list(iv)}")
        out.append((a, b))
    return tuple(out)


def cube_dim(cube: tuple) -> int:
    return sum(1 for a, b in cube if b > a)


def _faces(cube: tuple):
    for j, (a, b) in enumerate(cube):
        if b > a:
            yield cube[:j] + ((a, a),) + cube[j + 1:]
            yield cube[:j] + ((b, b),) + cube[j + 1:]


class LatticeCubicalComplex(CellComplex):
    """Face-closed set of elementary cubes in ``Z^d``.

    A cell's characteristic map sends interval coordinate ``k`` of the
    representable cube to its ``k``-th nondegenerate axis, so a cube word
    picks out a face by fixing those axes at the lower or upper end.
    """

    def __init__(self, cubes, ambient: int | None = None):
        cubes = [_check_cube(c) for c in cubes]
        if ambient is None:
            ambient = len(cubes[0]) if cubes else 0
        if any(len(c) != ambient for c in cubes):
            raise ComplexError(f"every cube needs {ambient} intervals")
        self.ambient = ambient
        closed = set()
        stack = list(cubes)
        while stack:
            c = stack.pop()
            if c in closed:
                continue
            closed.add(c)
            stack.extend(_faces(c))
        self._by_dim: dict = {}
        for c in closed:
            self._by_dim.setdefault(cube_dim(c), []).append(c)
        for v in self._by_dim.values():
            v.sort()
        self._dim = max(self._by_dim, default=-1)

    @classmethod
    def from_json(cls, data: dict) -> "LatticeCubicalComplex":
        try:
            return cls(data["cubes"], int(data["dim"]))
        except KeyError as exc:
            raise ComplexError(f"lattice complex is missing the {exc.args[0]!r} field") from None

    def to_json(self) -> dict:
        return {"dim": self.ambient, "cubes": [[list(iv) for iv in c] for c in self.all_cells()]}

    def cells(self, d: int) -> list:
        return self._by_dim.get(d, [])

    @property
    def dim(self) -> int:
        return self._dim

    def cell_dim(self, c) -> int:
        return cube_dim(c)

    def axes(self, c) -> tuple:
        return tuple(j for j, (a, b) in enumerate(c) if b > a)

    def lower_corner(self, c) -> tuple:
        return tuple(a for a, _ in c)

    def boundary_cell(self, c) -> list:
        out = []
        for k, j in enumerate(self.axes(c)):
            a, b = c[j]
            s = -1 if k % 2 else 1
            out.append((s, c[:j] + ((b, b),) + c[j + 1:]))
            out.append((-s, c[:j] + ((a, a),) + c[j + 1:]))
        return out

    def transport(self, c, word: tuple):
        """The face of ``c`` named by a word of its representable cube."""
        axes = self.axes(c)
        if len(word) != len(axes):
            raise cub.DimensionMismatchError(f"word of length {len(word)} on a {len(axes)}-cell")
        out = list(c)
        for j, s in zip(axes, word):
            a, b = c[j]
            if s == cub.V0:
                out[j] = (a, a)
            elif s == cub.V1:
                out[j] = (b, b)
        return tuple(out)

    def _pushforward_cell(self, term, c) -> dict:
        top = evaluator("cubical").basis(term, (cub.top_word(cube_dim(c)),))
        out: dict = {}
        for key, v in top.items():
            k2 = tuple(self.transport(c, w) for w in key)
            out[k2] = out.get(k2, 0) + v
        return out


# presented cubical sets --------------------------------------------------------

class PresentedCubicalSet(CellComplex):
    """Cubical set given by nondegenerate cells and their face tables.

    A possibly degenerate element of dimension ``m`` is stored as
    ``(cell, kept, m)``: it is ``cell`` precomposed with the projection
    ``2^m -> 2^{dim cell}`` that keeps the coordinates listed in ``kept``.
    A face entry with degeneracy list ``[j_1 > ... > j_r]`` stands for
    ``s_{j_1} ... s_{j_r}(target)``.
    """

    def __init__(self, cells, faces):
        self.dims: dict = {}
        self.order: list = []
        for c in cells:
            cid, d = str(c["id"]), int(c["dim"])
            if cid in self.dims:
                raise ComplexError(f"duplicate cell id {cid!r}")
            if d < 0:
                raise ComplexError(f"cell {cid!r} has negative dimension")
            self.dims[cid] = d
            self.order.append(cid)
        self.table: dict = {}
        for cid, entries in faces.items():
            if cid not in self.dims:
                raise ComplexError(f"face table for unknown cell {cid!r}")
            n = self.dims[cid]
            for ent in entries:
                i, e = int(ent["i"]), int(ent["e"])
                tgt = str(ent["target"])
                degens = [int(j) for j in ent.get("degens", [])]
                if not 1 <= i <= n or e not in (0, 1):
                    raise ComplexError(f"cell {cid!r}: face index (i={i}, e={e}) out of range")
                if (cid, i, e) in self.table:
                    raise ComplexError(f"cell {cid!r}: face (i={i}, e={e}) given twice")
                if tgt not in self.dims:
                    raise ComplexError(f"cell {cid!r}: unknown face target {tgt!r}")
                if any(a <= b for a, b in zip(degens, degens[1:])):
                    raise ComplexError(f"cell {cid!r}: degeneracies must be strictly decreasing, got {degens}")
                if self.dims[tgt] + len(degens) != n - 1:
                    raise ComplexError(
                        f"cell {cid!r}: face (i={i}, e={e}) has dimension "
                        f"{self.dims[tgt]}+{len(degens)}, expected {n - 1}")
                elem = (tgt, tuple(range(1, self.dims[tgt] + 1)), self.dims[tgt])
                for j in reversed(degens):
                    if not 1 <= j <= elem[2] + 1:
                        raise ComplexError(f"cell {cid!r}: degeneracy index {j} out of range")
                    elem = self._degen(elem, j)
                self.table[(cid, i, e)] = elem
        for cid in self.order:
            for i in range(1, self.dims[cid] + 1):
                for e in (0, 1):
                    if (cid, i, e) not in self.table:
                        raise ComplexError(f"cell {cid!r}: missing face (i={i}, e={e})")
        self._check_identities()
        self._dim = max(self.dims.values(), default=-1)

    @classmethod
    def from_json(cls, data: dict) -> "PresentedCubicalSet":
        try:
            return cls(data["cells"], data.get("faces", {}))
        except KeyError as exc:
            raise ComplexError(f"presented cubical set is missing the {exc.args[0]!r} field") from None

    @staticmethod
    def _degen(elem, j):
        cell, kept, m = elem
        return (cell, tuple(k + 1 if k >= j else k for k in kept), m + 1)

    def face(self, elem, i: int, e: int):
        """``d_i^e`` of an element ``(cell, kept, m)``."""
        cell, kept, m = elem
        if not 1 <= i <= m:
            raise IndexError(f"face index {i} out of range for an element of dimension {m}")
        shift = tuple(k - 1 if k > i else k for k in kept if k != i)
        if i not in kept:
            return (cell, shift, m - 1)
        p = kept.index(i) + 1
        tgt, kept_f, _ = self.table[(cell, p, e)]
        return (tgt, tuple(shift[q - 1] for q in kept_f), m - 1)

    def _check_identities(self):
        for cid in self.order:
            n = self.dims[cid]
            x = (cid, tuple(range(1, n + 1)), n)
            for j in range(2, n + 1):
                for i in range(1, j):
                    for e in (0, 1):
                        for w in (0, 1):
                            lhs = self.face(self.face(x, j, w), i, e)
                            rhs = self.face(self.face(x, i, e), j - 1, w)
                            if lhs != rhs:
                                raise ComplexError(
                                    f"cell {cid!r} violates d_{i}^{e} d_{j}^{w} = d_{j - 1}^{w} d_{i}^{e}: "
                                    f"{self._show(lhs)} vs {self._show(rhs)}")

    @staticmethod
    def _show(elem) -> str:
        cell, kept, m = elem
        return cell if len(kept) == m else f"{cell}{list(kept)}/{m}"

    def cells(self, d: int) -> list:
        cache = self.__dict__.setdefault("_cells", {})
        if d not in cache:
            cache[d] = [c for c in self.order if self.dims[c] == d]
        return cache[d]

    @property
    def dim(self) -> int:
        return self._dim

    def cell_dim(self, c) -> int:
        return self.dims[c]

    @staticmethod
    def _nondegenerate(elem):
        cell, kept, m = elem
        return cell if len(kept) == m else None

    def boundary_cell(self, c) -> list:
        n = self.dims[c]
        x = (c, tuple(range(1, n + 1)), n)
        acc: dict = {}
        for i in range(1, n + 1):
            s = -1 if (i - 1) % 2 else 1
            for e, t in ((1, s), (0, -s)):
                f = self._nondegenerate(self.face(x, i, e))
                if f is not None:
                    acc[f] = acc.get(f, 0) + t
        return [(v, f) for f, v in acc.items() if v]

    def transport(self, c, word: tuple):
        n = self.dims[c]
        if len(word) != n:
            raise cub.DimensionMismatchError(f"word of length {len(word)} on a {n}-cell")
        elem = (c, tuple(range(1, n + 1)), n)
        for i in range(n, 0, -1):  # highest slot first keeps lower indices valid
            if word[i - 1] != cub.I:
                elem = self.face(elem, i, 0 if word[i - 1] == cub.V0 else 1)
        return self._nondegenerate(elem)

    def _pushforward_cell(self, term, c) -> dict:
        top = evaluator("cubical").basis(term, (cub.top_word(self.dims[c]),))
        out: dict = {}
        for key, v in top.items():
            k2 = tuple(self.transport(c, w) for w in key)
            if any(f is None for f in k2):
                continue
            out[k2] = out.get(k2, 0) + v
        return out


# simplicial complexes ------------------------------------------------------------

class SimplicialComplex(CellComplex):
    side = "simplicial"

    def __init__(self, facets):
        simplices = set()
        for f in facets:
            f = tuple(int(v) for v in f)
            if not f:
                continue
            if len(set(f)) != len(f):
                raise ComplexError(f"facet {list(f)} repeats a vertex")
            f = tuple(sorted(f))
            for d in range(len(f)):
                simplices.update(combinations(f, d + 1))
        self._by_dim: dict = {}
        for s in simplices:
            self._by_dim.setdefault(len(s) - 1, []).append(s)
        for v in self._by_dim.values():
            v.sort()
        self._dim = max(self._by_dim, default=-1)

    @classmethod
    def from_json(cls, data: dict) -> "SimplicialComplex":
        try:
            return cls(data["facets"])
        except KeyError:
            raise ComplexError("simplicial complex is missing the 'facets' field") from None

    def cells(self, d: int) -> list:
        return self._by_dim.get(d, [])

    @property
    def dim(self) -> int:
        return self._dim

    def cell_dim(self, c) -> int:
        return len(c) - 1

    def boundary_cell(self, c) -> list:
        if len(c) == 1:
            return []
        return [(-1 if i % 2 else 1, c[:i] + c[i + 1:]) for i in range(len(c))]

    def _pushforward_cell(self, term, c) -> dict:
        return evaluator("simplicial").basis(term, (c,))

    def facets(self) -> list:
        faces = set()
        for s in self.all_cells():
            faces.update(combinations(s, len(s) - 1))
        return [s for s in self.all_cells() if s not in faces]


# triangulation -------------------------------------------------------------------

def staircase(n: int, order) -> tuple:
    """Vertex columns of the staircase simplex of ``[0,1]^n`` raising axes in ``order``.

    ``order`` is a permutation of ``1..n`` in one-line form: axis ``k`` is
    raised at step ``order[k - 1]``.
    """
    return tuple(tuple(1 if order[k] <= j else 0 for k in range(n)) for j in range(n + 1))


class TriangulatedComplex(SimplicialComplex):
    """Staircase triangulation of a lattice complex.

    Vertices are the lattice points, labelled by their rank in lexicographic
    order. Every staircase climbs lexicographically, so the vertex order of
    each product simplex agrees with the global label order.
    """

    def __init__(self, source: LatticeCubicalComplex):
        self.source = source
        pts = sorted(tuple(a for a, _ in c) for c in source.cells(0))
        self.points = pts
        self.label = {p: k for k, p in enumerate(pts)}
        facets = []
        for d in range(source.dim + 1):
            for c in source.cells(d):
                for s in self.cell_simplices(c):
                    facets.append(s)
        super().__init__(facets)

    def point_of(self, c, column) -> int:
        p = list(self.source.lower_corner(c))
        for j, bit in zip(self.source.axes(c), column):
            p[j] += bit
        return self.label[tuple(p)]

    def cell_simplices(self, c) -> list:
        """The ``n!`` top simplices subdividing the ``n``-cell ``c``."""
        n = cube_dim(c)
        out = []
        for order in permutations(range(1, n + 1)):
            cols = staircase(n, order)
            out.append(tuple(self.point_of(c, col) for col in cols))
        return out


def triangulate(X: LatticeCubicalComplex) -> TriangulatedComplex:
    if not isinstance(X, LatticeCubicalComplex):
        raise TypeError("triangulation is defined for lattice cubical complexes")
    return TriangulatedComplex(X)


# loading ------------------------------------------------------------------------

def complex_from_json(data: dict) -> CellComplex:
    if not isinstance(data, dict):
        raise ComplexError("complex description must be a JSON object")
    if "cubes" in data:
        return LatticeCubicalComplex.from_json(data)
    if "cells" in data:
        return PresentedCubicalSet.from_json(data)
    if "facets" in data:
        return SimplicialComplex.from_json(data)
    raise ComplexError("unrecognised complex: expected a 'cubes', 'cells' or 'facets' field")


def load_complex(path) -> CellComplex:
    if not os.path.exists(path):
        raise ComplexError(f"no such file: {path}")
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ComplexError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return complex_from_json(data)


__all__ = [
    "CellComplex", "ComplexError", "LatticeCubicalComplex", "PresentedCubicalSet",
    "SimplicialComplex", "TriangulatedComplex", "complex_from_json", "cube_dim",
    "load_complex", "staircase", "triangulate",
]
