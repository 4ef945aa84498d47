"""Exact (co)homology, cup products and Steenrod squares of finite complexes.

Integral work uses Python integers throughout (Smith normal form); work over
``Z/p`` goes through :mod:`einfty._kernels`. Cochains mod 2 are numpy bit
vectors indexed by ``X.cells(d)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._kernels import nullspace_mod_p, rank_mod_p, rref_mod_p
from .algebra import Ring, ZZ
from .comparison import ez_map
from .complexes import CellComplex, LatticeCubicalComplex, TriangulatedComplex, triangulate
from .terms import Counit, Cop, cup_i


class CochainError(ValueError):
    pass


# Smith normal form ---------------------------------------------------------------

def _identity(n: int) -> list:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_normal_form(M):
    """Return ``(U, D, V)`` with ``U M V = D`` diagonal, ``d_1 | d_2 | ...``, ``U``, ``V`` unimodular.

    Entries are Python integers, so no intermediate value can overflow.
    """
    A = [[int(v) for v in row] for row in M]
    m = len(A)
    n = len(A[0]) if m else 0
    U, V = _identity(m), _identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        A[dst] = [a + q * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in A:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = A[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = A[t][t]
            clean = True
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
                    if A[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
                    if A[t][j]:
                        clean = False
            if not clean:
                # a smaller remainder exists in row or column t; make it the pivot
                cands = [(abs(A[i][t]), i, t) for i in range(t + 1, m) if A[i][t]]
                cands += [(abs(A[t][j]), t, j) for j in range(t + 1, n) if A[t][j]]
                _, i, j = min(cands)
                if i != t:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
        t += 1
    return U, A, V


def snf_diagonal(M) -> list:
    """Nonzero invariant factors of ``M``."""
    _, D, _ = smith_normal_form(M)
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0)) if D[i][i]]


def matmul(A, B) -> list:
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


# homology ------------------------------------------------------------------------

@dataclass(frozen=True)
class HomologyGroup:
    degree: int
    betti: int
    torsion: tuple = ()
    ring: Ring = ZZ

    def __str__(self):
        if self.ring.p is not None:
            return "0" if not self.betti else (f"Z/{self.ring.p}" + (f"^{self.betti}" if self.betti > 1 else ""))
        parts = []
        if self.betti:
            parts.append("Z" + (f"^{self.betti}" if self.betti > 1 else ""))
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


def _boundary_array(X: CellComplex, d: int) -> np.ndarray:
    rows = len(X.cells(d - 1)) if d >= 1 else 0
    cols = len(X.cells(d))
    out = np.zeros((rows, cols), dtype=np.int64)
    if d >= 1:
        idx = X.index(d - 1)
        for j, c in enumerate(X.cells(d)):
            for s, f in X.boundary_cell(c):
                out[idx[f], j] += s
    return out


def homology(X: CellComplex, ring: Ring = ZZ) -> list:
    """``H_d(X; ring)`` for ``d = 0..dim X``."""
    top = X.dim
    if ring.p is None:
        diag = {d: snf_diagonal(X.boundary_matrix(d)) if d >= 1 else [] for d in range(top + 2)}
        ranks = {d: len(v) for d, v in diag.items()}
        return [HomologyGroup(d, len(X.cells(d)) - ranks[d] - ranks[d + 1],
                              tuple(t for t in diag[d + 1] if t > 1), ring)
                for d in range(top + 1)]
    ranks = {d: rank_mod_p(_boundary_array(X, d), ring.p) if d >= 1 and X.cells(d) and X.cells(d - 1) else 0
             for d in range(top + 2)}
    return [HomologyGroup(d, len(X.cells(d)) - ranks[d] - ranks[d + 1], (), ring) for d in range(top + 1)]


def _cone_complex(X: CellComplex, T: TriangulatedComplex, f) -> list:
    """Boundary matrices of the mapping cone of a chain map ``f: C(X) -> C(T)``."""
    mats = []
    top = max(X.dim + 1, T.dim)
    for d in range(1, top + 1):
        # cone_d = X_{d-1} + T_d, d(a, b) = (-da, f(a) + db)
        src = [("x", c) for c in X.cells(d - 1)] + [("t", s) for s in T.cells(d)]
        dst = [("x", c) for c in X.cells(d - 2)] + [("t", s) for s in T.cells(d - 1)] if d >= 1 else []
        pos = {k: i for i, k in enumerate(dst)}
        M = [[0] * len(src) for _ in dst]
        for j, (kind, c) in enumerate(src):
            if kind == "x":
                if d - 1 >= 1:
                    for s, g in X.boundary_cell(c):
                        M[pos[("x", g)]][j] -= s
                for g, v in f(c).raw().items():
                    M[pos[("t", g)]][j] += v
            else:
                if d >= 1:
                    for s, g in T.boundary_cell(c):
                        M[pos[("t", g)]][j] += s
        mats.append((len(dst), len(src), M))
    return mats


def ez_is_quasi_isomorphism(X: LatticeCubicalComplex, T: TriangulatedComplex | None = None) -> bool:
    """True when EZ induces an isomorphism on integral homology (its mapping cone is acyclic)."""
    T = T if T is not None else triangulate(X)
    mats = _cone_complex(X, T, lambda c: ez_map(X, c, T))
    dims = [mats[0][0]] + [m[1] for m in mats]  # cone_0, cone_1, ...
    ranks = [0] + [len(snf_diagonal(M)) if M and M[0] else 0 for _, _, M in mats] + [0]
    for d, size in enumerate(dims):
        if size - ranks[d] - ranks[d + 1] != 0:
            return False
    for _, _, M in mats:
        if M and M[0] and any(t > 1 for t in snf_diagonal(M)):
            return False
    return True


# mod 2 cochains and cohomology ---------------------------------------------------

@dataclass
class Cochain:
    """A mod 2 cochain of degree ``degree`` on ``X``, as a bit vector over ``X.cells(degree)``."""

    X: CellComplex = field(repr=False)
    degree: int
    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=np.int64) % 2
        if self.values.shape != (len(self.X.cells(self.degree)),):
            raise CochainError(f"degree {self.degree} cochain needs {len(self.X.cells(self.degree))} values")

    @classmethod
    def zero(cls, X, degree):
        return cls(X, degree, np.zeros(len(X.cells(degree)), dtype=np.int64))

    @classmethod
    def from_cells(cls, X, degree, cells):
        v = np.zeros(len(X.cells(degree)), dtype=np.int64)
        idx = X.index(degree)
        for c in cells:
            v[idx[c]] ^= 1
        return cls(X, degree, v)

    def __call__(self, cell) -> int:
        return int(self.values[self.X.index(self.degree)[cell]])

    def __add__(self, other):
        if other.degree != self.degree or other.X is not self.X:
            raise CochainError("cannot add cochains of different degree or complex")
        return Cochain(self.X, self.degree, (self.values + other.values) % 2)

    def __eq__(self, other):
        return (isinstance(other, Cochain) and other.X is self.X and other.degree == self.degree
                and bool((self.values == other.values).all()))

    def support(self) -> list:
        cells = self.X.cells(self.degree)
        return [cells[i] for i in np.nonzero(self.values)[0]]

    def coboundary(self) -> "Cochain":
        return Cochain(self.X, self.degree + 1, coboundary_matrix(self.X, self.degree) @ self.values % 2)

    def is_cocycle(self) -> bool:
        return not self.coboundary().values.any()


def coboundary_matrix(X: CellComplex, d: int) -> np.ndarray:
    """Integral ``delta^d : C^d -> C^{d+1}``, ``(delta a)(c) = a(dc)``."""
    return _boundary_array(X, d + 1).T


class CohomologyMod2:
    """``H^*(X; Z/2)`` with deterministic echelon representatives.

    Cocycles are spanned by the nullspace basis of ``delta`` (one vector per
    free cell, in cell order); a cocycle becomes a basis representative when
    it is independent of the coboundaries and of earlier representatives.
    """

    def __init__(self, X: CellComplex):
        self.X = X
        self._basis: dict = {}
        self._bounds: dict = {}

    def coboundaries(self, d: int) -> np.ndarray:
        if d not in self._bounds:
            n = len(self.X.cells(d))
            if d == 0 or not self.X.cells(d - 1):
                B = np.zeros((0, n), dtype=np.int64)
            else:
                R, piv = rref_mod_p(coboundary_matrix(self.X, d - 1).T % 2, 2)
                B = R[:len(piv)]
            self._bounds[d] = B
        return self._bounds[d]

    def basis(self, d: int) -> list:
        if d not in self._basis:
            n = len(self.X.cells(d))
            if n == 0:
                self._basis[d] = []
                return []
            delta = coboundary_matrix(self.X, d) % 2
            Z = nullspace_mod_p(delta, 2) if delta.shape[0] else np.eye(n, dtype=np.int64)
            span = self.coboundaries(d)
            rank = len(span)
            reps = []
            for z in Z:
                trial = np.vstack([span, z[None, :]])
                if rank_mod_p(trial, 2) > rank:
                    span, rank = trial, rank + 1
                    reps.append(Cochain(self.X, d, z))
            self._basis[d] = reps
        return self._basis[d]

    def dimension(self, d: int) -> int:
        return len(self.basis(d))

    def express(self, a: Cochain) -> tuple:
        """Coordinates of the class of the cocycle ``a`` in :meth:`basis`."""
        if not a.is_cocycle():
            raise CochainError(f"degree {a.degree} cochain is not a cocycle")
        d = a.degree
        reps = self.basis(d)
        B = self.coboundaries(d)
        cols = [r.values for r in reps] + list(B)
        if not cols:
            return ()
        A = np.array(cols, dtype=np.int64).T
        aug = np.hstack([A, a.values[:, None]])
        R, piv = rref_mod_p(aug, 2)
        if len(piv) and piv[-1] == A.shape[1]:
            raise CochainError("cocycle is not in the span of the basis and coboundaries")
        sol = np.zeros(A.shape[1], dtype=np.int64)
        for i, c in enumerate(piv):
            sol[c] = R[i, -1]
        return tuple(int(v) for v in sol[:len(reps)])

    def class_of(self, coords, d: int) -> Cochain:
        out = Cochain.zero(self.X, d)
        for bit, rep in zip(coords, self.basis(d)):
            if bit % 2:
                out = out + rep
        return out


def _pair(X: CellComplex, term, p: int, alpha: Cochain, q: int, beta: Cochain) -> Cochain:
    """``c -> (alpha (x) beta)(term(c))`` on cells of degree ``p + q - deg(term)``."""
    d = p + q - term.degree
    out = np.zeros(len(X.cells(d)), dtype=np.int64)
    ia, ib = X.index(p), X.index(q)
    for k, c in enumerate(X.cells(d)):
        acc = 0
        for (a, b), v in X.pushforward_cell(term, c).raw().items():
            if v % 2 and X.cell_dim(a) == p and X.cell_dim(b) == q:
                acc += alpha.values[ia[a]] * beta.values[ib[b]]
        out[k] = acc % 2
    return Cochain(X, d, out)


def cup_product(alpha: Cochain, beta: Cochain) -> Cochain:
    """``(alpha cup beta)(c) = (alpha (x) beta) Delta(c)`` mod 2."""
    if alpha.X is not beta.X:
        raise CochainError("cup product of cochains on different complexes")
    return _pair(alpha.X, Cop(), alpha.degree, alpha, beta.degree, beta)


def unit_class(X: CellComplex) -> Cochain:
    """The cochain dual to the counit: 1 on every vertex."""
    return Cochain(X, 0, np.ones(len(X.cells(0)), dtype=np.int64))


def steenrod_sq(k: int, alpha: Cochain) -> Cochain:
    """``Sq^k [alpha] = [(alpha (x) alpha) Delta_{n-k}]`` for ``alpha`` of degree ``n``."""
    if k < 0:
        raise ValueError(f"Sq^k needs k >= 0, got {k}")
    if not alpha.is_cocycle():
        raise CochainError(f"Sq^{k} needs a cocycle representative")
    n = alpha.degree
    X = alpha.X
    if k > n or n + k > X.dim:
        return Cochain.zero(X, n + k) if n + k <= X.dim else _empty(X, n + k)
    return _pair(X, cup_i(n - k), n, alpha, n, alpha)


def _empty(X, d):
    out = Cochain.__new__(Cochain)
    out.X, out.degree, out.values = X, d, np.zeros(0, dtype=np.int64)
    return out


def bockstein_oracle(alpha: Cochain) -> Cochain:
    """Classical Bockstein: lift to Z, take the coboundary, halve, reduce mod 2."""
    if not alpha.is_cocycle():
        raise CochainError("Bockstein needs a cocycle representative")
    X = alpha.X
    n = alpha.degree
    if n + 1 > X.dim:
        return _empty(X, n + 1)
    lifted = coboundary_matrix(X, n) @ alpha.values
    if (lifted % 2).any():
        raise CochainError("integral coboundary of a mod 2 cocycle must be even")
    return Cochain(X, n + 1, (lifted // 2) % 2)


def operation_matrix(H: CohomologyMod2, op, d: int, target: int) -> list:
    """Matrix of a map ``H^d -> H^target``; column ``j`` is the image of basis class ``j``."""
    cols = []
    for rep in H.basis(d):
        img = op(rep)
        if target > H.X.dim or not H.X.cells(target):
            cols.append(())
        else:
            cols.append(H.express(img))
    rows = H.dimension(target) if target <= H.X.dim else 0
    return [[cols[j][i] for j in range(len(cols))] for i in range(rows)]


def steenrod_report(X: CellComplex, k: int) -> list:
    """Per-degree report: mod 2 dimension, integral torsion and the matrix of ``Sq^k``."""
    H = CohomologyMod2(X)
    integral = homology(X)
    out = []
    for d in range(X.dim + 1):
        out.append({
            "degree": d,
            "betti": H.dimension(d),
            "torsion": list(integral[d].torsion),
            "sq": {"k": k, "matrix": operation_matrix(H, lambda a: steenrod_sq(k, a), d, d + k)},
        })
    return out


# comparison along EZ ----------------------------------------------------------

def ez_pullback(X: LatticeCubicalComplex, T: TriangulatedComplex, beta: Cochain) -> Cochain:
    """``(EZ^* beta)(c) = beta(EZ c)`` mod 2."""
    d = beta.degree
    out = np.zeros(len(X.cells(d)), dtype=np.int64)
    idx = T.index(d)
    for k, c in enumerate(X.cells(d)):
        out[k] = sum(v * beta.values[idx[s]] for s, v in ez_map(X, c, T).raw().items()) % 2
    return Cochain(X, d, out)


def sq_agrees_under_ez(X: LatticeCubicalComplex, k: int, T: TriangulatedComplex | None = None) -> bool:
    """``EZ^* Sq^k = Sq^k EZ^*`` on every basis class of ``H^*(T X; Z/2)``."""
    T = T if T is not None else triangulate(X)
    HX = CohomologyMod2(X)
    HT = CohomologyMod2(T)
    for d in range(T.dim + 1):
        if d + k > X.dim:
            continue
        for beta in HT.basis(d):
            lhs = ez_pullback(X, T, steenrod_sq(k, beta))
            rhs = steenrod_sq(k, ez_pullback(X, T, beta))
            if HX.express(lhs) != HX.express(rhs):
                return False
    return True


__all__ = [
    "Cochain", "CochainError", "CohomologyMod2", "HomologyGroup", "bockstein_oracle",
    "coboundary_matrix", "cup_product", "ez_is_quasi_isomorphism", "ez_pullback", "homology",
    "matmul", "operation_matrix", "smith_normal_form", "snf_diagonal", "sq_agrees_under_ez",
    "steenrod_report", "steenrod_sq", "unit_class",
]
