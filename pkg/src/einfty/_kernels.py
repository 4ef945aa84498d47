"""Row reduction over ``Z/p``: a numba kernel and a pure numpy fallback.

``EINFTY_DISABLE_JIT=1`` selects the numpy path. ``EINFTY_THREADS`` caps the
number of numba threads used by the parallel elimination step.
"""
from __future__ import annotations

import os

import numpy as np

JIT_DISABLED = os.environ.get("EINFTY_DISABLE_JIT", "").strip().lower() in ("1", "true", "yes")

try:
    if JIT_DISABLED:
        raise ImportError
    import numba
    from numba import njit, prange

    HAVE_NUMBA = True
    if "NUMBA_THREADING_LAYER" not in os.environ:
        # the system TBB may be too old for numba; workqueue always loads
        numba.config.THREADING_LAYER = "workqueue"
except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False


def _apply_thread_cap():
    cap = os.environ.get("EINFTY_THREADS")
    if HAVE_NUMBA and cap:
        try:
            numba.set_num_threads(max(1, min(int(cap), numba.config.NUMBA_NUM_THREADS)))
        except ValueError:
            raise ValueError(f"EINFTY_THREADS must be a positive integer, got {cap!r}") from None


def _rref_numpy(a: np.ndarray, p: int):
    a = a.copy() % p
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            a[[r, k]] = a[[k, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        f = a[:, c].copy()
        f[r] = 0
        a -= np.outer(f, a[r])
        a %= p
        pivots.append(c)
        r += 1
    return a, np.array(pivots, dtype=np.int64)


if HAVE_NUMBA:
    @njit(cache=True)
    def _inv_mod(x, p):
        # x^(p-2) mod p by square and multiply
        result = 1
        base = x % p
        e = p - 2
        while e > 0:
            if e & 1:
                result = (result * base) % p
            base = (base * base) % p
            e >>= 1
        return result

    @njit(parallel=True, cache=True)
    def _eliminate(a, r, c, p):
        rows, cols = a.shape
        for i in prange(rows):
            if i != r:
                f = a[i, c]
                if f != 0:
                    for j in range(cols):
                        a[i, j] = (a[i, j] - f * a[r, j]) % p

    @njit(cache=True)
    def _rref_jit(a, p):
        rows, cols = a.shape
        pivots = np.empty(min(rows, cols), dtype=np.int64)
        npiv = 0
        r = 0
        for c in range(cols):
            if r == rows:
                break
            k = -1
            for i in range(r, rows):
                if a[i, c] != 0:
                    k = i
                    break
            if k < 0:
                continue
            if k != r:
                for j in range(cols):
                    t = a[r, j]
                    a[r, j] = a[k, j]
                    a[k, j] = t
            inv = _inv_mod(a[r, c], p)
            for j in range(cols):
                a[r, j] = (a[r, j] * inv) % p
            _eliminate(a, r, c, p)
            pivots[npiv] = c
            npiv += 1
            r += 1
        return pivots[:npiv]


def rref_mod_p(a, p: int, use_jit: bool | None = None):
    """Reduced row echelon form of ``a`` over ``Z/p``; returns ``(R, pivot_columns)``.

    ``p`` must be prime and below ``2**31`` so products fit in int64.
    """
    a = np.asarray(a, dtype=np.int64)
    if a.ndim != 2:
        raise ValueError("rref_mod_p needs a 2-d array")
    if not 2 <= p < 2 ** 31:
        raise ValueError(f"modulus {p} out of range for int64 elimination")
    if use_jit is None:
        use_jit = HAVE_NUMBA
    if use_jit and not HAVE_NUMBA:
        raise RuntimeError("numba kernel requested but numba is unavailable or disabled")
    if a.size == 0:
        return a.copy() % p, np.zeros(0, dtype=np.int64)
    if use_jit:
        _apply_thread_cap()
        out = np.ascontiguousarray(a % p)
        piv = _rref_jit(out, p)
        return out, piv
    return _rref_numpy(a, p)


def rank_mod_p(a, p: int, use_jit: bool | None = None) -> int:
    return int(len(rref_mod_p(a, p, use_jit)[1]))


def nullspace_mod_p(a, p: int, use_jit: bool | None = None) -> np.ndarray:
    """Basis of ``{x : a x = 0}`` as rows, one per free column in increasing order."""
    a = np.asarray(a, dtype=np.int64)
    cols = a.shape[1]
    if a.shape[0] == 0:
        return np.eye(cols, dtype=np.int64)
    r, piv = rref_mod_p(a, p, use_jit)
    pivset = set(int(c) for c in piv)
    free = [c for c in range(cols) if c not in pivset]
    out = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        out[k, f] = 1
        for i, c in enumerate(piv):
            out[k, c] = (-r[i, f]) % p
    return out


__all__ = ["HAVE_NUMBA", "JIT_DISABLED", "nullspace_mod_p", "rank_mod_p", "rref_mod_p"]
