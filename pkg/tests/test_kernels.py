import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, strategies as st

from einfty import _kernels as K

needs_numba = pytest.mark.skipif(not K.HAVE_NUMBA, reason="numba unavailable or disabled")

mats = st.tuples(st.integers(1, 12), st.integers(1, 12), st.sampled_from([2, 3, 5, 7]), st.integers(0, 2 ** 32 - 1))


def _random(rows, cols, p, seed):
    return np.random.default_rng(seed).integers(0, p, size=(rows, cols))


def test_rref_example():
    R, piv = K.rref_mod_p([[1, 1, 0], [1, 1, 1]], 2, use_jit=False)
    assert piv.tolist() == [0, 2]
    assert R.tolist() == [[1, 1, 0], [0, 0, 1]]


@given(mats)
def test_rref_properties(data):
    a = _random(*data)
    p = data[2]
    R, piv = K.rref_mod_p(a, p, use_jit=False)
    for i, c in enumerate(piv):
        assert R[i, c] == 1 and (R[:, c] != 0).sum() == 1
    assert not R[len(piv):].any()
    N = K.nullspace_mod_p(a, p, use_jit=False)
    assert len(N) == a.shape[1] - len(piv)
    assert not ((a @ N.T) % p).any()


@needs_numba
@given(mats)
def test_jit_matches_numpy(data):
    a = _random(*data)
    p = data[2]
    R1, p1 = K.rref_mod_p(a, p, use_jit=True)
    R2, p2 = K.rref_mod_p(a, p, use_jit=False)
    assert np.array_equal(R1, R2) and np.array_equal(p1, p2)


def test_rank_against_determinant():
    a = np.array([[1, 2], [3, 4]])
    assert K.rank_mod_p(a, 2) == 1  # det = -2
    assert K.rank_mod_p(a, 3) == 2
    assert K.rank_mod_p(np.zeros((0, 3), dtype=np.int64), 2) == 0


def test_bad_input():
    with pytest.raises(ValueError):
        K.rref_mod_p(np.zeros(3), 2)
    with pytest.raises(ValueError):
        K.rref_mod_p(np.zeros((2, 2)), 2 ** 31 + 11)


def _run(env_extra, code):
    env = dict(os.environ, **env_extra)
    return subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)


def test_env_flag_selects_numpy_path():
    r = _run({"EINFTY_DISABLE_JIT": "1"},
             "from einfty import _kernels as K; from einfty.catalog import rp2; from einfty.homology import homology;"
             "print(K.HAVE_NUMBA, [str(g) for g in homology(rp2(), __import__('einfty').GF2)])")
    assert r.returncode == 0, r.stderr
    assert r.stdout.strip() == "False ['Z/2', 'Z/2', 'Z/2']"


@needs_numba
def test_thread_cap():
    r = _run({"EINFTY_THREADS": "1"},
             "import numba, numpy as np; from einfty import _kernels as K;"
             "K.rref_mod_p(np.eye(3, dtype=np.int64), 2); print(numba.get_num_threads())")
    assert r.returncode == 0, r.stderr
    assert r.stdout.strip() == "1"
    r = _run({"EINFTY_THREADS": "many"},
             "import numpy as np; from einfty import _kernels as K; K.rref_mod_p(np.eye(3, dtype=np.int64), 2)")
    assert r.returncode != 0 and "EINFTY_THREADS" in r.stderr
