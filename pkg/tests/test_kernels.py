import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import connected_graphs
from orcurv import kernels
from orcurv._accel import JIT_DISABLED
from orcurv.complex import all_pairs_distances


@pytest.mark.skipif(JIT_DISABLED, reason="ORCURV_DISABLE_JIT is set")
def test_numba_active_by_default():
    assert kernels.HAVE_NUMBA
    assert hasattr(kernels.transport_simplex, "py_func")


@given(connected_graphs(max_n=12))
def test_bfs_paths_agree(c):
    indptr, indices = c._csr
    src = np.arange(c.n_vertices)
    jit = kernels.run_bfs(indptr, indices, src, use_jit=True)
    ref = kernels.run_bfs(indptr, indices, src, use_jit=False)
    assert (jit == ref).all()


def test_bfs_unreachable_marker():
    from orcurv import build_complex

    c = build_complex(3, [(0, 1)])
    indptr, indices = c._csr
    for flag in (True, False):
        assert kernels.run_bfs(indptr, indices, [0], use_jit=flag).tolist() == [[0, 1, -1]]


@given(connected_graphs(max_n=8, lengths=True))
def test_dijkstra_paths_agree(c):
    a = all_pairs_distances(c)
    from orcurv.complex import shortest_distances

    assert shortest_distances(c, range(c.n_vertices), range(c.n_vertices), use_jit=False) == a


def test_dijkstra_object_fallback():
    indptr, indices = np.array([0, 1, 3, 4]), np.array([1, 0, 2, 1])
    w = [2**62, 2**62, 2**62, 2**62]
    out = kernels.run_dijkstra(indptr, indices, w, [0])
    assert out.dtype == object
    assert out.tolist() == [[0, 2**62, 2**63]]


@given(st.integers(1, 6), st.integers(1, 6), st.randoms(use_true_random=False))
def test_transport_kernels_agree(m, n, rng):
    q = 30
    def split(k):
        cuts = sorted(rng.randint(0, q) for _ in range(k - 1))
        return [b - a for a, b in zip([0] + cuts, cuts + [q])]
    cost = [[rng.randint(0, 9) for _ in range(n)] for _ in range(m)]
    s, d = split(m), split(n)
    a = kernels.run_transport(cost, s, d, use_jit=True)
    b = kernels.run_transport(cost, s, d, use_jit=False)
    for x, y in zip(a[:4], b[:4]):
        assert (x == y).all()
    assert a[4] == b[4] >= 0
    assert a[1].sum() == m + n - 1


def test_env_flag_disables_jit():
    code = "import orcurv._accel as k; print(k.JIT_DISABLED, k.HAVE_NUMBA)"
    env = dict(os.environ, ORCURV_DISABLE_JIT="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["True", "False"]


def test_disabled_build_gives_same_curvature():
    code = (
        "from orcurv import platonic, ollivier_ricci;"
        "c = platonic('icosahedron'); print(ollivier_ricci(c, *c.edges[0]).value)"
    )
    env = dict(os.environ, ORCURV_DISABLE_JIT="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "2/5"
