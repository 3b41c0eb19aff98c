"""Integer kernels: hop BFS, dense Dijkstra and the transportation simplex.

Every caller scales its exact rational data to integers first, so the kernels
only see int64 arrays (or object arrays of Python ints when int64 could
overflow; those always go through the uncompiled path).
"""

from __future__ import annotations

import numpy as np

from ._accel import HAVE_NUMBA, jit, python_impl

INT64_SAFE = 2**62


@jit
def bfs_hops(indptr, indices, sources, out):
    """Unit-hop distances from each source; ``out[k, v] = -1`` if unreachable."""
    n = indptr.shape[0] - 1
    queue = np.empty(n, np.int64)
    for k in range(sources.shape[0]):
        for v in range(n):
            out[k, v] = -1
        s = sources[k]
        out[k, s] = 0
        queue[0] = s
        head = 0
        tail = 1
        while head < tail:
            v = queue[head]
            head += 1
            dv = out[k, v] + 1
            for p in range(indptr[v], indptr[v + 1]):
                w = indices[p]
                if out[k, w] < 0:
                    out[k, w] = dv
                    queue[tail] = w
                    tail += 1


def bfs_hops_numpy(indptr, indices, sources, out):
    """Level-synchronous BFS over a dense boolean adjacency; numpy fallback of :func:`bfs_hops`."""
    n = indptr.shape[0] - 1
    adj = np.zeros((n, n), dtype=bool)
    rows = np.repeat(np.arange(n), np.diff(indptr))
    adj[rows, indices] = True
    out[:] = -1
    for k, s in enumerate(sources):
        seen = np.zeros(n, dtype=bool)
        frontier = np.zeros(n, dtype=bool)
        frontier[s] = seen[s] = True
        level = 0
        while frontier.any():
            out[k, frontier] = level
            frontier = adj[frontier].any(axis=0) & ~seen
            seen |= frontier
            level += 1


@jit
def dijkstra_dense(indptr, indices, weights, sources, out):
    """O(V^2) Dijkstra on nonnegative integer weights; ``-1`` marks unreachable."""
    n = indptr.shape[0] - 1
    done = np.zeros(n, np.bool_)
    for k in range(sources.shape[0]):
        for v in range(n):
            out[k, v] = -1
            done[v] = False
        out[k, sources[k]] = 0
        for _ in range(n):
            best = -1
            for v in range(n):
                if not done[v] and out[k, v] >= 0:
                    if best < 0 or out[k, v] < out[k, best]:
                        best = v
            if best < 0:
                break
            done[best] = True
            db = out[k, best]
            for p in range(indptr[best], indptr[best + 1]):
                w = indices[p]
                nd = db + weights[p]
                if not done[w] and (out[k, w] < 0 or nd < out[k, w]):
                    out[k, w] = nd


@jit
def _potentials(cost, basic, u, v, seen_r, seen_c, queue):
    # Spanning-tree duals: u[0] = 0, u[i] + v[j] = cost[i, j] on basic cells.
    m, n = cost.shape
    for i in range(m):
        seen_r[i] = False
    for j in range(n):
        seen_c[j] = False
    u[0] = 0
    seen_r[0] = True
    queue[0] = 0
    head = 0
    tail = 1
    while head < tail:
        node = queue[head]
        head += 1
        if node < m:
            i = node
            for j in range(n):
                if basic[i, j] and not seen_c[j]:
                    v[j] = cost[i, j] - u[i]
                    seen_c[j] = True
                    queue[tail] = m + j
                    tail += 1
        else:
            j = node - m
            for i in range(m):
                if basic[i, j] and not seen_r[i]:
                    u[i] = cost[i, j] - v[j]
                    seen_r[i] = True
                    queue[tail] = i
                    tail += 1
    return tail


@jit
def transport_simplex(cost, supply, demand, flow, basic, u, v, max_iter):
    """Primal transportation simplex with Bland's rule.

    ``flow``/``basic``/``u``/``v`` are caller-allocated outputs.  Start from the
    northwest corner, keep a spanning-tree basis of ``m + n - 1`` cells
    (degenerate zero cells allowed).  Returns the pivot count, ``-1`` if
    ``max_iter`` was hit, ``-2`` if the basis stopped being a spanning tree.
    """
    m, n = cost.shape
    rem_s = supply.copy()
    rem_d = demand.copy()
    for i in range(m):
        for j in range(n):
            flow[i, j] = rem_s[0] - rem_s[0]
            basic[i, j] = False

    i = 0
    j = 0
    for _ in range(m + n - 1):
        q = rem_s[i] if rem_s[i] < rem_d[j] else rem_d[j]
        flow[i, j] = q
        basic[i, j] = True
        rem_s[i] -= q
        rem_d[j] -= q
        if rem_s[i] == 0 and i < m - 1:
            i += 1
        else:
            j += 1

    seen_r = np.zeros(m, np.bool_)
    seen_c = np.zeros(n, np.bool_)
    queue = np.zeros(m + n, np.int64)
    parent = np.zeros(m + n, np.int64)
    path = np.zeros(m + n, np.int64)

    it = 0
    while True:
        if _potentials(cost, basic, u, v, seen_r, seen_c, queue) != m + n:
            return -2
        ei = -1
        ej = -1
        for i in range(m):
            for j in range(n):
                if not basic[i, j] and cost[i, j] - u[i] - v[j] < 0:
                    ei = i
                    ej = j
                    break
            if ei >= 0:
                break
        if ei < 0:
            return it
        if it >= max_iter:
            return -1

        # tree path from row node ei to column node m + ej
        for k in range(m + n):
            parent[k] = -1
        parent[ei] = ei
        queue[0] = ei
        head = 0
        tail = 1
        while head < tail:
            node = queue[head]
            head += 1
            if node < m:
                for j in range(n):
                    if basic[node, j] and parent[m + j] < 0:
                        parent[m + j] = node
                        queue[tail] = m + j
                        tail += 1
            else:
                for i in range(m):
                    if basic[i, node - m] and parent[i] < 0:
                        parent[i] = node
                        queue[tail] = i
                        tail += 1
        plen = 0
        node = m + ej
        while node != ei:
            path[plen] = node
            plen += 1
            node = parent[node]
        path[plen] = ei
        plen += 1

        # cells along the path alternate -, +, -, ... starting at column ej
        leave_i = -1
        leave_j = -1
        theta = flow[0, 0]
        for k in range(plen - 1):
            if k % 2 == 0:
                a = path[k]
                b = path[k + 1]
                if a < m:
                    ci = a
                    cj = b - m
                else:
                    ci = b
                    cj = a - m
                f = flow[ci, cj]
                if (
                    leave_i < 0
                    or f < theta
                    or (f == theta and ci * n + cj < leave_i * n + leave_j)
                ):
                    theta = f
                    leave_i = ci
                    leave_j = cj
        for k in range(plen - 1):
            a = path[k]
            b = path[k + 1]
            if a < m:
                ci = a
                cj = b - m
            else:
                ci = b
                cj = a - m
            if k % 2 == 0:
                flow[ci, cj] -= theta
            else:
                flow[ci, cj] += theta
        flow[ei, ej] += theta
        basic[leave_i, leave_j] = False
        basic[ei, ej] = True
        it += 1


def run_transport(cost, supply, demand, *, use_jit: bool | None = None):
    """Solve an integer transportation problem; returns ``(flow, basic, u, v, pivots)``.

    Inputs are sequences of Python ints.  int64 arrays and the compiled kernel
    are used when every intermediate value provably fits; otherwise object
    arrays go through the Python path.
    """
    m, n = len(supply), len(demand)
    cmax = max((abs(c) for row in cost for c in row), default=0)
    total = sum(supply)
    fits = total < INT64_SAFE and 4 * (m + n + 1) * max(cmax, 1) < INT64_SAFE
    dtype = np.int64 if fits else object
    c = np.array(cost, dtype=dtype).reshape(m, n)
    s = np.array(supply, dtype=dtype)
    d = np.array(demand, dtype=dtype)
    flow = np.zeros((m, n), dtype=dtype)
    basic = np.zeros((m, n), dtype=bool)
    u = np.zeros(m, dtype=dtype)
    v = np.zeros(n, dtype=dtype)
    if use_jit is None:
        use_jit = HAVE_NUMBA
    kernel = transport_simplex if (use_jit and fits) else python_impl(transport_simplex)
    max_iter = 50 * (m * n + m + n) + 1000
    pivots = kernel(c, s, d, flow, basic, u, v, max_iter)
    return flow, basic, u, v, int(pivots)


def _csr_arrays(indptr, indices, sources, dtype=np.int64):
    return (
        np.asarray(indptr, dtype=np.int64),
        np.asarray(indices, dtype=np.int64),
        np.asarray(sources, dtype=np.int64),
    )


def run_bfs(indptr, indices, sources, *, use_jit: bool | None = None) -> np.ndarray:
    ip, ix, src = _csr_arrays(indptr, indices, sources)
    out = np.empty((len(src), len(ip) - 1), dtype=np.int64)
    if use_jit is None:
        use_jit = HAVE_NUMBA
    if use_jit:
        bfs_hops(ip, ix, src, out)
    else:
        bfs_hops_numpy(ip, ix, src, out)
    return out


def run_dijkstra(indptr, indices, weights, sources, *, use_jit: bool | None = None) -> np.ndarray:
    """Integer shortest paths; falls back to Python ints when sums could overflow int64."""
    ip, ix, src = _csr_arrays(indptr, indices, sources)
    total = sum(weights)
    fits = total < INT64_SAFE
    dtype = np.int64 if fits else object
    w = np.array(list(weights), dtype=dtype)
    out = np.empty((len(src), len(ip) - 1), dtype=dtype)
    if use_jit is None:
        use_jit = HAVE_NUMBA
    kernel = dijkstra_dense if (use_jit and fits) else python_impl(dijkstra_dense)
    kernel(ip, ix, w, src, out)
    return out
