# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled congruence-closure kernel. Same contract as ``_closure_py.closure``."""
import numpy as np


cdef inline int _find(int[::1] parent, int x) noexcept nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def closure(const int[:, ::1] action, const int[:, ::1] mul, int identity,
            const int[:, ::1] pairs, const int[::1] gens):
    cdef Py_ssize_t n = action.shape[0]
    cdef Py_ssize_t npairs = pairs.shape[0]
    cdef Py_ssize_t ng = gens.shape[0]
    cdef Py_ssize_t cap = npairs + (n if n > 0 else 1) * ng + 1
    queue_arr = np.empty((cap, 4), dtype=np.int32)
    parent_arr = np.arange(n, dtype=np.int32)
    size_arr = np.ones(n, dtype=np.int32)
    edges_arr = np.empty((n if n > 0 else 1, 4), dtype=np.int32)
    cdef int[:, ::1] q = queue_arr
    cdef int[::1] parent = parent_arr
    cdef int[::1] size = size_arr
    cdef int[:, ::1] edges = edges_arr
    cdef Py_ssize_t head = 0, tail = 0, ne = 0, k, gi
    cdef int x, y, pk, t, rx, ry, g
    with nogil:
        for k in range(npairs):
            q[tail, 0] = pairs[k, 0]
            q[tail, 1] = pairs[k, 1]
            q[tail, 2] = <int>k
            q[tail, 3] = identity
            tail += 1
        while head < tail:
            x = q[head, 0]
            y = q[head, 1]
            pk = q[head, 2]
            t = q[head, 3]
            head += 1
            rx = _find(parent, x)
            ry = _find(parent, y)
            if rx == ry:
                continue
            if size[rx] < size[ry]:
                rx, ry = ry, rx
            parent[ry] = rx
            size[rx] += size[ry]
            edges[ne, 0] = x
            edges[ne, 1] = y
            edges[ne, 2] = pk
            edges[ne, 3] = t
            ne += 1
            for gi in range(ng):
                g = gens[gi]
                q[tail, 0] = action[x, g]
                q[tail, 1] = action[y, g]
                q[tail, 2] = pk
                q[tail, 3] = mul[t, g]
                tail += 1
    labels_arr = np.empty(n, dtype=np.int32)
    least_arr = np.full(n, -1, dtype=np.int32)
    cdef int[::1] labels = labels_arr
    cdef int[::1] least = least_arr
    cdef int r
    with nogil:
        for k in range(n):
            r = _find(parent, <int>k)
            if least[r] < 0:
                least[r] = <int>k
            labels[k] = least[r]
    return labels_arr, edges_arr[:ne].copy()
