# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled graph kernels; same contracts as ``_kernels_py``."""
import numpy as np
cimport numpy as cnp

cnp.import_array()

ctypedef cnp.int64_t i64


def bfs_distances(indptr, indices, sources):
    cdef const i64[:] ip = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef const i64[:] ix = np.ascontiguousarray(indices, dtype=np.int64)
    cdef Py_ssize_t n = ip.shape[0] - 1
    dist_arr = np.full(n, -1, dtype=np.int64)
    cdef i64[:] dist = dist_arr
    cdef i64[:] queue = np.empty(max(n, 1), dtype=np.int64)
    cdef Py_ssize_t head = 0, tail = 0, j
    cdef i64 u, w, s
    for s in sources:
        if dist[s] < 0:
            dist[s] = 0
            queue[tail] = s
            tail += 1
    while head < tail:
        u = queue[head]
        head += 1
        for j in range(ip[u], ip[u + 1]):
            w = ix[j]
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue[tail] = w
                tail += 1
    return dist_arr


cdef inline i64 _find(i64[:] parent, i64 x) noexcept nogil:
    cdef i64 root = x, nxt
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        nxt = parent[x]
        parent[x] = root
        x = nxt
    return root


def component_labels(indptr, indices):
    cdef const i64[:] ip = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef const i64[:] ix = np.ascontiguousarray(indices, dtype=np.int64)
    cdef Py_ssize_t n = ip.shape[0] - 1
    cdef i64[:] parent = np.arange(n, dtype=np.int64)
    cdef Py_ssize_t u, j
    cdef i64 ru, rw
    for u in range(n):
        for j in range(ip[u], ip[u + 1]):
            ru = _find(parent, u)
            rw = _find(parent, ix[j])
            if ru < rw:
                parent[rw] = ru
            elif rw < ru:
                parent[ru] = rw
    labels_arr = np.empty(n, dtype=np.int64)
    cdef i64[:] labels = labels_arr
    cdef i64[:] relabel = np.full(max(n, 1), -1, dtype=np.int64)
    cdef i64 count = 0, r
    for u in range(n):
        r = _find(parent, u)
        if relabel[r] < 0:
            relabel[r] = count
            count += 1
        labels[u] = relabel[r]
    return labels_arr


def induced_cycles(indptr, indices, int lmax):
    cdef const i64[:] ip = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef const i64[:] ix = np.ascontiguousarray(indices, dtype=np.int64)
    cdef Py_ssize_t n = ip.shape[0] - 1
    cdef cnp.uint8_t[:, :] adj = np.zeros((max(n, 1), max(n, 1)), dtype=np.uint8)
    cdef Py_ssize_t u, j, depth, s
    for u in range(n):
        for j in range(ip[u], ip[u + 1]):
            adj[u, ix[j]] = 1
    cdef i64[:] path = np.empty(lmax + 2, dtype=np.int64)
    cdef i64[:] ptr = np.empty(lmax + 2, dtype=np.int64)
    cdef cnp.uint8_t[:] onpath = np.zeros(max(n, 1), dtype=np.uint8)
    cdef i64 last, w
    cdef bint ok
    out = []
    for s in range(n):
        path[0] = s
        ptr[0] = ip[s]
        onpath[s] = 1
        depth = 0
        while depth >= 0:
            last = path[depth]
            if ptr[depth] >= ip[last + 1]:
                onpath[last] = 0
                depth -= 1
                continue
            w = ix[ptr[depth]]
            ptr[depth] += 1
            if w <= s or onpath[w]:
                continue
            if depth == 0:
                depth = 1
                path[1] = w
                ptr[1] = ip[w]
                onpath[w] = 1
                continue
            ok = True
            for j in range(1, depth):
                if adj[path[j], w]:
                    ok = False
                    break
            if not ok:
                continue
            if adj[s, w]:
                if depth >= 2 and path[1] < w:
                    out.append(tuple([path[j] for j in range(depth + 1)]) + (w,))
                continue
            if depth + 2 < lmax:
                depth += 1
                path[depth] = w
                ptr[depth] = ip[w]
                onpath[w] = 1
    return out
