"""Pure-Python graph kernels.

Graphs are passed in CSR form over dense vertex indices ``0..n-1``:
``indptr`` has length ``n + 1`` and ``indices[indptr[v]:indptr[v + 1]]``
lists the neighbours of ``v`` in increasing order.  The compiled module
``_kernels`` implements the same three functions with the same results.
"""
from collections import deque

import numpy as np


def bfs_distances(indptr, indices, sources):
    n = len(indptr) - 1
    dist = np.full(n, -1, dtype=np.int64)
    queue = deque()
    for s in sources:
        if dist[s] < 0:
            dist[s] = 0
            queue.append(int(s))
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for j in range(indptr[u], indptr[u + 1]):
            w = indices[j]
            if dist[w] < 0:
                dist[w] = du
                queue.append(int(w))
    return dist


def component_labels(indptr, indices):
    n = len(indptr) - 1
    parent = list(range(n))

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for u in range(n):
        for j in range(indptr[u], indptr[u + 1]):
            ru, rw = find(u), find(int(indices[j]))
            if ru != rw:
                # smaller index wins so roots are component minima
                if ru < rw:
                    parent[rw] = ru
                else:
                    parent[ru] = rw
    labels = np.empty(n, dtype=np.int64)
    relabel = {}
    for u in range(n):
        r = find(u)
        labels[u] = relabel.setdefault(r, len(relabel))
    return labels


def induced_cycles(indptr, indices, lmax):
    """Chordless cycles with 4 <= length <= lmax.

    Each cycle is reported once as a tuple starting at its smallest vertex
    and oriented so that the second entry is smaller than the last.
    """
    n = len(indptr) - 1
    nbr_list = [[int(w) for w in indices[indptr[v]:indptr[v + 1]]] for v in range(n)]
    nbr_set = [set(ws) for ws in nbr_list]
    out = []
    onpath = [False] * n

    def extend(path, s):
        last = path[-1]
        m = len(path) - 1
        for w in nbr_list[last]:
            if w <= s or onpath[w]:
                continue
            if any(w in nbr_set[path[j]] for j in range(1, m)):
                continue
            if w in nbr_set[s]:
                if m >= 2 and path[1] < w:
                    out.append(tuple(path) + (w,))
                continue
            if m + 2 < lmax:
                onpath[w] = True
                path.append(w)
                extend(path, s)
                path.pop()
                onpath[w] = False

    for s in range(n):
        onpath[s] = True
        for p1 in nbr_list[s]:
            if p1 <= s:
                continue
            onpath[p1] = True
            extend([s, p1], s)
            onpath[p1] = False
        onpath[s] = False
    return out
