"""Pure-Python hot kernels. Mirror of the compiled versions, op for op.

Every function here must produce bit-identical output to its compiled twin
in ``_ckernels``: identical traversal order, identical floating-point
expression order. Keep the two files in sync.
"""

from __future__ import annotations

import numpy as np


def bfs_distances(indptr, indices, n: int, source: int) -> np.ndarray:
    """Hop distances from ``source``; unreachable nodes get -1."""
    ip = indptr.tolist()
    ix = indices.tolist()
    dist = [-1] * n
    queue = [0] * n
    dist[source] = 0
    queue[0] = source
    head, tail = 0, 1
    while head < tail:
        v = queue[head]
        head += 1
        dnext = dist[v] + 1
        for j in range(ip[v], ip[v + 1]):
            w = ix[j]
            if dist[w] < 0:
                dist[w] = dnext
                queue[tail] = w
                tail += 1
    return np.asarray(dist, dtype=np.int32)


def apsp_aggregate(indptr, indices, n: int, sources) -> tuple[int, int, int]:
    """Sum, count, and max of finite positive hop distances from ``sources``.

    Ordered-pair semantics: the source itself (distance 0) is excluded.
    """
    ip = indptr.tolist()
    ix = indices.tolist()
    dist = [-1] * n
    queue = [0] * n
    total = 0
    finite = 0
    maxd = 0
    for s in sources.tolist():
        dist[s] = 0
        queue[0] = s
        head, tail = 0, 1
        while head < tail:
            v = queue[head]
            head += 1
            dnext = dist[v] + 1
            for j in range(ip[v], ip[v + 1]):
                w = ix[j]
                if dist[w] < 0:
                    dist[w] = dnext
                    queue[tail] = w
                    tail += 1
                    total += dnext
                    finite += 1
        last = dist[queue[tail - 1]]
        if last > maxd:
            maxd = last
        for i in range(tail):
            dist[queue[i]] = -1
    return total, finite, maxd


def brandes_accumulate(indptr, indices, n: int, sources) -> np.ndarray:
    """Raw Brandes dependency accumulation over the given sources.

    Returns the ordered-pair betweenness contribution; the caller halves it
    for undirected graphs.
    """
    ip = indptr.tolist()
    ix = indices.tolist()
    bc = np.zeros(n, dtype=np.float64)
    dist = [-1] * n
    sigma = [0.0] * n
    delta = [0.0] * n
    order = [0] * n
    for s in sources.tolist():
        dist[s] = 0
        sigma[s] = 1.0
        order[0] = s
        head, tail = 0, 1
        while head < tail:
            v = order[head]
            head += 1
            dnext = dist[v] + 1
            sv = sigma[v]
            for j in range(ip[v], ip[v + 1]):
                w = ix[j]
                if dist[w] < 0:
                    dist[w] = dnext
                    order[tail] = w
                    tail += 1
                if dist[w] == dnext:
                    sigma[w] += sv
        for idx in range(tail - 1, 0, -1):
            w = order[idx]
            coeff = (1.0 + delta[w]) / sigma[w]
            dprev = dist[w] - 1
            for j in range(ip[w], ip[w + 1]):
                v = ix[j]
                if dist[v] == dprev:
                    delta[v] += sigma[v] * coeff
            bc[w] += delta[w]
        for i in range(tail):
            v = order[i]
            dist[v] = -1
            sigma[v] = 0.0
            delta[v] = 0.0
    return bc


def local_clustering(union_indptr, union_indices, count_indptr, count_indices, n: int) -> np.ndarray:
    """Per-node clustering: links among the neighborhood over ordered pairs.

    ``union_*`` defines each node's neighborhood; ``count_*`` is the adjacency
    used to count links inside it. With both set to a symmetric adjacency this
    is the undirected coefficient; with ``count_*`` = out-adjacency of a
    directed graph it counts arcs among the union neighborhood.

    Nodes with fewer than two neighbors score 0.
    """
    uip = union_indptr.tolist()
    uix = union_indices.tolist()
    cip = count_indptr.tolist()
    cix = count_indices.tolist()
    cc = np.zeros(n, dtype=np.float64)
    flag = [False] * n
    for v in range(n):
        start, end = uip[v], uip[v + 1]
        k = end - start
        if k < 2:
            continue
        for j in range(start, end):
            flag[uix[j]] = True
        links = 0
        for j in range(start, end):
            u = uix[j]
            for jj in range(cip[u], cip[u + 1]):
                if flag[cix[jj]]:
                    links += 1
        for j in range(start, end):
            flag[uix[j]] = False
        cc[v] = links / (k * (k - 1))
    return cc


def frontier_degree_sum(indptr, indices, n: int, sources, radius: int) -> np.ndarray:
    """For each source, sum of (degree - 1) over nodes at hop distance exactly ``radius``."""
    ip = indptr.tolist()
    ix = indices.tolist()
    out = np.zeros(len(sources), dtype=np.int64)
    dist = [-1] * n
    queue = [0] * n
    for pos, s in enumerate(sources.tolist()):
        dist[s] = 0
        queue[0] = s
        head, tail = 0, 1
        acc = 0
        while head < tail:
            v = queue[head]
            head += 1
            dnext = dist[v] + 1
            if dnext > radius:
                break
            for j in range(ip[v], ip[v + 1]):
                w = ix[j]
                if dist[w] < 0:
                    dist[w] = dnext
                    queue[tail] = w
                    tail += 1
                    if dnext == radius:
                        acc += ip[w + 1] - ip[w] - 1
        out[pos] = acc
        for i in range(tail):
            dist[queue[i]] = -1
    return out
