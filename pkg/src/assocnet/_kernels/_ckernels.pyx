# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: bit-identical twin of ``_pykernels``.

Traversal order and floating-point expression order must match the pure
versions exactly; change both files together or the backend-parity tests
will fail.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def bfs_distances(const cnp.int64_t[::1] indptr, const cnp.int32_t[::1] indices,
                  int n, int source):
    dist_arr = np.full(n, -1, dtype=np.int32)
    queue_arr = np.empty(n, dtype=np.int32)
    cdef cnp.int32_t[::1] dist = dist_arr
    cdef cnp.int32_t[::1] queue = queue_arr
    cdef Py_ssize_t head = 0, tail = 0, j
    cdef int v, w
    cdef cnp.int32_t dnext
    with nogil:
        dist[source] = 0
        queue[tail] = source
        tail += 1
        while head < tail:
            v = queue[head]
            head += 1
            dnext = dist[v] + 1
            for j in range(indptr[v], indptr[v + 1]):
                w = indices[j]
                if dist[w] < 0:
                    dist[w] = dnext
                    queue[tail] = w
                    tail += 1
    return dist_arr


def apsp_aggregate(const cnp.int64_t[::1] indptr, const cnp.int32_t[::1] indices,
                   int n, const cnp.int32_t[::1] sources):
    dist_arr = np.full(n, -1, dtype=np.int32)
    queue_arr = np.empty(n, dtype=np.int32)
    cdef cnp.int32_t[::1] dist = dist_arr
    cdef cnp.int32_t[::1] queue = queue_arr
    cdef cnp.int64_t total = 0, finite = 0, maxd = 0
    cdef Py_ssize_t head, tail, j, si, i
    cdef int s, v, w
    cdef cnp.int32_t dnext, last
    with nogil:
        for si in range(sources.shape[0]):
            s = sources[si]
            dist[s] = 0
            queue[0] = s
            head = 0
            tail = 1
            while head < tail:
                v = queue[head]
                head += 1
                dnext = dist[v] + 1
                for j in range(indptr[v], indptr[v + 1]):
                    w = indices[j]
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
    return int(total), int(finite), int(maxd)


def brandes_accumulate(const cnp.int64_t[::1] indptr, const cnp.int32_t[::1] indices,
                       int n, const cnp.int32_t[::1] sources):
    bc_arr = np.zeros(n, dtype=np.float64)
    dist_arr = np.full(n, -1, dtype=np.int32)
    sigma_arr = np.zeros(n, dtype=np.float64)
    delta_arr = np.zeros(n, dtype=np.float64)
    order_arr = np.empty(n, dtype=np.int32)
    cdef cnp.float64_t[::1] bc = bc_arr
    cdef cnp.int32_t[::1] dist = dist_arr
    cdef cnp.float64_t[::1] sigma = sigma_arr
    cdef cnp.float64_t[::1] delta = delta_arr
    cdef cnp.int32_t[::1] order = order_arr
    cdef Py_ssize_t head, tail, j, si, i, idx
    cdef int s, v, w
    cdef cnp.int32_t dnext, dprev
    cdef double sv, coeff
    with nogil:
        for si in range(sources.shape[0]):
            s = sources[si]
            dist[s] = 0
            sigma[s] = 1.0
            order[0] = s
            head = 0
            tail = 1
            while head < tail:
                v = order[head]
                head += 1
                dnext = dist[v] + 1
                sv = sigma[v]
                for j in range(indptr[v], indptr[v + 1]):
                    w = indices[j]
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
                for j in range(indptr[w], indptr[w + 1]):
                    v = indices[j]
                    if dist[v] == dprev:
                        delta[v] += sigma[v] * coeff
                bc[w] += delta[w]
            for i in range(tail):
                v = order[i]
                dist[v] = -1
                sigma[v] = 0.0
                delta[v] = 0.0
    return bc_arr


def local_clustering(const cnp.int64_t[::1] union_indptr, const cnp.int32_t[::1] union_indices,
                     const cnp.int64_t[::1] count_indptr, const cnp.int32_t[::1] count_indices,
                     int n):
    cc_arr = np.zeros(n, dtype=np.float64)
    flag_arr = np.zeros(n, dtype=np.uint8)
    cdef cnp.float64_t[::1] cc = cc_arr
    cdef cnp.uint8_t[::1] flag = flag_arr
    cdef Py_ssize_t start, end, j, jj
    cdef cnp.int64_t k, links
    cdef int v, u
    with nogil:
        for v in range(n):
            start = union_indptr[v]
            end = union_indptr[v + 1]
            k = end - start
            if k < 2:
                continue
            for j in range(start, end):
                flag[union_indices[j]] = 1
            links = 0
            for j in range(start, end):
                u = union_indices[j]
                for jj in range(count_indptr[u], count_indptr[u + 1]):
                    if flag[count_indices[jj]]:
                        links += 1
            for j in range(start, end):
                flag[union_indices[j]] = 0
            cc[v] = <double>links / <double>(k * (k - 1))
    return cc_arr


def frontier_degree_sum(const cnp.int64_t[::1] indptr, const cnp.int32_t[::1] indices,
                        int n, const cnp.int32_t[::1] sources, int radius):
    out_arr = np.zeros(sources.shape[0], dtype=np.int64)
    dist_arr = np.full(n, -1, dtype=np.int32)
    queue_arr = np.empty(n, dtype=np.int32)
    cdef cnp.int64_t[::1] out = out_arr
    cdef cnp.int32_t[::1] dist = dist_arr
    cdef cnp.int32_t[::1] queue = queue_arr
    cdef Py_ssize_t head, tail, j, pos, i
    cdef int s, v, w
    cdef cnp.int32_t dnext
    cdef cnp.int64_t acc
    with nogil:
        for pos in range(sources.shape[0]):
            s = sources[pos]
            dist[s] = 0
            queue[0] = s
            head = 0
            tail = 1
            acc = 0
            while head < tail:
                v = queue[head]
                head += 1
                dnext = dist[v] + 1
                if dnext > radius:
                    break
                for j in range(indptr[v], indptr[v + 1]):
                    w = indices[j]
                    if dist[w] < 0:
                        dist[w] = dnext
                        queue[tail] = w
                        tail += 1
                        if dnext == radius:
                            acc += indptr[w + 1] - indptr[w] - 1
            out[pos] = acc
            for i in range(tail):
                dist[queue[i]] = -1
    return out_arr
