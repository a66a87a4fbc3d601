# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled search kernels. Mirrors ``_pykernels`` exactly."""

from libc.stdint cimport uint64_t

BACKEND = "cython"

cdef enum:
    MAXN = 64


cdef bint _next_rgs(int* a, int n, int k) noexcept nogil:
    cdef int prefix_max[MAXN]
    cdef int i, j, t, x, m = -1, before, top, fresh
    for i in range(n):
        if a[i] > m:
            m = a[i]
        prefix_max[i] = m
    for i in range(n - 1, 0, -1):
        before = prefix_max[i - 1]
        x = a[i] + 1
        if x > before + 1 or x >= k:
            continue
        top = before if before > x else x
        if n - 1 - i < k - 1 - top:
            continue
        a[i] = x
        fresh = k - 1 - top
        for j in range(i + 1, n - fresh):
            a[j] = 0
        t = top + 1
        for j in range(n - fresh, n):
            a[j] = t
            t += 1
        return True
    return False


cdef bint _dominating(const uint64_t* adj, const int* a, int n, int k) noexcept nogil:
    cdef uint64_t parts[MAXN]
    cdef int v, j
    for j in range(k):
        parts[j] = 0
    for v in range(n):
        parts[a[v]] |= (<uint64_t>1) << v
    for v in range(n):
        if adj[v] & ~parts[a[v]] == 0:
            return False
    return True


cdef bint _resolving(const unsigned char* dist, const int* a, int n, int k,
                     unsigned char* vec) noexcept nogil:
    cdef int size[MAXN]
    cdef int v, w, j, base
    cdef unsigned char d
    cdef bint same
    for j in range(k):
        size[j] = 0
    for v in range(n):
        size[a[v]] += 1
    for v in range(n):
        if size[a[v]] < 2:
            continue
        base = v * k
        for j in range(k):
            vec[base + j] = 255
        for w in range(n):
            d = dist[v * n + w]
            if d < vec[base + a[w]]:
                vec[base + a[w]] = d
        # compare against earlier members of the same part only
        for w in range(v):
            if a[w] != a[v]:
                continue
            same = True
            for j in range(k):
                if vec[w * k + j] != vec[base + j]:
                    same = False
                    break
            if same:
                return False
    return True


def find_partitions(dist, adj, int n, int k, bint dominating=False, start=None,
                    long long limit=-1, long long max_results=1):
    cdef unsigned char cdist[MAXN * MAXN]
    cdef unsigned char vec[MAXN * MAXN]
    cdef uint64_t cadj[MAXN]
    cdef int a[MAXN]
    cdef int i
    cdef long long scanned = 0
    if not 1 <= k <= n <= MAXN:
        raise ValueError(f"need 1 <= k <= n <= {MAXN}")
    for i in range(n * n):
        cdist[i] = dist[i]
    for i in range(n):
        cadj[i] = adj[i]
    if start is None:
        for i in range(n):
            a[i] = 0
        for i in range(1, k):
            a[n - k + i] = i
    else:
        for i in range(n):
            a[i] = start[i]
    found = []
    while limit < 0 or scanned < limit:
        scanned += 1
        if (not dominating or _dominating(cadj, a, n, k)) and _resolving(cdist, a, n, k, vec):
            found.append(tuple([a[i] for i in range(n)]))
            if 0 <= max_results <= len(found):
                break
        if not _next_rgs(a, n, k):
            break
    return found


def count_partitions(dist, adj, int n, int k, bint dominating=False):
    return len(find_partitions(dist, adj, n, k, dominating, None, -1, -1))
