# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels; see ``_pykernels`` for the reference semantics.

Vertex sets and edge subsets are ``uint64`` bitmasks, so ``n <= 64`` and
``len(edges) <= 63``.  Signed sums are accumulated in ``int64``; callers
keep ``len(edges) <= 62`` so they cannot overflow.
"""

from libc.stdint cimport int64_t, uint64_t
from libc.stdlib cimport malloc, free

MAX_VERTICES = 64
MAX_EDGES = 63


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


cdef inline int _popcount(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef struct Work:
    int n
    int m
    uint64_t *edges
    int *vstart       # CSR offsets of edge vertex lists
    int *verts
    int *bm_start     # CSR offsets of edges grouped by max vertex
    int *bm_edge
    int *parent
    int *size
    int *color
    int64_t *acc


cdef int _setup(Work *w, int n, list edges) except -1:
    cdef int m = len(edges)
    cdef int i, v, pos, total = 0
    cdef uint64_t e
    w.n = n
    w.m = m
    w.edges = <uint64_t *> malloc((m + 1) * sizeof(uint64_t))
    w.vstart = <int *> malloc((m + 1) * sizeof(int))
    w.bm_start = <int *> malloc((n + 2) * sizeof(int))
    w.bm_edge = <int *> malloc((m + 1) * sizeof(int))
    w.parent = <int *> malloc((n + 1) * sizeof(int))
    w.size = <int *> malloc((n + 1) * sizeof(int))
    w.color = <int *> malloc((n + 1) * sizeof(int))
    w.acc = <int64_t *> malloc((n + 2) * sizeof(int64_t))
    for i in range(m):
        e = <uint64_t> edges[i]
        w.edges[i] = e
        total += _popcount(e)
    w.verts = <int *> malloc((total + 1) * sizeof(int))
    pos = 0
    for i in range(m):
        w.vstart[i] = pos
        for v in range(n):
            if (w.edges[i] >> v) & 1:
                w.verts[pos] = v
                pos += 1
    w.vstart[m] = pos
    # bucket edges by their largest vertex
    for v in range(n + 2):
        w.bm_start[v] = 0
    for i in range(m):
        w.bm_start[_maxbit(w.edges[i]) + 1] += 1
    for v in range(n):
        w.bm_start[v + 1] += w.bm_start[v]
    for v in range(n + 1):
        w.parent[v] = w.bm_start[v]
    for i in range(m):
        v = _maxbit(w.edges[i])
        w.bm_edge[w.parent[v]] = i
        w.parent[v] += 1
    for v in range(n + 1):
        w.parent[v] = v
        w.size[v] = 1
        w.color[v] = 0
    for v in range(n + 2):
        w.acc[v] = 0
    return 0


cdef inline int _maxbit(uint64_t e) nogil:
    cdef int b = -1
    while e:
        e >>= 1
        b += 1
    return b


cdef void _teardown(Work *w):
    free(w.edges)
    free(w.vstart)
    free(w.verts)
    free(w.bm_start)
    free(w.bm_edge)
    free(w.parent)
    free(w.size)
    free(w.color)
    free(w.acc)


cdef void _check_sizes(int n, int m) except *:
    if n > MAX_VERTICES or m > MAX_EDGES:
        raise ValueError("compiled kernels need n <= 64 and at most 63 edges")


# ---------------------------------------------------------------- components

cdef inline int _find(int *parent, int x) nogil:
    while parent[x] != x:
        x = parent[x]
    return x


cdef void _components(Work *w, int i, int comps, int64_t sign) nogil:
    cdef int j, r, root, top, c, nundo
    cdef int undo[64]
    if i == w.m:
        w.acc[comps] += sign
        return
    _components(w, i + 1, comps, sign)
    nundo = 0
    c = comps
    root = _find(w.parent, w.verts[w.vstart[i]])
    for j in range(w.vstart[i] + 1, w.vstart[i + 1]):
        r = _find(w.parent, w.verts[j])
        if r != root:
            if w.size[r] > w.size[root]:
                r, root = root, r
            w.parent[r] = root
            w.size[root] += w.size[r]
            undo[nundo] = r
            nundo += 1
            c -= 1
    _components(w, i + 1, c, -sign)
    while nundo > 0:
        nundo -= 1
        r = undo[nundo]
        top = w.parent[r]
        w.size[top] -= w.size[r]
        w.parent[r] = r


def signed_component_counts(int n, edges):
    cdef Work w
    edges = list(edges)
    _check_sizes(n, len(edges))
    _setup(&w, n, edges)
    try:
        with nogil:
            _components(&w, 0, n, 1)
        return [int(w.acc[c]) for c in range(n + 1)]
    finally:
        _teardown(&w)


# ---------------------------------------------------------------- colourings

cdef int64_t _colorings(Work *w, int v, int q) nogil:
    cdef int64_t total = 0
    cdef int c, k, j, idx
    cdef bint mono
    if v == w.n:
        return 1
    for c in range(q):
        w.color[v] = c
        mono = False
        for k in range(w.bm_start[v], w.bm_start[v + 1]):
            idx = w.bm_edge[k]
            mono = True
            for j in range(w.vstart[idx], w.vstart[idx + 1]):
                if w.color[w.verts[j]] != c:
                    mono = False
                    break
            if mono:
                break
        if not mono:
            total += _colorings(w, v + 1, q)
    return total


def count_colorings(int n, edges, long long q):
    cdef Work w
    cdef int64_t out
    if n == 0:
        return 1
    if q <= 0:
        return 0
    edges = list(edges)
    _check_sizes(n, len(edges))
    if float(q) ** n >= 9.0e18:
        raise OverflowError("q**n exceeds the int64 range of the compiled kernel")
    _setup(&w, n, edges)
    try:
        with nogil:
            out = _colorings(&w, 0, <int> q)
        return int(out)
    finally:
        _teardown(&w)


# ---------------------------------------------------------------- partitions

cdef uint64_t _closing_cross(Work *w, int v, int b):
    # edges whose largest vertex is v and which leave block b
    cdef uint64_t c = 0
    cdef int k, j, idx
    for k in range(w.bm_start[v], w.bm_start[v + 1]):
        idx = w.bm_edge[k]
        for j in range(w.vstart[idx], w.vstart[idx + 1]):
            if w.color[w.verts[j]] != b:
                c |= (<uint64_t> 1) << idx
                break
    return c


cdef void _profile(Work *w, int v, int k, uint64_t cross, dict profile) except *:
    cdef int b, i
    cdef object hit
    if v == w.n:
        key = cross
        hit = profile.get(key)
        if hit is None or k > hit[0]:
            profile[key] = (k, 1, tuple([w.color[i] for i in range(w.n)]))
        elif k == hit[0]:
            profile[key] = (k, hit[1] + 1, hit[2])
        return
    for b in range(k + 1):
        w.color[v] = b
        _profile(w, v + 1, k + 1 if b == k else k, cross | _closing_cross(w, v, b), profile)


def partition_profile(int n, edges):
    cdef Work w
    cdef dict profile = {}
    if n == 0:
        return {0: (0, 1, ())}
    edges = list(edges)
    _check_sizes(n, len(edges))
    _setup(&w, n, edges)
    try:
        w.color[0] = 0
        _profile(&w, 1, 1, 0, profile)
        return profile
    finally:
        _teardown(&w)


cdef void _admissible(Work *w, int v, int k) nogil:
    cdef int b, kk, j, idx
    cdef bint inside
    if v == w.n:
        w.acc[k] += 1
        return
    for b in range(k + 1):
        w.color[v] = b
        inside = False
        for kk in range(w.bm_start[v], w.bm_start[v + 1]):
            idx = w.bm_edge[kk]
            inside = True
            for j in range(w.vstart[idx], w.vstart[idx + 1]):
                if w.color[w.verts[j]] != b:
                    inside = False
                    break
            if inside:
                break
        if not inside:
            _admissible(w, v + 1, k + 1 if b == k else k)


def admissible_counts(int n, edges):
    cdef Work w
    if n == 0:
        return [1]
    edges = list(edges)
    _check_sizes(n, len(edges))
    _setup(&w, n, edges)
    try:
        w.color[0] = 0
        with nogil:
            _admissible(&w, 1, 1)
        return [int(w.acc[j]) for j in range(n + 1)]
    finally:
        _teardown(&w)


# ---------------------------------------------------------------- hyperforests

cdef bint _hall_strict(uint64_t union, uint64_t *sel, int k) nogil:
    cdef uint64_t x = (union - 1) & union
    cdef int i, hits
    while x:
        hits = 0
        for i in range(k):
            if sel[i] & x:
                hits += 1
        if hits < _popcount(x) + 1:
            return False
        x = (x - 1) & union
    return True


def hyperforest_table(edges):
    cdef list elist = list(edges)
    cdef int m = len(elist)
    cdef int i, k
    cdef uint64_t mask, union, rest, low, size
    cdef uint64_t sel[64]
    cdef uint64_t ev[64]
    cdef unsigned char[:] circ
    cdef unsigned char[:] forest
    cdef bint ok
    if m > 40:
        raise ValueError("hyperforest table needs at most 40 edges")
    for i in range(m):
        ev[i] = <uint64_t> elist[i]
    size = (<uint64_t> 1) << m
    circuit_buf = bytearray(size)
    forest_buf = bytearray(size)
    circ = circuit_buf
    forest = forest_buf
    with nogil:
        forest[0] = 1
        for mask in range(1, size):
            k = 0
            union = 0
            for i in range(m):
                if (mask >> i) & 1:
                    sel[k] = ev[i]
                    union |= ev[i]
                    k += 1
            if _popcount(union) == k and _hall_strict(union, sel, k):
                circ[mask] = 1
                continue
            ok = True
            rest = mask
            while rest:
                low = rest & (~rest + 1)
                if not forest[mask ^ low]:
                    ok = False
                    break
                rest ^= low
            forest[mask] = ok
    return circuit_buf, forest_buf
