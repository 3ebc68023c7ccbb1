"""Pure-Python enumeration kernels.

Every function here has a twin in ``_ckernels.pyx`` with identical
arguments and results.  Hypergraphs are passed as ``(n, edges)`` where
``edges`` is a sequence of vertex bitmasks.
"""


def _members(mask):
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def _popcount(x):
    return bin(x).count("1")


def signed_component_counts(n, edges):
    """Return ``out`` with ``out[c] = sum of (-1)^|E'|`` over subsets E' having c components."""
    m = len(edges)
    members = [_members(e) for e in edges]
    parent = list(range(n))
    size = [1] * n
    out = [0] * (n + 1)

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    # include/exclude recursion with a rollback union-find (no path compression)
    def rec(i, comps, sign):
        if i == m:
            out[comps] += sign
            return
        rec(i + 1, comps, sign)
        undo = []
        vs = members[i]
        root = find(vs[0])
        c = comps
        for v in vs[1:]:
            r = find(v)
            if r != root:
                if size[r] > size[root]:
                    r, root = root, r
                parent[r] = root
                size[root] += size[r]
                undo.append(r)
                c -= 1
        rec(i + 1, c, -sign)
        for r in reversed(undo):
            top = parent[r]
            size[top] -= size[r]
            parent[r] = r

    rec(0, n, 1)
    return out


def _edges_by_max(n, edges):
    by_max = [[] for _ in range(n)]
    for idx, e in enumerate(edges):
        by_max[e.bit_length() - 1].append((idx, _members(e)))
    return by_max


def count_colorings(n, edges, q):
    """Number of q-colourings of the vertices with no monochromatic edge."""
    if n == 0:
        return 1
    if q <= 0:
        return 0
    by_max = _edges_by_max(n, edges)
    color = [0] * n

    def rec(v):
        if v == n:
            return 1
        total = 0
        closing = by_max[v]
        for c in range(q):
            color[v] = c
            for _, vs in closing:
                if all(color[u] == c for u in vs):
                    break
            else:
                total += rec(v + 1)
        return total

    return rec(0)


def partition_profile(n, edges):
    """Scan every set partition of ``range(n)`` in restricted-growth order.

    Returns a dict mapping the bitmask of crossing edges to
    ``(max_blocks, count, rgs)``: the largest block count among partitions
    with that crossing set, how many partitions attain it, and the
    lexicographically first restricted-growth string doing so.
    """
    if n == 0:
        return {0: (0, 1, ())}
    by_max = _edges_by_max(n, edges)
    block = [0] * n
    profile = {}

    def rec(v, k, cross):
        if v == n:
            hit = profile.get(cross)
            if hit is None or k > hit[0]:
                profile[cross] = (k, 1, tuple(block))
            elif k == hit[0]:
                profile[cross] = (k, hit[1] + 1, hit[2])
            return
        for b in range(k + 1):
            block[v] = b
            c = cross
            for idx, vs in by_max[v]:
                for u in vs:
                    if block[u] != b:
                        c |= 1 << idx
                        break
            rec(v + 1, k + 1 if b == k else k, c)

    # vertex 0 always opens block 0 and closes no edge
    rec(1, 1, 0)
    return profile


def admissible_counts(n, edges):
    """``out[j]`` = number of partitions into j blocks with no edge inside a block."""
    out = [0] * (n + 1)
    if n == 0:
        out[0] = 1
        return out
    by_max = _edges_by_max(n, edges)
    block = [0] * n

    def rec(v, k):
        if v == n:
            out[k] += 1
            return
        for b in range(k + 1):
            block[v] = b
            for _, vs in by_max[v]:
                if all(block[u] == b for u in vs):
                    break
            else:
                rec(v + 1, k + 1 if b == k else k)

    # vertex 0 closes no edge of size >= 2
    rec(1, 1)
    return out


def hyperforest_table(edges):
    """Return ``(circuit, forest)`` bytearrays indexed by edge-subset mask.

    ``circuit[S]`` is 1 when the edges of S, on the union of their vertices,
    form a hypercircuit; ``forest[S]`` is 1 when no nonempty subset of S does.
    """
    m = len(edges)
    size = 1 << m
    circuit = bytearray(size)
    forest = bytearray(size)
    forest[0] = 1
    for mask in range(1, size):
        sel = [edges[i] for i in range(m) if mask >> i & 1]
        union = 0
        for e in sel:
            union |= e
        if _popcount(union) == len(sel) and _hall_strict(union, sel):
            circuit[mask] = 1
            continue
        ok = 1
        rest = mask
        while rest:
            low = rest & -rest
            if not forest[mask ^ low]:
                ok = 0
                break
            rest ^= low
        forest[mask] = ok
    return circuit, forest


def _hall_strict(union, sel):
    # every nonempty proper X of the union meets at least |X| + 1 edges
    x = (union - 1) & union
    while x:
        if sum(1 for e in sel if e & x) < _popcount(x) + 1:
            return False
        x = (x - 1) & union
    return True
