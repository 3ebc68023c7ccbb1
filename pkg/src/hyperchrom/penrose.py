"""Penrose-type bound |a1(H)| <= N(H) and the tree-sum bounds around it.

Exact integer left-hand sides are compared with transcendental right-hand
sides such as ``(e t D)^(s-1)`` evaluated with :mod:`mpmath` at
``RHS_DIGITS`` significant digits.  A comparison that lands within a
relative ``10**-(RHS_DIGITS - 10)`` of the bound raises instead of guessing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import mpmath

from .chromatic import chromatic_polynomial
from .hypercore import (
    CapExceeded,
    Hypergraph,
    component_masks,
    edges_inside,
    induced,
    induced_mask,
    is_connected,
    popcount,
)
from .matroid import (
    PARTITION_CAP,
    crossing_edges,
    euler_inequality_check,
    forest_table,
    maximal_bad_partition_of_subset,
    partition_connected_decomposition,
    partition_profile,
)

RHS_DIGITS = 60
SUBSET_EDGE_CAP = 20
CLASS_EDGE_CAP = 12


class UndecidedComparison(ArithmeticError):
    """An exact value sits too close to a high-precision bound to decide."""


@dataclass
class BoundReport:
    check: str
    lhs: int
    bound_rhs: str
    ok: bool
    a1_value: int | None = None
    n_forests: int | None = None
    tau_values: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)
    rhs_digits: int = RHS_DIGITS

    def to_dict(self) -> dict:
        out = {
            "check": self.check,
            "lhs": str(self.lhs),
            "bound_rhs": self.bound_rhs,
            "rhs_digits": self.rhs_digits,
            "ok": self.ok,
        }
        if self.a1_value is not None:
            out["a1"] = str(self.a1_value)
        if self.n_forests is not None:
            out["n_forests"] = str(self.n_forests)
        if self.tau_values:
            out["tau_values"] = {
                ",".join(map(str, k)): str(v) for k, v in sorted(self.tau_values.items())
            }
        if self.details:
            out["details"] = self.details
        return out


def power_bound(lhs: int, factor: int, exponent: int) -> tuple[bool, str]:
    """Decide ``lhs <= (e * factor) ** exponent``; returns ``(ok, rhs_text)``."""
    if exponent == 0:
        return lhs <= 1, "1"
    if factor == 0:
        return lhs <= 0, "0"
    with mpmath.workdps(RHS_DIGITS):
        rhs = (mpmath.e * factor) ** exponent
        text = mpmath.nstr(rhs, RHS_DIGITS)
        slack = rhs * mpmath.mpf(10) ** (-(RHS_DIGITS - 10))
        diff = mpmath.mpf(lhs) - rhs
        if abs(diff) <= slack:
            raise UndecidedComparison(f"{lhs} is within {slack} of {text}")
        return diff < 0, text


# ------------------------------------------------------------------ a1 and N(H)


def _check_edges(H, cap):
    if H.num_edges > cap:
        raise CapExceeded(f"{H.num_edges} edges exceeds the subset enumeration cap {cap}")


def a1_signed_sum(H: Hypergraph, cap: int = SUBSET_EDGE_CAP) -> int:
    """Sum of ``(-1)^|E'|`` over edge subsets E' with ``(V, E')`` connected."""
    _check_edges(H, cap)
    masks = H.edge_masks
    total = 0
    for S in range(1 << len(masks)):
        chosen = [e for i, e in enumerate(masks) if S >> i & 1]
        if is_connected(H.n, chosen):
            total += -1 if len(chosen) & 1 else 1
    return total


def count_connected_spanning_hyperforests(H: Hypergraph, cap: int = SUBSET_EDGE_CAP) -> int:
    """N(H): hyperforest edge subsets F with ``(V, F)`` connected."""
    _check_edges(H, cap)
    table = forest_table(H)
    masks = H.edge_masks
    count = 0
    for S in range(1 << len(masks)):
        if table[S] and is_connected(H.n, [e for i, e in enumerate(masks) if S >> i & 1]):
            count += 1
    return count


def penrose_check(H: Hypergraph, cap: int = SUBSET_EDGE_CAP) -> BoundReport:
    a1 = a1_signed_sum(H, cap)
    N = count_connected_spanning_hyperforests(H, cap)
    return BoundReport("penrose", abs(a1), str(N), abs(a1) <= N, a1_value=a1, n_forests=N)


# ------------------------------------------------------------------ spanning trees


def bareiss_determinant(M: list[list[int]]) -> int:
    """Fraction-free exact determinant."""
    A = [row[:] for row in M]
    n = len(A)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for r in range(k + 1, n):
                if A[r][k] != 0:
                    A[k], A[r] = A[r], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def tau(G: Hypergraph) -> int:
    """Number of spanning trees of a graph (0 if disconnected, 1 for a single vertex)."""
    if not G.is_graph:
        raise ValueError("spanning-tree count needs a 2-uniform hypergraph")
    n = G.n
    if n == 0:
        return 0
    L = [[0] * n for _ in range(n)]
    for u, v in G.edges:
        L[u][u] += 1
        L[v][v] += 1
        L[u][v] -= 1
        L[v][u] -= 1
    return bareiss_determinant([row[1:] for row in L[1:]])


def _component_of(H: Hypergraph, v: int) -> int:
    for comp in component_masks(H.n, H.edge_masks):
        if comp >> v & 1:
            return comp
    raise ValueError(f"vertex {v} not in hypergraph")


def sokal_tree_sum_check(G: Hypergraph, v: int, vertex_cap: int = 16) -> BoundReport:
    """Compare ``sum over S containing v of tau(G[S])`` with ``(e D)^(n-1)``.

    Only subsets inside v's component have a spanning tree, so n and D are
    taken from that component.  The per-size sums are also compared with
    ``(e D)^(s-1)`` and reported under ``details``.
    """
    comp = _component_of(G, v)
    C, index = induced(G, [u for u in range(G.n) if comp >> u & 1])
    if C.n > vertex_cap:
        raise CapExceeded(f"component of {C.n} vertices exceeds the cap {vertex_cap}")
    root = index.index(v)
    D = C.max_degree
    others = [u for u in range(C.n) if u != root]
    taus = {}
    per_size = [0] * (C.n + 1)
    for r in range(len(others) + 1):
        for rest in itertools.combinations(others, r):
            S = tuple(sorted((root,) + rest))
            val = tau(induced(C, S)[0])
            if val:
                key = tuple(index[u] for u in S)
                taus[key] = val
                per_size[len(S)] += val
    total = sum(per_size)
    ok, rhs = power_bound(total, D, C.n - 1)
    per_size_ok = all(power_bound(per_size[s], D, s - 1)[0] for s in range(1, C.n + 1))
    return BoundReport(
        "sokal",
        total,
        rhs,
        ok,
        tau_values=taus,
        details={
            "component_size": C.n,
            "D": D,
            "per_size": [str(x) for x in per_size[1:]],
            "per_size_ok": per_size_ok,
        },
    )


# ------------------------------------------------------------------ bounded exponential type


@lru_cache(maxsize=64)
def _induced_a1_table(H: Hypergraph) -> dict[int, int]:
    """a1 of H[S] for every connected induced S (others are 0)."""
    out = {}
    for S in range(1, 1 << H.n):
        sub = induced_mask(H, S)
        if popcount(S) == 1 or (sub.num_edges and is_connected(sub.n, sub.edge_masks)):
            out[S] = chromatic_polynomial(sub).coefficient(1)
    return out


def bounded_expo_sum(H: Hypergraph, v: int, s: int) -> int:
    """``sum over S containing v with |S| = s of |a1(H[S])|``."""
    table = _induced_a1_table(H)
    others = [u for u in range(H.n) if u != v]
    total = 0
    for rest in itertools.combinations(others, s - 1):
        S = (1 << v) | sum(1 << u for u in rest)
        total += abs(table.get(S, 0))
    return total


def bounded_expo_check(H: Hypergraph, v: int, s: int, vertex_cap: int = 12) -> BoundReport:
    """Compare the size-s induced a1 sum around v with ``(e t D)^(s-1)``."""
    if H.n > vertex_cap:
        raise CapExceeded(f"n={H.n} exceeds the bounded-expo cap {vertex_cap}")
    if not 1 <= s <= H.n:
        raise ValueError(f"subset size s={s} outside 1..{H.n}")
    lhs = bounded_expo_sum(H, v, s)
    t = H.uniformity or H.rank_t
    ok, rhs = power_bound(lhs, t * H.max_degree, s - 1)
    return BoundReport("bounded_expo", lhs, rhs, ok, details={"v": v, "s": s, "t": t, "D": H.max_degree})


# ------------------------------------------------------------------ equivalence classes


@dataclass
class EquivalenceClass:
    parts: tuple[tuple[int, ...], ...]
    bad_edges: int
    members: list[int]
    union_mask: int = 0
    basis_members: list[int] = field(default_factory=list)
    basis_members_of_H: list[int] = field(default_factory=list)

    @property
    def key(self):
        return self.parts, self.bad_edges

    def signed_sum(self) -> int:
        return sum(-1 if popcount(S) & 1 else 1 for S in self.members)


def subset_key(H: Hypergraph, L: int, cap: int = PARTITION_CAP):
    """Class key of the spanning subhypergraph ``(V, L)``: (maximal bad partition, its bad edges)."""
    rec = maximal_bad_partition_of_subset(H, L, cap)
    if rec is None:
        return (tuple(range(H.n)),), 0
    return rec.parts, crossing_edges(H, rec.parts) & L


def _maximal_forests(table, ground: int, within: int) -> list[int]:
    """Inclusion-maximal hyperforests among subsets of ``ground``, maximal w.r.t. ``within``."""
    out = []
    sub = ground
    while True:
        if table[sub]:
            spare = within & ~sub
            maximal = True
            while spare:
                low = spare & -spare
                if table[sub | low]:
                    maximal = False
                    break
                spare ^= low
            if maximal:
                out.append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & ground
    return sorted(out)


def equivalence_classes(H: Hypergraph, cap: int = CLASS_EDGE_CAP) -> list[EquivalenceClass]:
    """Group every edge subset L (as a spanning subhypergraph) by its class key."""
    _check_edges(H, cap)
    groups: dict = {}
    for L in range(1 << H.num_edges):
        groups.setdefault(subset_key(H, L), []).append(L)
    table = forest_table(H)
    classes = []
    for (parts, bad), members in groups.items():
        union = 0
        for L in members:
            union |= L
        cls = EquivalenceClass(parts, bad, members, union)
        cls.basis_members = [S for S in _maximal_forests(table, union, union) if S in set(members)]
        cls.basis_members_of_H = [S for S in _maximal_forests(table, union, H.full_mask) if S in set(members)]
        classes.append(cls)
    classes.sort(key=lambda c: c.members[0])
    return classes


@dataclass
class StructureReport:
    ok: bool
    classes: int
    failures: list[str]
    class_sum_total: int
    a1: int
    connected_basis_total: int
    n_forests: int
    h_basis_divergences: int

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "classes": self.classes,
            "failures": self.failures,
            "class_sum_total": str(self.class_sum_total),
            "a1": str(self.a1),
            "connected_basis_total": str(self.connected_basis_total),
            "n_forests": str(self.n_forests),
            "h_basis_divergences": self.h_basis_divergences,
        }


def _submasks(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def structure_report(H: Hypergraph, cap: int = CLASS_EDGE_CAP) -> StructureReport:
    """Check the per-class structure of maximal hyperforests and the class inequality.

    For each class with union L': the class key of L' is the class key;
    every maximal hyperforest of L' is the bad edges plus one maximal
    hyperforest per partition-connected piece (and every such combination
    occurs); members are exactly the subsets of L' containing a maximal
    hyperforest of L'; and ``|sum over members of (-1)^|S|| <= #bases``,
    cross-checked as the Euler inequality of the dual matroid of L'.
    """
    classes = equivalence_classes(H, cap)
    table = forest_table(H)
    prof = partition_profile(H)
    failures = []
    class_sum_total = 0
    connected_basis_total = 0
    divergences = 0
    for cls in classes:
        tag = f"class{cls.members[0]}"
        Lp = cls.union_mask
        if subset_key(H, Lp) != cls.key:
            failures.append(f"{tag}: union is not in its own class")
        pieces = partition_connected_decomposition(H.edge_subset(Lp))
        bad = crossing_edges(H, pieces) & Lp
        piece_edges = [edges_inside(H, sum(1 << v for v in p)) & Lp for p in pieces]
        bases = _maximal_forests(table, Lp, Lp)
        piece_bases = [set(_maximal_forests(table, pe, pe)) for pe in piece_edges]
        for T in bases:
            if T & bad != bad:
                failures.append(f"{tag}: maximal hyperforest {T} misses bad edges")
            if any((T & pe) not in pb for pe, pb in zip(piece_edges, piece_bases)):
                failures.append(f"{tag}: maximal hyperforest {T} is not piecewise maximal")
        combos = 1
        for pb in piece_bases:
            combos *= len(pb)
        if combos != len(bases):
            failures.append(f"{tag}: {len(bases)} maximal hyperforests but {combos} piecewise combinations")
        spanning = {K for K in _submasks(Lp) if any(K & T == T for T in bases)}
        if spanning != set(cls.members):
            failures.append(f"{tag}: members differ from supersets of maximal hyperforests")
        if sorted(bases) != cls.basis_members:
            failures.append(f"{tag}: maximal hyperforests of the union are not all members")
        if cls.basis_members != cls.basis_members_of_H:
            divergences += 1
        signed = cls.signed_sum()
        if abs(signed) > len(cls.basis_members):
            failures.append(f"{tag}: |{signed}| exceeds {len(cls.basis_members)} bases")
        positions = [i for i in range(H.num_edges) if Lp >> i & 1]
        dual = _dual_on(prof, positions)
        euler = euler_inequality_check(dual, len(positions))
        if not euler.ok or euler.lhs != abs(signed) or euler.basis_count != len(bases):
            failures.append(f"{tag}: dual Euler check {euler} disagrees with class sums")
        class_sum_total += abs(signed)
        if is_connected(H.n, [e for i, e in enumerate(H.edge_masks) if cls.members[0] >> i & 1]):
            connected_basis_total += len(cls.basis_members)
    a1 = a1_signed_sum(H, cap)
    N = count_connected_spanning_hyperforests(H, cap)
    if class_sum_total < abs(a1):
        failures.append(f"class sums {class_sum_total} below |a1| = {abs(a1)}")
    if connected_basis_total != N:
        failures.append(f"connected-class bases {connected_basis_total} != N(H) = {N}")
    return StructureReport(
        not failures, len(classes), failures, class_sum_total, a1, connected_basis_total, N, divergences
    )


def _dual_on(prof, positions):
    """Dual-matroid rank on the restriction of M(H) to ``positions`` (local bitmasks)."""

    def lift(local):
        out = 0
        for j, i in enumerate(positions):
            if local >> j & 1:
                out |= 1 << i
        return out

    full_local = (1 << len(positions)) - 1
    r_full = prof.rank(lift(full_local))[0]
    return lambda S: popcount(S) + prof.rank(lift(full_local ^ S))[0] - r_full


def verify_structure_theorem(H: Hypergraph, cap: int = CLASS_EDGE_CAP) -> bool:
    return structure_report(H, cap).ok
