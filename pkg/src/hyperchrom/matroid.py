"""The hypergraphic (circuit) matroid and partition connectivity.

Most queries here minimise or maximise over all set partitions of V.  A
single restricted-growth scan (``kernels.partition_profile``) records, for
every distinct set of crossing edges, the largest block count reaching
it.  That summary is enough to answer rank queries for any edge subset Z,
to test partition connectivity of any spanning subhypergraph, and to find
the maximal bad partition, because for a fixed crossing set more blocks
is always better for each of those objectives.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from . import kernels
from .hypercore import (
    CapExceeded,
    Hypergraph,
    edges_inside,
    induced_mask,
    is_connected,
    popcount,
)

PARTITION_CAP = 12
FOREST_EDGE_CAP = 20


class TheoremViolation(AssertionError):
    """A brute-force check contradicted a structural theorem."""


# ------------------------------------------------------------------ data types


@dataclass(frozen=True)
class CutQuery:
    X: frozenset
    gamma: frozenset


@dataclass(frozen=True)
class PartitionRecord:
    parts: tuple[tuple[int, ...], ...]
    crossing_count: int
    score: Fraction
    is_bad: bool

    def to_list(self) -> list[list[int]]:
        return [list(p) for p in self.parts]


@dataclass(frozen=True)
class RankQuery:
    Z: int
    rank: int
    witness: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class EulerResult:
    lhs: int
    basis_count: int
    ok: bool


def parts_from_rgs(rgs: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Blocks of a restricted-growth string; labels already follow block minima."""
    blocks: list[list[int]] = []
    for v, b in enumerate(rgs):
        if b == len(blocks):
            blocks.append([])
        blocks[b].append(v)
    return tuple(tuple(b) for b in blocks)


def parts_mask(parts: Iterable[Iterable[int]]) -> tuple[int, ...]:
    return tuple(sum(1 << v for v in p) for p in parts)


def crossing_edges(H: Hypergraph, parts) -> int:
    """Edge mask of edges meeting at least two parts."""
    masks = parts_mask(parts)
    out = 0
    for i, e in enumerate(H.edge_masks):
        if not any(e & p == e for p in masks):
            out |= 1 << i
    return out


def partition_record(H: Hypergraph, parts, edge_mask: int | None = None) -> PartitionRecord:
    """Score a partition against the edges in ``edge_mask`` (all edges by default)."""
    if edge_mask is None:
        edge_mask = H.full_mask
    parts = tuple(sorted(tuple(sorted(p)) for p in parts))
    N = popcount(crossing_edges(H, parts) & edge_mask)
    k = len(parts)
    score = Fraction(k * (H.n - 1), H.n) - N if H.n else Fraction(0)
    return PartitionRecord(parts, N, score, N < k - 1)


# ------------------------------------------------------------------ Γ and circuits


def gamma(H: Hypergraph, X: Iterable[int]) -> CutQuery:
    X = frozenset(X)
    xm = sum(1 << v for v in X)
    return CutQuery(X, frozenset(i for i, e in enumerate(H.edge_masks) if e & xm))


def _is_circuit_masks(vmask: int, edge_masks: Sequence[int]) -> bool:
    if popcount(vmask) != len(edge_masks):
        return False
    x = (vmask - 1) & vmask
    while x:
        if sum(1 for e in edge_masks if e & x) < popcount(x) + 1:
            return False
        x = (x - 1) & vmask
    return True


def is_hypercircuit(H: Hypergraph) -> bool:
    """``|V| == |E|`` and every nonempty proper X meets at least ``|X| + 1`` edges."""
    if H.n == 0:
        raise ValueError("hypercircuit test needs a nonempty hypergraph")
    return _is_circuit_masks((1 << H.n) - 1, H.edge_masks)


def is_hyperforest(H: Hypergraph, F: int) -> bool:
    """True iff no nonempty subset of the edges in F forms a hypercircuit on its own vertices."""
    chosen = [e for i, e in enumerate(H.edge_masks) if F >> i & 1]
    for r in range(1, len(chosen) + 1):
        for sub in itertools.combinations(chosen, r):
            union = 0
            for e in sub:
                union |= e
            if _is_circuit_masks(union, sub):
                return False
    return True


@lru_cache(maxsize=512)
def forest_table(H: Hypergraph) -> bytearray:
    """``table[F]`` is 1 iff edge subset F is a hyperforest (kernel-evaluated)."""
    if H.num_edges > FOREST_EDGE_CAP:
        raise CapExceeded(f"{H.num_edges} edges exceeds the hyperforest table cap {FOREST_EDGE_CAP}")
    return kernels.hyperforest_table(H.edge_masks)[1]


def rank_oracle_bruteforce(H: Hypergraph, Z: int) -> int:
    """Largest hyperforest contained in Z."""
    table = forest_table(H)
    best = 0
    sub = Z
    while True:
        if table[sub]:
            best = max(best, popcount(sub))
        if sub == 0:
            break
        sub = (sub - 1) & Z
    return best


# ------------------------------------------------------------------ partition profile


class PartitionProfile:
    """Summary of every set partition of V(H) by crossing-edge set."""

    def __init__(self, H: Hypergraph, cap: int = PARTITION_CAP):
        if H.n > cap:
            raise CapExceeded(f"n={H.n} exceeds the partition cap {cap}")
        self.H = H
        raw = kernels.partition_profile(H.n, H.edge_masks)
        # (crossing mask, max blocks, partitions at max, first rgs), in rgs order
        self.entries = sorted(
            ((cross, k, cnt, rgs) for cross, (k, cnt, rgs) in raw.items()),
            key=lambda item: item[3],
        )

    def rank(self, Z: int) -> tuple[int, tuple[int, ...]]:
        n = self.H.n
        best = None
        witness = ()
        for cross, k, _, rgs in self.entries:
            val = n - k + popcount(cross & Z)
            if best is None or val < best:
                best, witness = val, rgs
        return best, witness

    def is_partition_connected(self, L: int) -> bool:
        return all(popcount(cross & L) >= k - 1 for cross, k, _, _ in self.entries)

    def best_bad(self, L: int):
        """Bad partitions of ``(V, L)`` with the largest score.

        Returns ``(score_numerator, total_partitions_at_max, first_rgs)``
        with score numerator ``k(n-1) - nN``, or None if every partition is
        good.
        """
        n = self.H.n
        best = None
        total = 0
        first = None
        for cross, k, cnt, rgs in self.entries:
            N = popcount(cross & L)
            if N >= k - 1:
                continue
            val = k * (n - 1) - n * N
            if best is None or val > best:
                best, total, first = val, cnt, rgs
            elif val == best:
                total += cnt
        if best is None:
            return None
        return best, total, first


@lru_cache(maxsize=512)
def partition_profile(H: Hypergraph, cap: int = PARTITION_CAP) -> PartitionProfile:
    return PartitionProfile(H, cap)


# ------------------------------------------------------------------ rank and connectivity


def rank(H: Hypergraph, Z: int, cap: int = PARTITION_CAP) -> RankQuery:
    """Minimum over partitions P of ``|V| - |P| + e_Z(P)``, with a minimising P."""
    value, rgs = partition_profile(H, cap).rank(Z)
    return RankQuery(Z, value, parts_from_rgs(rgs))


def rank_oracle(H: Hypergraph, cap: int = PARTITION_CAP) -> Callable[[int], int]:
    prof = partition_profile(H, cap)
    return lambda Z: prof.rank(Z)[0]


def dual_rank_oracle(rank_fn: Callable[[int], int], m: int) -> Callable[[int], int]:
    """Rank of the dual matroid: ``r*(S) = |S| + r(E - S) - r(E)``."""
    full = (1 << m) - 1
    r_full = rank_fn(full)
    return lambda S: popcount(S) + rank_fn(full ^ S) - r_full


def is_partition_connected(H: Hypergraph, cap: int = PARTITION_CAP) -> bool:
    """Every partition P of V has at least ``|P| - 1`` crossing edges."""
    return partition_profile(H, cap).is_partition_connected(H.full_mask)


def _quick_reject(H: Hypergraph, vmask: int) -> bool:
    # partition-connected needs connectivity and at least |U| - 1 edges inside U
    inside = edges_inside(H, vmask)
    if popcount(inside) < popcount(vmask) - 1:
        return True
    sub = induced_mask(H, vmask)
    return sub.n > 1 and not is_connected(sub.n, sub.edge_masks)


def partition_connected_decomposition(H: Hypergraph, cap: int = PARTITION_CAP) -> list[tuple[int, ...]]:
    """Vertex sets of the maximal partition-connected induced subhypergraphs.

    Starts from singletons (vacuously partition-connected) and merges any
    group of current pieces whose union induces a partition-connected
    subhypergraph, smallest groups first, until no group merges.  Every
    current piece lies inside one maximal piece, so the fixpoint is the
    decomposition.
    """
    if H.n > cap:
        raise CapExceeded(f"n={H.n} exceeds the partition cap {cap}")
    pieces = [1 << v for v in range(H.n)]
    merged = True
    while merged:
        merged = False
        for size in range(2, len(pieces) + 1):
            for group in itertools.combinations(range(len(pieces)), size):
                union = 0
                for i in group:
                    union |= pieces[i]
                if _quick_reject(H, union):
                    continue
                if is_partition_connected(induced_mask(H, union), cap):
                    pieces = [p for i, p in enumerate(pieces) if i not in group] + [union]
                    pieces.sort(key=lambda p: p & -p)
                    merged = True
                    break
            if merged:
                break
    return [tuple(v for v in range(H.n) if p >> v & 1) for p in pieces]


def maximal_bad_partition(
    H: Hypergraph, cap: int = PARTITION_CAP, verify: bool = True
) -> PartitionRecord | None:
    """The bad partition maximising ``|P|(|V|-1)/|V| - N(P)``, or None if H is partition-connected.

    Raises :class:`TheoremViolation` if the maximiser is not unique or (with
    ``verify``) its parts differ from the partition-connected decomposition.
    """
    return _maximal_bad(H, partition_profile(H, cap), H.full_mask, cap, verify)


def _maximal_bad(H, prof, L, cap, verify):
    found = prof.best_bad(L)
    if found is None:
        return None
    num, total, rgs = found
    if total != 1:
        raise TheoremViolation(f"{total} bad partitions share the maximal score {num}/{H.n}")
    parts = parts_from_rgs(rgs)
    record = partition_record(H, parts, L)
    if verify:
        decomposition = partition_connected_decomposition(H.edge_subset(L), cap)
        if tuple(decomposition) != record.parts:
            raise TheoremViolation(
                f"maximal bad partition {record.parts} differs from decomposition {decomposition}"
            )
    return record


def maximal_bad_partition_of_subset(
    H: Hypergraph, L: int, cap: int = PARTITION_CAP, verify: bool = False
) -> PartitionRecord | None:
    """Maximal bad partition of the spanning subhypergraph ``(V, L)``, reusing H's profile."""
    return _maximal_bad(H, partition_profile(H, cap), L, cap, verify)


# ------------------------------------------------------------------ Euler inequality


def euler_inequality_check(rank_fn: Callable[[int], int], ground_set) -> EulerResult:
    """Compare ``|sum over independent S of (-1)^|S||`` with the number of bases.

    ``ground_set`` is the ground-set size m or a sequence of length m;
    subsets are bitmasks over positions ``0..m-1``.
    """
    m = ground_set if isinstance(ground_set, int) else len(ground_set)
    if m > FOREST_EDGE_CAP:
        raise CapExceeded(f"ground set of size {m} exceeds the enumeration cap {FOREST_EDGE_CAP}")
    r_full = rank_fn((1 << m) - 1)
    signed = 0
    bases = 0
    for S in range(1 << m):
        size = popcount(S)
        if rank_fn(S) == size:
            signed += -1 if size & 1 else 1
            if size == r_full:
                bases += 1
    lhs = abs(signed)
    return EulerResult(lhs, bases, lhs <= bases)


def hypergraphic_rank_check(H: Hypergraph) -> bool:
    """Rank formula equals brute-force maximum hyperforest size for every Z."""
    prof = partition_profile(H)
    for Z in range(1 << H.num_edges):
        if prof.rank(Z)[0] != rank_oracle_bruteforce(H, Z):
            return False
    return True
