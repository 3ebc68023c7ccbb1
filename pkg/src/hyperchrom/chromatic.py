"""Exact hypergraph chromatic polynomials and their alternative forms.

The main route is the subset expansion

    P_H(x) = sum over E' of (-1)^|E'| x^c(E'),

evaluated by the ``signed_component_counts`` kernel.  The other forms here
(colouring counts, admissible partitions, the exponential-type
reconstruction from ``b = a1``) are independent routes used to check it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import kernels
from .hypercore import CapExceeded, Hypergraph, induced, induced_mask, popcount
from .polynomial import ONE, IntPolynomial, from_falling

EDGE_CAP = 24
PARTITION_CAP = 12
COLORING_WORK_CAP = 10**9
IDENTITY_VERTEX_CAP = 8


def chromatic_polynomial(H: Hypergraph, cap: int = EDGE_CAP) -> IntPolynomial:
    """Exact chromatic polynomial of H; monic of degree ``H.n``."""
    if H.num_edges > cap:
        raise CapExceeded(f"{H.num_edges} edges exceeds the enumeration cap {cap}")
    if H.n == 0:
        return ONE
    return IntPolynomial(kernels.signed_component_counts(H.n, H.edge_masks))


def chromatic_polynomial_auto(H: Hypergraph, cap: int = EDGE_CAP, partition_cap: int = PARTITION_CAP) -> IntPolynomial:
    """Subset expansion when |E| is within ``cap``, else the admissible-partition form."""
    if H.num_edges <= cap:
        return chromatic_polynomial(H, cap)
    if H.n <= partition_cap:
        return falling_form_polynomial(H, partition_cap)
    raise CapExceeded(f"{H.num_edges} edges and {H.n} vertices exceed both enumeration caps")


def count_proper_colorings(H: Hypergraph, q: int, cap: int = COLORING_WORK_CAP) -> int:
    """Brute-force count of q-colourings with no monochromatic edge."""
    if q < 0:
        raise ValueError("q must be nonnegative")
    if q ** H.n > cap:
        raise CapExceeded(f"q**n = {q ** H.n} exceeds the colouring work cap {cap}")
    return kernels.count_colorings(H.n, H.edge_masks, q)


def coefficient(P: IntPolynomial, i: int) -> int:
    return P.coefficient(i)


def a1(H: Hypergraph, cap: int = EDGE_CAP) -> int:
    return chromatic_polynomial(H, cap).coefficient(1)


def admissible_partition_form(H: Hypergraph, cap: int = PARTITION_CAP) -> list[int]:
    """Counts ``abar[j]`` of partitions into j blocks with no edge inside one block.

    ``abar[0]`` is stored as 0 for ``n >= 1``.
    """
    if H.n > cap:
        raise CapExceeded(f"n={H.n} exceeds the partition cap {cap}")
    return kernels.admissible_counts(H.n, H.edge_masks)


def falling_form_polynomial(H: Hypergraph, cap: int = PARTITION_CAP) -> IntPolynomial:
    return from_falling(admissible_partition_form(H, cap))


class _InducedCache:
    """Chromatic polynomials of the induced subhypergraphs, keyed by vertex mask."""

    def __init__(self, H: Hypergraph):
        self.H = H
        self._polys: dict[int, IntPolynomial] = {0: ONE}

    def __call__(self, vmask: int) -> IntPolynomial:
        P = self._polys.get(vmask)
        if P is None:
            P = chromatic_polynomial(induced_mask(self.H, vmask))
            self._polys[vmask] = P
        return P


def exponential_identity_sides(H: Hypergraph, x: int, y: int) -> tuple[int, int]:
    """Both sides of ``sum_S P(H[S], x) P(H[V-S], y) = P(H, x + y)``."""
    if H.n > IDENTITY_VERTEX_CAP:
        raise CapExceeded(f"n={H.n} exceeds the identity cap {IDENTITY_VERTEX_CAP}")
    poly = _InducedCache(H)
    full = (1 << H.n) - 1
    lhs = 0
    for S in range(full + 1):
        lhs += poly(S)(x) * poly(full ^ S)(y)
    return lhs, poly(full)(x + y)


def check_exponential_identity(H: Hypergraph, x: int, y: int) -> bool:
    lhs, rhs = exponential_identity_sides(H, x, y)
    return lhs == rhs


@dataclass(frozen=True)
class BFunctionTable:
    """``b(S) = a1(H[S])`` for every nonempty vertex subset S (keyed by sorted tuple)."""

    values: dict

    def __getitem__(self, S) -> int:
        return self.values[tuple(sorted(S))]


def b_function_table(H: Hypergraph, cap: int = PARTITION_CAP) -> BFunctionTable:
    if H.n > cap:
        raise CapExceeded(f"n={H.n} exceeds the partition cap {cap}")
    values = {}
    for S in range(1, 1 << H.n):
        verts = tuple(v for v in range(H.n) if S >> v & 1)
        values[verts] = a1(induced(H, verts)[0])
    return BFunctionTable(values)


def reconstruct_via_b(H: Hypergraph, cap: int = PARTITION_CAP) -> IntPolynomial:
    """Rebuild P_H from ``b = a1`` on induced subhypergraphs.

    ``a_k`` is the sum, over partitions of V into k blocks, of the product
    of b over the blocks.  The partition sum is organised by the block that
    holds the lowest remaining vertex, which visits every partition once.
    """
    if H.n == 0:
        return ONE
    table = b_function_table(H, cap)
    b = {}
    for verts, val in table.values.items():
        b[sum(1 << v for v in verts)] = val

    @lru_cache(maxsize=None)
    def blocks(rest: int) -> tuple[int, ...]:
        # blocks(rest)[k] = sum over partitions of rest into k blocks of prod b
        if rest == 0:
            return (1,)
        low = rest & -rest
        others = rest ^ low
        acc = [0] * (popcount(rest) + 1)
        sub = others
        while True:
            block = sub | low
            tail = blocks(rest ^ block)
            bv = b[block]
            if bv:
                for k, val in enumerate(tail):
                    acc[k + 1] += bv * val
            if sub == 0:
                break
            sub = (sub - 1) & others
        return tuple(acc)

    return IntPolynomial(blocks((1 << H.n) - 1))
