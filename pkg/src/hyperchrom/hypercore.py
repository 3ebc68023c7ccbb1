"""Hypergraph data model, connectivity, induced substructures, generators and JSON I/O."""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence


class HypergraphError(ValueError):
    """Raised for malformed or invalid hypergraph input."""


class CapExceeded(RuntimeError):
    """Raised when an enumeration would exceed its configured cap."""


@dataclass(frozen=True)
class Hypergraph:
    """A simple hypergraph on vertices ``0..n-1``.

    Edges are stored canonically: each edge is a sorted tuple of distinct
    vertices, and the edge list is sorted lexicographically.  Use
    :meth:`from_edges` to build one from arbitrary input.
    """

    n: int
    edges: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise HypergraphError(f"vertex count must be a nonnegative integer, got {self.n!r}")
        prev = None
        for e in self.edges:
            if len(e) < 2:
                raise HypergraphError(f"edge {list(e)} has fewer than 2 vertices")
            if any(not 0 <= v < self.n for v in e):
                raise HypergraphError(f"edge {list(e)} has a vertex outside [0, {self.n})")
            if any(a >= b for a, b in zip(e, e[1:])):
                raise HypergraphError(f"edge {list(e)} is not strictly sorted")
            if prev is not None and e <= prev:
                if e == prev:
                    raise HypergraphError(f"duplicate edge {list(e)}")
                raise HypergraphError("edges are not in canonical order")
            prev = e

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        canon = []
        for e in edges:
            vs = [int(v) for v in e]
            s = tuple(sorted(set(vs)))
            if len(s) != len(vs):
                raise HypergraphError(f"edge {vs} repeats a vertex")
            canon.append(s)
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise HypergraphError(f"duplicate edge {list(a)}")
        return cls(int(n), tuple(canon))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def uniformity(self) -> int | None:
        """Common edge size t, or None when the hypergraph has no edges or mixed sizes."""
        sizes = {len(e) for e in self.edges}
        return sizes.pop() if len(sizes) == 1 else None

    @property
    def rank_t(self) -> int:
        """Largest edge size (0 for an edgeless hypergraph); equals t when uniform."""
        return max((len(e) for e in self.edges), default=0)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return tuple(deg)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << v for v in e) for e in self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << self.num_edges) - 1

    @property
    def is_graph(self) -> bool:
        return all(len(e) == 2 for e in self.edges)

    def edge_subset(self, mask: int) -> "Hypergraph":
        """Spanning subhypergraph (same vertex set) keeping the edges selected by ``mask``."""
        return Hypergraph(self.n, tuple(e for i, e in enumerate(self.edges) if mask >> i & 1))

    def to_dict(self) -> dict:
        return {"num_vertices": self.n, "edges": [list(e) for e in self.edges]}

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def parse_hypergraph(text: str | bytes | dict) -> Hypergraph:
    """Parse the JSON document ``{"num_vertices": n, "edges": [[...], ...]}``."""
    if isinstance(text, dict):
        doc = text
    else:
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise HypergraphError(f"malformed JSON: {exc}") from None
    if not isinstance(doc, dict) or "num_vertices" not in doc or "edges" not in doc:
        raise HypergraphError('document must be an object with "num_vertices" and "edges"')
    n = doc["num_vertices"]
    edges = doc["edges"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise HypergraphError('"num_vertices" must be a nonnegative integer')
    if not isinstance(edges, list) or not all(isinstance(e, list) for e in edges):
        raise HypergraphError('"edges" must be an array of arrays')
    for e in edges:
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in e):
            raise HypergraphError(f"edge {e} contains a non-integer")
        if len(e) < 2:
            raise HypergraphError(f"edge {e} has fewer than 2 vertices")
        if any(not 0 <= v < n for v in e):
            raise HypergraphError(f"edge {e} has a vertex out of range")
    return Hypergraph.from_edges(n, edges)


# ------------------------------------------------------------------ structure


@dataclass(frozen=True)
class EdgeSubset:
    mask: int
    size: int
    component_count: int


def component_masks(n: int, edge_masks: Sequence[int]) -> list[int]:
    """Vertex bitmasks of the connected components of ``(range(n), edges)``."""
    comps: list[int] = []
    pending = list(edge_masks)
    seen = 0
    for v in range(n):
        bit = 1 << v
        if seen & bit:
            continue
        comp = bit
        grew = True
        while grew:
            grew = False
            rest = []
            for e in pending:
                if e & comp:
                    if e | comp != comp:
                        comp |= e
                    grew = True
                else:
                    rest.append(e)
            pending = rest
        comps.append(comp)
        seen |= comp
    return comps


def connected_components(H: Hypergraph, mask: int) -> EdgeSubset:
    """Count components of ``(V(H), E')`` for the edge subset given by ``mask``.

    Isolated vertices are components of their own.
    """
    chosen = [e for i, e in enumerate(H.edge_masks) if mask >> i & 1]
    return EdgeSubset(mask, len(chosen), len(component_masks(H.n, chosen)))


def is_connected(n: int, edge_masks: Sequence[int]) -> bool:
    if n == 0:
        return False
    return len(component_masks(n, edge_masks)) == 1


def induced(H: Hypergraph, S: Iterable[int]) -> tuple[Hypergraph, tuple[int, ...]]:
    """Induced subhypergraph on S, re-indexed to ``0..|S|-1``.

    Returns the subhypergraph and the index map (new index -> old vertex).
    Edges only partly inside S are dropped.
    """
    verts = tuple(sorted(set(S)))
    pos = {v: i for i, v in enumerate(verts)}
    edges = [tuple(pos[v] for v in e) for e in H.edges if all(v in pos for v in e)]
    return Hypergraph.from_edges(len(verts), edges), verts


def induced_mask(H: Hypergraph, vmask: int) -> Hypergraph:
    return induced(H, [v for v in range(H.n) if vmask >> v & 1])[0]


def edges_inside(H: Hypergraph, vmask: int) -> int:
    """Edge-subset mask of the edges contained in the vertex set ``vmask``."""
    out = 0
    for i, e in enumerate(H.edge_masks):
        if e & vmask == e:
            out |= 1 << i
    return out


@dataclass(frozen=True)
class IntersectionGraph:
    node_count: int
    adjacency: tuple[tuple[int, int], ...]

    def degrees(self) -> list[int]:
        deg = [0] * self.node_count
        for i, j in self.adjacency:
            deg[i] += 1
            deg[j] += 1
        return deg


def intersection_graph(H: Hypergraph) -> IntersectionGraph:
    masks = H.edge_masks
    adj = tuple(
        (i, j)
        for i, j in itertools.combinations(range(len(masks)), 2)
        if masks[i] & masks[j]
    )
    return IntersectionGraph(len(masks), adj)


# ------------------------------------------------------------------ generators

FAMILIES = ("single_edge", "complete_uniform", "tight_cycle", "loose_path", "random_uniform")


def single_edge(t: int) -> Hypergraph:
    if t < 2:
        raise HypergraphError("edge size must be at least 2")
    return Hypergraph.from_edges(t, [range(t)])


def complete_uniform(n: int, t: int) -> Hypergraph:
    _check_nt(n, t)
    return Hypergraph.from_edges(n, itertools.combinations(range(n), t))


def tight_cycle(n: int, t: int) -> Hypergraph:
    """Edges ``{i, i+1, ..., i+t-1}`` mod n for every i; needs ``n > t``."""
    _check_nt(n, t)
    if n == t:
        raise HypergraphError("tight cycle needs n > t (otherwise all edges coincide)")
    return Hypergraph.from_edges(n, [[(i + j) % n for j in range(t)] for i in range(n)])


def loose_path(k: int, t: int) -> Hypergraph:
    """k edges of size t, consecutive edges sharing exactly one vertex."""
    if t < 2 or k < 0:
        raise HypergraphError("loose path needs t >= 2 and k >= 0")
    n = k * (t - 1) + 1
    return Hypergraph.from_edges(n, [range(i * (t - 1), i * (t - 1) + t) for i in range(k)])


def random_uniform(n: int, t: int, p: float, seed: int) -> Hypergraph:
    """Each t-subset is an edge independently with probability p (lexicographic draw order)."""
    _check_nt(n, t)
    if not 0.0 <= p <= 1.0:
        raise HypergraphError("p must lie in [0, 1]")
    rng = random.Random(seed)
    return Hypergraph.from_edges(
        n, [c for c in itertools.combinations(range(n), t) if rng.random() < p]
    )


def exhaustive_uniform(n: int, t: int) -> Iterable[Hypergraph]:
    """Every t-uniform hypergraph on n labelled vertices, edge-subsets in binary order."""
    _check_nt(n, t)
    pool = list(itertools.combinations(range(n), t))
    for mask in range(1 << len(pool)):
        yield Hypergraph.from_edges(n, [c for i, c in enumerate(pool) if mask >> i & 1])


def _check_nt(n, t):
    if t < 2:
        raise HypergraphError("edge size t must be at least 2")
    if t > n:
        raise HypergraphError(f"t={t} exceeds n={n}")


def generate(family: str, **params) -> Hypergraph:
    """Build a named family member; see :data:`FAMILIES`."""
    builders = {
        "single_edge": single_edge,
        "complete_uniform": complete_uniform,
        "tight_cycle": tight_cycle,
        "loose_path": loose_path,
        "random_uniform": random_uniform,
    }
    if family not in builders:
        raise HypergraphError(f"unknown family {family!r}")
    try:
        return builders[family](**params)
    except TypeError as exc:
        raise HypergraphError(f"bad parameters for {family}: {exc}") from None


def disjoint_union(*parts: Hypergraph) -> Hypergraph:
    edges = []
    offset = 0
    for H in parts:
        edges.extend([v + offset for v in e] for e in H.edges)
        offset += H.n
    return Hypergraph.from_edges(offset, edges)


def popcount(x: int) -> int:
    return bin(x).count("1")


def mask_members(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out
