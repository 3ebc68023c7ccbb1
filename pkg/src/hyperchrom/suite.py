"""Per-instance verification checks and instance sweeps."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from . import chromatic, matroid, penrose, roots
from .hypercore import CapExceeded, Hypergraph, HypergraphError, exhaustive_uniform, generate, popcount

CHECKS = (
    "penrose",
    "expo_identity",
    "bounded_expo",
    "rank_consistency",
    "hyperforest_bound",
    "euler_inequality",
    "root_bounds",
    "structure_theorem",
)


@dataclass(frozen=True)
class Caps:
    edges: int = chromatic.EDGE_CAP
    partition: int = matroid.PARTITION_CAP
    subset_edges: int = penrose.SUBSET_EDGE_CAP
    class_edges: int = 10
    class_vertices: int = 7
    identity_vertices: int = 6
    expo_vertices: int = 10
    expo_max_s: int = 6


@dataclass(frozen=True)
class Instance:
    instance_id: str
    H: Hypergraph
    seed: int | None = None


# ------------------------------------------------------------------ checks


def _penrose(H, caps):
    rep = penrose.penrose_check(H, caps.subset_edges)
    P = chromatic.chromatic_polynomial(H, caps.edges)
    consistent = P.coefficient(1) == rep.a1_value
    return rep.ok and consistent, {"a1": str(rep.a1_value), "N": str(rep.n_forests), "a1_matches_polynomial": consistent}


def _expo_identity(H, caps):
    if H.n > caps.identity_vertices:
        raise CapExceeded(f"n={H.n} above identity cap {caps.identity_vertices}")
    failed = [
        [x, y] for x, y in itertools.product(range(4), repeat=2) if not chromatic.check_exponential_identity(H, x, y)
    ]
    return not failed, {"failed_pairs": failed}


def _bounded_expo(H, caps):
    if H.n > caps.expo_vertices:
        raise CapExceeded(f"n={H.n} above bounded-expo cap {caps.expo_vertices}")
    worst = None
    ok = True
    for v in range(H.n):
        for s in range(1, min(H.n, caps.expo_max_s) + 1):
            rep = penrose.bounded_expo_check(H, v, s, caps.expo_vertices)
            ok &= rep.ok
            if worst is None or rep.lhs > worst[0]:
                worst = (rep.lhs, v, s, rep.bound_rhs)
    detail = {}
    if worst is not None:
        detail = {"max_lhs": str(worst[0]), "at_v": worst[1], "at_s": worst[2], "rhs_there": worst[3][:24]}
    return ok, detail


def _rank_consistency(H, caps):
    if H.num_edges > caps.subset_edges:
        raise CapExceeded(f"{H.num_edges} edges above subset cap {caps.subset_edges}")
    prof = matroid.partition_profile(H, caps.partition)
    table = matroid.forest_table(H)
    mismatches = 0
    for Z in range(1 << H.num_edges):
        r = prof.rank(Z)[0]
        if r != matroid.rank_oracle_bruteforce(H, Z):
            mismatches += 1
        if bool(table[Z]) != (r == popcount(Z)):
            mismatches += 1
    pc = prof.is_partition_connected(H.full_mask)
    pc_rank = prof.rank(H.full_mask)[0] == H.n - 1
    return mismatches == 0 and pc == pc_rank, {
        "mismatches": mismatches,
        "partition_connected": pc,
        "rank_E": prof.rank(H.full_mask)[0],
    }


def _hyperforest_bound(H, caps):
    if H.num_edges > caps.subset_edges:
        raise CapExceeded(f"{H.num_edges} edges above subset cap {caps.subset_edges}")
    table = matroid.forest_table(H)
    largest = max(popcount(F) for F in range(1 << H.num_edges) if table[F])
    r = matroid.rank(H, H.full_mask, caps.partition).rank
    limit = max(H.n - 1, 0)
    return largest <= limit and r <= limit, {"largest_hyperforest": largest, "rank_E": r}


def _euler(H, caps):
    if H.num_edges > caps.subset_edges:
        raise CapExceeded(f"{H.num_edges} edges above subset cap {caps.subset_edges}")
    r = matroid.rank_oracle(H, caps.partition)
    primal = matroid.euler_inequality_check(r, H.num_edges)
    dual = matroid.euler_inequality_check(matroid.dual_rank_oracle(r, H.num_edges), H.num_edges)
    return primal.ok and dual.ok, {
        "primal": [primal.lhs, primal.basis_count],
        "dual": [dual.lhs, dual.basis_count],
    }


def _root_bounds(H, caps):
    P = chromatic.chromatic_polynomial_auto(H, caps.edges, caps.partition)
    rep = roots.check_root_bound(H, P=P)
    residual = max((r.residual for r in rep.roots), default=0.0)
    return rep.ok, {
        "max_modulus": rep.max_modulus,
        "bound_cR": rep.bound_cR,
        "bound_8etD": rep.bound_8etD,
        "max_residual": residual,
        "root_count": len(rep.roots),
    }


def _structure(H, caps):
    if H.num_edges > caps.class_edges or H.n > caps.class_vertices:
        raise CapExceeded("instance above equivalence-class caps")
    rep = penrose.structure_report(H, caps.class_edges)
    return rep.ok, rep.to_dict()


_RUNNERS = {
    "penrose": _penrose,
    "expo_identity": _expo_identity,
    "bounded_expo": _bounded_expo,
    "rank_consistency": _rank_consistency,
    "hyperforest_bound": _hyperforest_bound,
    "euler_inequality": _euler,
    "root_bounds": _root_bounds,
    "structure_theorem": _structure,
}


def run_check(name: str, H: Hypergraph, caps: Caps = Caps()) -> dict:
    """Run one named check; returns a record with a ``status`` of ok/fail/skipped: cap."""
    try:
        ok, detail = _RUNNERS[name](H, caps)
    except CapExceeded as exc:
        return {"status": "skipped: cap", "reason": str(exc)}
    except (matroid.TheoremViolation, penrose.UndecidedComparison, roots.RootFindingError) as exc:
        return {"status": "fail", "error": f"{type(exc).__name__}: {exc}"}
    return {"status": "ok" if ok else "fail", **detail}


def verify_instance(inst: Instance, checks=CHECKS, caps: Caps = Caps()) -> dict:
    H = inst.H
    records = {name: run_check(name, H, caps) for name in checks}
    statuses = [r["status"] for r in records.values()]
    return {
        "instance_id": inst.instance_id,
        "seed": inst.seed,
        "n": H.n,
        "t": H.uniformity,
        "D": H.max_degree,
        "num_edges": H.num_edges,
        "hypergraph": H.to_dict(),
        "checks": records,
        "violation": "fail" in statuses,
        "ok": all(s == "ok" for s in statuses),
    }


# ------------------------------------------------------------------ instance families


def derive_seeds(seed: int, count: int) -> list[int]:
    rng = random.Random(seed)
    return [rng.getrandbits(63) for _ in range(count)]


def exhaustive_instances(n: int, t: int) -> list[Instance]:
    return [Instance(f"exh-n{n}-t{t}-{i:05d}", H) for i, H in enumerate(exhaustive_uniform(n, t))]


def random_instances(n: int, t: int, p: float, seed: int, count: int) -> list[Instance]:
    return [
        Instance(f"rand-n{n}-t{t}-{i:04d}", generate("random_uniform", n=n, t=t, p=p, seed=s), s)
        for i, s in enumerate(derive_seeds(seed, count))
    ]


def random_suite(seed: int, count: int, max_n: int = 7, max_edges: int = 10, ts=(2, 3, 4)) -> list[Instance]:
    """Seeded mixed suite: t from ``ts``, n in ``t..max_n``, at most ``max_edges`` edges.

    Each instance is a ``random_uniform`` draw whose sub-seed is recorded;
    draws with too many edges are redrawn with the next sub-seed.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        t = rng.choice(ts)
        n = rng.randint(t, max_n)
        p = rng.choice((0.15, 0.3, 0.5, 0.7))
        sub = rng.getrandbits(63)
        try:
            H = generate("random_uniform", n=n, t=t, p=p, seed=sub)
        except HypergraphError:
            continue
        if H.num_edges > max_edges:
            continue
        out.append(Instance(f"suite-{len(out):04d}", H, sub))
    return out


def sized_suite(seed: int, count: int, n_range=(4, 6), edge_range=(3, 8), ts=(2, 3, 4)) -> list[Instance]:
    """Seeded t-uniform instances with an exact edge count drawn from ``edge_range``.

    Each instance draws its edges with ``random.Random(sub_seed).sample``
    over the lexicographic list of t-subsets; the sub-seed is recorded.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        t = rng.choice(ts)
        n = rng.randint(max(t, n_range[0]), n_range[1])
        m = rng.randint(*edge_range)
        sub = rng.getrandbits(63)
        pool = list(itertools.combinations(range(n), t))
        if m > len(pool):
            continue
        edges = random.Random(sub).sample(pool, m)
        out.append(Instance(f"sized-{len(out):04d}", Hypergraph.from_edges(n, edges), sub))
    return out
