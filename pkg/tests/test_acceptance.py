"""Acceptance suite: one test per criterion, each recording a pass/fail line.

Run with ``pytest tests/test_acceptance.py`` (the lines are printed in the
terminal summary) or directly with ``python tests/test_acceptance.py``.
All comparisons are exact except root residuals (<= 1e-8) and the
transcendental right-hand sides, which are evaluated to 60 digits.
"""

import itertools
import subprocess
import sys
import time
from functools import lru_cache


from hyperchrom import matroid, penrose, roots
from hyperchrom.chromatic import chromatic_polynomial, chromatic_polynomial_auto, check_exponential_identity, count_proper_colorings
from hyperchrom.hypercore import Hypergraph, complete_uniform, exhaustive_uniform, popcount, tight_cycle
from hyperchrom.suite import random_suite, sized_suite

SEED = 20260601
RESULTS = {}


def record(num, name, ok, detail, started):
    RESULTS[num] = f"[{'PASS' if ok else 'FAIL'}] {num:2d} {name}: {detail} ({time.perf_counter() - started:.1f}s)"
    assert ok, RESULTS[num]


@lru_cache(maxsize=None)
def exhaustive_n5():
    return tuple(exhaustive_uniform(5, 3))


@lru_cache(maxsize=None)
def small_graphs():
    return tuple(G for n in range(2, 6) for G in exhaustive_uniform(n, 2))


@lru_cache(maxsize=None)
def suite200():
    return tuple(inst.H for inst in random_suite(SEED, 200))


@lru_cache(maxsize=None)
def graph_suite():
    # graphs on 6 and 7 vertices to go with the exhaustive graphs on <= 5
    return tuple(inst.H for inst in random_suite(SEED + 1, 120, max_n=7, max_edges=14, ts=(2,)) if inst.H.n >= 6)


@lru_cache(maxsize=None)
def dense_suite():
    # the random suite is sparse on average; these have 3 to 10 edges
    return tuple(inst.H for inst in sized_suite(SEED + 2, 100, n_range=(4, 7), edge_range=(3, 10)))


def all_suites():
    return exhaustive_n5() + small_graphs() + suite200() + graph_suite() + dense_suite()


def test_01_oracle_equivalence():
    t0 = time.perf_counter()
    bad = []
    instances = exhaustive_n5() + suite200() + dense_suite()
    for i, H in enumerate(instances):
        P = chromatic_polynomial(H)
        for q in range(7):
            if P(q) != count_proper_colorings(H, q):
                bad.append((i, q))
    record(1, "oracle equivalence", not bad, f"{len(instances)} instances x q=0..6, {len(bad)} mismatches", t0)


def test_02_exponential_identity():
    t0 = time.perf_counter()
    instances = [H for H in suite200() if H.n <= 6]
    bad = [
        (i, x, y)
        for i, H in enumerate(instances)
        for x, y in itertools.product(range(4), repeat=2)
        if not check_exponential_identity(H, x, y)
    ]
    record(2, "exponential identity", not bad, f"{len(instances)} instances x 16 pairs, {len(bad)} failures", t0)


def test_03_penrose_inequality():
    t0 = time.perf_counter()
    instances = exhaustive_n5() + small_graphs()
    bad = [i for i, H in enumerate(instances) if not penrose.penrose_check(H).ok]
    record(3, "|a1| <= N(H)", not bad, f"{len(instances)} instances, {len(bad)} violations", t0)


def _rank_instances():
    out = []
    for n in range(2, 6):
        for t in range(2, n + 1):
            out.extend(H for H in exhaustive_uniform(n, t) if H.num_edges <= 6)
    out.extend(H for H in suite200() if H.n <= 5 and H.num_edges <= 6)
    return out


def test_04_rank_consistency():
    t0 = time.perf_counter()
    instances = _rank_instances()
    bad = 0
    subsets = 0
    for H in instances:
        prof = matroid.partition_profile(H)
        for Z in range(1 << H.num_edges):
            subsets += 1
            r = prof.rank(Z)[0]
            if r != matroid.rank_oracle_bruteforce(H, Z):
                bad += 1
            if matroid.is_hyperforest(H, Z) != (r == popcount(Z)):
                bad += 1
    record(4, "rank formula = brute force", bad == 0, f"{len(instances)} instances, {subsets} subsets, {bad} mismatches", t0)


def test_05_hyperforest_bound():
    t0 = time.perf_counter()
    bad = []
    instances = all_suites() + tuple(_rank_instances())
    for i, H in enumerate(instances):
        table = matroid.forest_table(H)
        largest = max(popcount(F) for F in range(1 << H.num_edges) if table[F])
        r = matroid.rank(H, H.full_mask).rank
        if largest > H.n - 1 or r > H.n - 1:
            bad.append(i)
    record(5, "hyperforest size and rank <= |V|-1", not bad, f"{len(instances)} instances, {len(bad)} violations", t0)


def _circuit_candidates():
    # every edge set with |E| = |V|: mixed edge sizes for n <= 5, uniform for n = 6
    for n in range(2, 6):
        pool = [c for t in range(2, n + 1) for c in itertools.combinations(range(n), t)]
        for edges in itertools.combinations(pool, n):
            yield Hypergraph.from_edges(n, edges)
    for t in range(2, 7):
        for edges in itertools.combinations(itertools.combinations(range(6), t), 6):
            yield Hypergraph.from_edges(6, edges)


def test_06_partition_connectivity():
    t0 = time.perf_counter()
    bad = []
    instances = all_suites()
    for i, H in enumerate(instances):
        if matroid.is_partition_connected(H) != (matroid.rank(H, H.full_mask).rank == H.n - 1):
            bad.append(("rank", i))
    circuits = 0
    for H in _circuit_candidates():
        if matroid._is_circuit_masks(H.full_mask, H.edge_masks):
            circuits += 1
            if not matroid.is_partition_connected(H):
                bad.append(("circuit", H.edges))
    record(
        6,
        "partition-connected <=> full rank; circuits are partition-connected",
        not bad,
        f"{len(instances)} instances, {circuits} hypercircuits, {len(bad)} failures",
        t0,
    )


def test_07_maximal_bad_partition():
    t0 = time.perf_counter()
    bad = []
    checked = 0
    for i, H in enumerate(all_suites()):
        if H.n > 7 or matroid.is_partition_connected(H):
            continue
        checked += 1
        try:
            rec = matroid.maximal_bad_partition(H, verify=True)
        except matroid.TheoremViolation as exc:
            bad.append((i, str(exc)))
            continue
        if rec is None or rec.parts != tuple(matroid.partition_connected_decomposition(H)):
            bad.append((i, "mismatch"))
    record(7, "unique maximal bad partition = decomposition", not bad, f"{checked} non-partition-connected instances, {len(bad)} failures", t0)


def test_08_structure_theorem():
    t0 = time.perf_counter()
    instances = [inst.H for inst in sized_suite(SEED + 8, 50, n_range=(4, 6), edge_range=(3, 8))]
    bad = []
    classes = 0
    for i, H in enumerate(instances):
        rep = penrose.structure_report(H)
        classes += rep.classes
        if not rep.ok:
            bad.append((i, rep.failures[:3]))
    record(8, "structure theorem and class Euler inequality", not bad, f"50 instances, {classes} classes, {len(bad)} failures", t0)


def test_09_bounded_exponential_type():
    t0 = time.perf_counter()
    bad = []
    checks = 0
    for i, H in enumerate(all_suites()):
        for v in range(H.n):
            for s in range(1, min(H.n, 6) + 1):
                checks += 1
                if not penrose.bounded_expo_check(H, v, s).ok:
                    bad.append((i, v, s))
    record(9, "bounded exponential type", not bad, f"{checks} (H, v, s) triples, {len(bad)} violations", t0)


def test_10_sokal_tree_sum():
    t0 = time.perf_counter()
    graphs = small_graphs() + graph_suite() + tuple(H for H in suite200() if H.is_graph)
    graphs += tuple(complete_uniform(n, 2) for n in range(2, 8))
    bad = []
    checks = 0
    for i, G in enumerate(graphs):
        for v in range(G.n):
            checks += 1
            if not penrose.sokal_tree_sum_check(G, v).ok:
                bad.append((i, v))
    record(10, "tree-sum bound", not bad, f"{len(graphs)} graphs, {checks} roots v, {len(bad)} violations", t0)


def test_11_root_bounds():
    t0 = time.perf_counter()
    extra = tuple(complete_uniform(n, 3) for n in range(3, 8))
    extra += tuple(tight_cycle(n, t) for n in range(3, 13) for t in (2, 3, 4) if n > t)
    bad = []
    worst_residual = 0.0
    worst_ratio = 0.0
    instances = all_suites() + extra
    for i, H in enumerate(instances):
        P = chromatic_polynomial_auto(H)
        try:
            rep = roots.check_root_bound(H, tol=1e-8, P=P)
        except roots.RootFindingError as exc:
            bad.append((i, str(exc)))
            continue
        worst_residual = max([worst_residual] + [r.residual for r in rep.roots])
        if rep.bound_cR:
            worst_ratio = max(worst_ratio, rep.max_modulus / rep.bound_cR)
        if len(rep.roots) != P.degree or not rep.ok or rep.bound_cR > rep.bound_8etD:
            bad.append((i, "bound"))
    record(
        11,
        "root moduli <= 7.04 etD <= 8 etD",
        not bad and worst_residual <= 1e-8,
        f"{len(instances)} instances, max |z|/(7.04 etD) = {worst_ratio:.4f}, max residual {worst_residual:.1e}",
        t0,
    )


def test_12_determinism(tmp_path):
    t0 = time.perf_counter()
    outputs = {}
    for workers in (1, 8):
        target = tmp_path / f"w{workers}.json"
        subprocess.run(
            [sys.executable, "-m", "hyperchrom", "verify", "--family", "suite", "--seed", str(SEED),
             "--count", "200", "--check", "all", "--workers", str(workers), "--out", str(target)],
            check=False,
        )
        outputs[workers] = target.read_bytes() if target.exists() else b""
    same = bool(outputs[1]) and outputs[1] == outputs[8]
    record(12, "verify output independent of worker count", same, f"{len(outputs[1])} bytes, identical={same}", t0)


if __name__ == "__main__":
    import tempfile
    from pathlib import Path

    failed = 0
    for name, fn in sorted(globals().items()):
        if not name.startswith("test_") or not callable(fn):
            continue
        try:
            if "tmp_path" in fn.__code__.co_varnames[: fn.__code__.co_argcount]:
                with tempfile.TemporaryDirectory() as d:
                    fn(Path(d))
            else:
                fn()
        except AssertionError:
            failed += 1
        num = int(name.split("_")[1])
        print(RESULTS.get(num, f"[FAIL] {num:2d} {name}: raised before recording"))
    sys.exit(1 if failed else 0)
