import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperchrom.chromatic import a1
from hyperchrom.hypercore import CapExceeded, Hypergraph, complete_uniform, exhaustive_uniform, single_edge
from hyperchrom.penrose import (
    UndecidedComparison,
    a1_signed_sum,
    bareiss_determinant,
    bounded_expo_check,
    count_connected_spanning_hyperforests,
    equivalence_classes,
    penrose_check,
    power_bound,
    sokal_tree_sum_check,
    structure_report,
    tau,
    verify_structure_theorem,
)

import oracles
from strategies import hypergraphs


def rhs_value(report):
    return float(report.bound_rhs)


class TestA1AndForests:
    def test_examples(self, two_triples, K3):
        assert a1_signed_sum(two_triples) == 1
        assert a1_signed_sum(K3) == 2
        assert a1_signed_sum(Hypergraph(1)) == 1

    def test_forest_counts(self, K3, two_triples, triple):
        assert count_connected_spanning_hyperforests(K3) == 3
        assert count_connected_spanning_hyperforests(two_triples) == 1
        assert count_connected_spanning_hyperforests(triple) == 1

    @settings(max_examples=60, deadline=None)
    @given(hypergraphs(max_n=6, max_edges=7, uniform=False))
    def test_match_oracles_and_polynomial(self, H):
        assert a1_signed_sum(H) == oracles.a1_connected_sum(H.n, H.edges) == a1(H)
        assert count_connected_spanning_hyperforests(H) == oracles.connected_forests(H.n, H.edges)

    def test_cap(self):
        with pytest.raises(CapExceeded):
            a1_signed_sum(complete_uniform(7, 3))


class TestPenroseCheck:
    def test_triangle(self, K3):
        rep = penrose_check(K3)
        assert (rep.lhs, rep.bound_rhs, rep.ok) == (2, "3", True)

    def test_two_triples(self, two_triples):
        rep = penrose_check(two_triples)
        assert (rep.lhs, rep.bound_rhs, rep.ok) == (1, "1", True)

    @pytest.mark.parametrize("n", [2, 3, 5])
    def test_edgeless(self, n):
        rep = penrose_check(Hypergraph(n))
        assert (rep.lhs, rep.bound_rhs, rep.ok) == (0, "0", True)

    def test_report_serializes(self, K3):
        doc = penrose_check(K3).to_dict()
        assert doc["a1"] == "2" and doc["n_forests"] == "3" and doc["ok"] is True

    @settings(max_examples=60, deadline=None)
    @given(hypergraphs(max_n=6, max_edges=8, uniform=False))
    def test_holds(self, H):
        assert penrose_check(H).ok


class TestTau:
    def test_examples(self, K3, path3):
        assert tau(K3) == 3
        assert tau(Hypergraph(1)) == 1
        assert tau(path3) == 1

    def test_disconnected(self, two_edges):
        assert tau(two_edges) == 0

    def test_complete_graph_cayley(self):
        assert tau(Hypergraph(1)) == 1
        for n in range(2, 8):
            assert tau(complete_uniform(n, 2)) == n ** (n - 2)

    def test_rejects_hyperedges(self, triple):
        with pytest.raises(ValueError):
            tau(triple)

    @settings(max_examples=60, deadline=None)
    @given(hypergraphs(max_n=6, max_edges=9, ts=(2,)))
    def test_matches_enumeration(self, G):
        assert tau(G) == oracles.spanning_trees(G.n, G.edges)

    def test_bareiss(self):
        assert bareiss_determinant([]) == 1
        assert bareiss_determinant([[0, 1], [1, 0]]) == -1
        assert bareiss_determinant([[2, 0, 1], [1, 3, 2], [1, 1, 2]]) == 6
        assert bareiss_determinant([[1, 2], [2, 4]]) == 0


class TestPowerBound:
    def test_exact_edges(self):
        assert power_bound(1, 5, 0) == (True, "1")
        assert power_bound(2, 5, 0) == (False, "1")
        assert power_bound(0, 0, 3) == (True, "0")

    def test_precision(self):
        ok, text = power_bound(29, 2, 2)
        assert ok and text.startswith("29.556")
        assert not power_bound(30, 2, 2)[0]

    def test_undecided_is_raised_not_guessed(self, monkeypatch):
        import hyperchrom.penrose as pen

        # with 11 digits the slack is 10% of e^2 = 7.389..., which swallows 7
        monkeypatch.setattr(pen, "RHS_DIGITS", 11)
        with pytest.raises(UndecidedComparison):
            pen.power_bound(7, 1, 2)


class TestSokal:
    def test_triangle(self, K3):
        rep = sokal_tree_sum_check(K3, 0)
        assert rep.lhs == 6 and rep.ok
        assert abs(rhs_value(rep) - (2 * math.e) ** 2) < 1e-9
        assert rep.tau_values == {(0,): 1, (0, 1): 1, (0, 2): 1, (0, 1, 2): 3}

    def test_single_vertex(self):
        rep = sokal_tree_sum_check(Hypergraph(1), 0)
        assert (rep.lhs, rep.bound_rhs, rep.ok) == (1, "1", True)

    def test_path_middle(self, path3):
        rep = sokal_tree_sum_check(path3, 1)
        assert rep.lhs == 4 and rep.ok

    def test_isolated_vertex_uses_its_component(self):
        rep = sokal_tree_sum_check(Hypergraph(3), 1)
        assert rep.lhs == 1 and rep.ok and rep.details["component_size"] == 1

    @settings(max_examples=40, deadline=None)
    @given(hypergraphs(max_n=7, max_edges=12, ts=(2,)), st.data())
    def test_holds(self, G, data):
        v = data.draw(st.integers(0, G.n - 1))
        rep = sokal_tree_sum_check(G, v)
        assert rep.ok and rep.details["per_size_ok"]


class TestBoundedExpo:
    def test_triangle(self, K3):
        rep = bounded_expo_check(K3, 0, 3)
        assert rep.lhs == 2 and rep.ok
        # (e * t * D)^(s-1) with t = 2, D = 2
        assert abs(rhs_value(rep) - (4 * math.e) ** 2) < 1e-9

    def test_triple(self, triple):
        rep = bounded_expo_check(triple, 0, 3)
        assert rep.lhs == 1 and rep.ok
        assert abs(rhs_value(rep) - (3 * math.e) ** 2) < 1e-9

    def test_size_one(self, tc43):
        rep = bounded_expo_check(tc43, 2, 1)
        assert (rep.lhs, rep.bound_rhs, rep.ok) == (1, "1", True)

    def test_bad_size(self, K3):
        with pytest.raises(ValueError):
            bounded_expo_check(K3, 0, 4)

    def test_rhs_carries_enough_digits(self, K3):
        rep = bounded_expo_check(K3, 0, 3)
        assert len(rep.bound_rhs.replace(".", "")) >= 50

    @settings(max_examples=30, deadline=None)
    @given(hypergraphs(max_n=7, max_edges=8, uniform=False), st.data())
    def test_holds(self, H, data):
        v = data.draw(st.integers(0, H.n - 1))
        s = data.draw(st.integers(1, min(H.n, 6)))
        assert bounded_expo_check(H, v, s).ok


class TestEquivalenceClasses:
    def test_edgeless(self):
        classes = equivalence_classes(Hypergraph(2))
        assert len(classes) == 1
        assert classes[0].key == (((0,), (1,)), 0) and classes[0].members == [0]

    def test_triangle(self, K3):
        classes = {c.key: c.members for c in equivalence_classes(K3)}
        # partition-connected subsets: the three spanning trees and the full triangle
        assert classes[(((0, 1, 2),), 0)] == [0b011, 0b101, 0b110, 0b111]
        assert classes[(((0,), (1,), (2,)), 0)] == [0]
        assert len(classes) == 5

    def test_two_triples(self, two_triples):
        keys = {c.key for c in equivalence_classes(two_triples)}
        # not partition-connected: both edges are bad edges of the singleton partition
        assert (tuple((v,) for v in range(5)), 0b11) in keys

    def test_members_partition_the_subsets(self, tc43):
        members = sorted(m for c in equivalence_classes(tc43) for m in c.members)
        assert members == list(range(16))


class TestStructure:
    def test_triangle(self, K3):
        rep = structure_report(K3)
        assert rep.ok and rep.classes == 5
        full = next(c for c in equivalence_classes(K3) if c.members[-1] == 0b111)
        assert full.basis_members == [0b011, 0b101, 0b110]

    def test_edgeless(self):
        assert verify_structure_theorem(Hypergraph(3))

    def test_fixed_random_instance(self):
        from hyperchrom.hypercore import random_uniform

        seed = next(s for s in itertools.count() if random_uniform(5, 3, 0.5, s).num_edges == 5)
        assert verify_structure_theorem(random_uniform(5, 3, 0.5, seed))

    def test_exhaustive_small(self):
        for H in itertools.islice(exhaustive_uniform(4, 3), 16):
            assert verify_structure_theorem(H)

    @settings(max_examples=25, deadline=None)
    @given(hypergraphs(max_n=6, max_edges=7, uniform=False))
    def test_holds(self, H):
        rep = structure_report(H)
        assert rep.ok, rep.failures
        assert rep.class_sum_total >= abs(rep.a1)
        assert rep.connected_basis_total == rep.n_forests

    def test_single_edge(self):
        assert verify_structure_theorem(single_edge(4))
