import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import hypergraph_and_partition, rng
from hyperpart import Hypergraph, ParameterError, Partition, cost
from hyperpart.gadgets import twostep_counterexample, twostep_cost_formula
from hyperpart.hierarchy import (HierPartition, HierTopology, contract_partition,
                                 count_assignments, enumerate_assignments, hierarchical_cost,
                                 hierarchical_optimum_bruteforce, optimal_assignment_bruteforce,
                                 optimal_assignment_matching, sibling_permutations, two_step)
from hyperpart.solvers import brute_force_optimum
from hyperpart.verify import random_hypergraph

T22 = HierTopology((2, 2), (4, 1))


def ident(p):
    return HierPartition(p, tuple(range(p.k)))


class TestTopology:
    def test_validation(self):
        with pytest.raises(ParameterError):
            HierTopology((2, 1), (2, 1))
        with pytest.raises(ParameterError):
            HierTopology((2, 2), (1, 2))
        with pytest.raises(ParameterError):
            HierTopology((2, 2), (3, 2))
        with pytest.raises(ParameterError):
            HierTopology((2,), (2, 1))

    def test_leaf_bijection(self):
        with pytest.raises(ParameterError):
            HierPartition(Partition(2, [0, 1]), (0, 0))


class TestCost:
    @pytest.mark.parametrize("g1", [1, 2, 4, Fraction(7, 2)])
    def test_all_leaves(self, g1):
        T = HierTopology((2, 2), (g1, 1))
        h = Hypergraph(4, [(0, 1, 2, 3)])
        assert hierarchical_cost(h, ident(Partition(4, [0, 1, 2, 3])), T) == g1 + 2

    def test_same_subtree(self):
        h = Hypergraph(2, [(0, 1)])
        assert hierarchical_cost(h, ident(Partition(4, [0, 1])), T22) == 1
        assert hierarchical_cost(h, ident(Partition(4, [0, 2])), T22) == 4

    def test_monochromatic(self):
        h = Hypergraph(3, [(0, 1, 2)], [7])
        assert hierarchical_cost(h, ident(Partition(4, [3, 3, 3])), T22) == 0

    @given(hypergraph_and_partition(max_k=5))
    def test_single_level_is_connectivity(self, hp):
        h, p = hp
        T = HierTopology((p.k,), (1,))
        assert hierarchical_cost(h, ident(p), T) == cost(h, p, "conn")


class TestContract:
    def test_uncut_dropped_and_merged(self):
        h = Hypergraph(5, [(0, 1), (2, 3), (0, 2), (1, 3)], [1, 1, 1, 1])
        p = Partition(2, [0, 0, 1, 1, 1])
        hc = contract_partition(h, p)
        assert hc.n == 2 and hc.edges == ((0, 1),) and hc.weights == (2,)

    @settings(max_examples=150)
    @given(hypergraph_and_partition(max_k=4), st.data())
    def test_cost_identity(self, hp, data):
        h, p = hp
        if p.k != 4:
            p = Partition(4, [a % 4 for a in p.assign])
        leaf_of = tuple(data.draw(st.permutations(range(4))))
        hc = contract_partition(h, p)
        a = hierarchical_cost(h, HierPartition(p, leaf_of), T22)
        b = hierarchical_cost(hc, HierPartition(Partition(4, range(4)), leaf_of), T22)
        assert a == b


class TestAssignments:
    @pytest.mark.parametrize("b,expected", [((2, 2), 3), ((2, 3), 10), ((3, 2), 15),
                                            ((5,), 1), ((2, 2, 2), 315)])
    def test_counts(self, b, expected):
        T = HierTopology(b, (len(b),) * (len(b) - 1) + (1,))
        assert count_assignments(T) == expected
        assert len(enumerate_assignments(T)) == expected

    @pytest.mark.parametrize("b", [(2, 2), (2, 3), (3, 2), (2, 2, 2), (4, 2)])
    def test_classes_are_distinct_and_complete(self, b):
        T = HierTopology(b, (len(b),) * (len(b) - 1) + (1,))
        reps = enumerate_assignments(T)
        sigmas = sibling_permutations(T)
        seen = set()
        for leaf_of in reps:
            orbit = {tuple(s[x] for x in leaf_of) for s in sigmas}
            assert min(orbit) == leaf_of
            assert not orbit & seen
            seen |= orbit
        assert len(seen) == math.factorial(T.k)

    def test_k2_single_assignment(self):
        T = HierTopology((2,), (1,))
        h = Hypergraph(3, [(0, 1, 2)])
        p = Partition(2, [0, 1, 1])
        hp, c = optimal_assignment_bruteforce(h, p, T)
        assert c == hierarchical_cost(h, ident(p), T) == 1

    def test_matching_example(self):
        h = Hypergraph(4, [(0, 1), (2, 3), (0, 2)], [5, 5, 1])
        hp, c = optimal_assignment_matching(h, None, T22)
        assert hp.leaf_of == (0, 1, 2, 3)
        # pair edges pay g2 = 1 each, the cross edge pays g1 = 4
        assert c == 5 + 5 + 4

    def test_matching_zero_weights(self):
        hp, c = optimal_assignment_matching(Hypergraph(6), None, HierTopology((3, 2), (2, 1)))
        assert hp.leaf_of == tuple(range(6)) and c == 0

    def test_matching_needs_pairs(self):
        with pytest.raises(ParameterError):
            optimal_assignment_matching(Hypergraph(6), None, HierTopology((2, 3), (2, 1)))

    @pytest.mark.parametrize("seed", range(60))
    def test_matching_equals_bruteforce(self, seed):
        r = rng(seed)
        k = r.choice((4, 6, 8))
        T = HierTopology((k // 2, 2), (r.choice((2, 3, 5)), 1))
        h = random_hypergraph(r, k, r.randint(1, 10), min(5, k), 4)
        _, a = optimal_assignment_matching(h, None, T)
        _, b = optimal_assignment_bruteforce(h, Partition(k, range(k)), T)
        assert a == b


class TestTwoStep:
    @pytest.mark.parametrize("seed", range(12))
    def test_approximation(self, seed):
        r = rng(seed)
        g1 = r.choice((2, 4))
        T = HierTopology((2, 2), (g1, 1))
        h = random_hypergraph(r, r.randint(4, 8), r.randint(1, 6), 4)
        _, two, _ = two_step(h, T, 0, mode="relaxed-ceil")
        _, opt = hierarchical_optimum_bruteforce(h, T, _relaxed())
        assert opt <= two <= g1 * opt

    def test_single_level(self):
        h = random_hypergraph(rng(9), 8, 6, 3)
        T = HierTopology((4,), (1,))
        _, c, std = two_step(h, T, 0)
        assert c == std == brute_force_optimum(h, 0, "conn", 4).cost

    def test_counterexample(self):
        inst = twostep_counterexample()
        cert = inst.certificate
        m = cert["m"]
        T = inst.topology
        assert cert["twostep_cost"] == m * (2 * 4 + 1) == twostep_cost_formula(T, m)
        assert cert["standard_optimum"] == 3 * m
        assert cert["hier_optimum"] == 3 * m + cert["extra"]
        ratio = cert["twostep_cost"] / cert["hier_optimum"]
        assert ratio == Fraction(9, 3 + Fraction(cert["extra"], m))
        assert ratio >= Fraction(4, 2)
        # the planted hierarchical partition attains the claimed optimum
        hp = inst.aux["hier_planted"]
        assert hierarchical_cost(inst.h, hp, T) == cert["hier_optimum"]
        # the standard optimum's best assignment really pays the two-step cost
        _, c = optimal_assignment_bruteforce(inst.h, inst.planted, T)
        assert cost(inst.h, inst.planted, "conn") == cert["standard_optimum"]
        assert c == cert["twostep_cost"]


def _relaxed():
    from hyperpart import BalanceSpec
    return BalanceSpec.single(0, "relaxed-ceil")
