import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import hypergraph_and_partition, hypergraphs, rng
from hyperpart import (RELAXED, STRICT, BalanceSpec, Constraint, CostMetric, Hypergraph,
                       NotMergeable, ParameterError, Partition, cost, is_balanced, lambda_e,
                       merge_smallest_parts, nonempty_part_bounds, threshold,
                       to_bisection_instance)
from hyperpart.hierarchy import iter_balanced_assignments
from hyperpart.solvers import brute_force_optimum
from hyperpart.verify import random_hypergraph


def split(n, sizes):
    return Partition(len(sizes), [i for i, s in enumerate(sizes) for _ in range(s)])


class TestLambdaAndCost:
    def test_lambda_examples(self):
        h = Hypergraph(3, [(0, 1, 2), (0, 1)])
        assert lambda_e(h, Partition(2, [0, 0, 1]), 0) == 2
        assert lambda_e(h, Partition(2, [0, 0, 1]), 1) == 1
        assert lambda_e(h, Partition(3, [0, 1, 2]), 0) == 3

    def test_lambda_bad_index(self):
        with pytest.raises(ParameterError):
            lambda_e(Hypergraph(2, [(0, 1)]), Partition(2, [0, 1]), 1)

    def test_connectivity_of_lambda_four(self):
        h = Hypergraph(4, [(0, 1, 2, 3)])
        assert cost(h, Partition(4, [0, 1, 2, 3]), CostMetric.CONN) == 3
        assert cost(h, Partition(4, [0, 1, 2, 3]), CostMetric.CUTNET) == 1

    def test_cutnet_counts_cut_edges(self):
        h = Hypergraph(4, [(0, 1), (2, 3), (0, 2)])
        assert cost(h, Partition(2, [0, 1, 0, 1]), "cutnet") == 2

    def test_weights(self):
        h = Hypergraph(3, [(0, 1, 2)], [5])
        assert cost(h, Partition(3, [0, 1, 2]), "conn") == 10

    def test_metric_aliases(self):
        assert CostMetric.parse("km1") is CostMetric.CONN
        assert CostMetric.parse("cut-net") is CostMetric.CUTNET
        with pytest.raises(ParameterError):
            CostMetric.parse("soed")

    @given(hypergraph_and_partition())
    def test_connectivity_dominates_cutnet(self, hp):
        h, p = hp
        assert cost(h, p, "conn") >= cost(h, p, "cutnet")

    @given(hypergraph_and_partition(max_k=2))
    def test_metrics_coincide_for_two_parts(self, hp):
        h, p = hp
        assert cost(h, p, "conn") == cost(h, p, "cutnet")

    @given(hypergraph_and_partition(), st.randoms(use_true_random=False))
    def test_label_permutation_invariance(self, hp, r):
        h, p = hp
        perm = list(range(p.k))
        r.shuffle(perm)
        q = p.relabel(perm)
        for metric in CostMetric:
            assert cost(h, p, metric) == cost(h, q, metric)


class TestHypergraph:
    def test_rejects_bad_input(self):
        with pytest.raises(ParameterError):
            Hypergraph(2, [()])
        with pytest.raises(ParameterError):
            Hypergraph(2, [(0, 2)])
        with pytest.raises(ParameterError):
            Hypergraph(2, [(0, 1)], [0])

    def test_pins_sorted_and_deduplicated(self):
        h = Hypergraph(3, [(2, 0, 2)])
        assert h.edges == ((0, 2),)
        assert h.rho == 2

    def test_duplicates_compare_by_multiset(self):
        a = Hypergraph(3, [(0, 1), (0, 1)])
        b = Hypergraph(3, [(1, 0)], [2])
        assert a.same_edges(b)


class TestBalance:
    def test_threshold_modes(self):
        assert threshold(10, 0, 2) == 5
        assert threshold(5, 0, 2, STRICT) == 2
        assert threshold(5, 0, 2, RELAXED) == 3

    def test_examples(self):
        h = Hypergraph(10)
        assert is_balanced(h, split(10, (5, 5)), BalanceSpec.single(0))
        assert not is_balanced(h, split(10, (6, 4)), BalanceSpec.single(0))
        assert is_balanced(h, split(10, (6, 4)), BalanceSpec.single(Fraction(1, 5)))
        assert is_balanced(Hypergraph(5), split(5, (3, 2)), BalanceSpec.single(0, "relaxed-ceil"))
        assert not is_balanced(Hypergraph(5), split(5, (3, 2)), BalanceSpec.single(0))

    def test_float_epsilon_is_decimal(self):
        assert is_balanced(Hypergraph(10), split(10, (6, 4)), 0.2)

    def test_overlapping_subsets_rejected(self):
        with pytest.raises(ParameterError):
            BalanceSpec.multi([{0, 1}, {1, 2}])

    def test_subset_constraint(self):
        spec = BalanceSpec((Constraint(frozenset({0, 1})),))
        h = Hypergraph(4)
        assert is_balanced(h, Partition(2, [0, 1, 0, 0]), spec)
        assert not is_balanced(h, Partition(2, [0, 0, 1, 1]), spec)

    @given(hypergraph_and_partition(), st.sampled_from([0, Fraction(1, 4), Fraction(1, 3)]))
    def test_strict_implies_relaxed(self, hp, eps):
        h, p = hp
        if is_balanced(h, p, BalanceSpec.single(eps, STRICT)):
            assert is_balanced(h, p, BalanceSpec.single(eps, RELAXED))


class TestBisection:
    def test_padding_size(self):
        h = Hypergraph(10, [(0, 1)])
        out = to_bisection_instance(h, Fraction(1, 5))
        assert out.n == 12 and out.edges == h.edges

    def test_zero_epsilon_identity(self):
        h = Hypergraph(6, [(0, 1, 2), (3, 4)])
        assert to_bisection_instance(h, 0) == h

    @pytest.mark.parametrize("seed", range(20))
    def test_optimum_preserved(self, seed):
        r = rng(seed)
        h = random_hypergraph(r, r.randint(2, 8), r.randint(1, 6), 4)
        eps = Fraction(1, 4)
        src = brute_force_optimum(h, BalanceSpec.single(eps), "conn", 2)
        out = to_bisection_instance(h, eps)
        tgt = brute_force_optimum(out, BalanceSpec.single(0), "conn", 2)
        assert (src and src.cost) == (tgt and tgt.cost)


class TestMerge:
    def test_example(self):
        h = Hypergraph(8, [(0, 1), (1, 2, 3)])
        p = Partition(3, [0, 1, 2, 2, 2, 2, 2, 2])
        merged = merge_smallest_parts(h, p, BalanceSpec.single(Fraction(1, 4)))
        assert sorted(merged.sizes()) == [0, 2, 6]
        assert cost(h, merged) <= cost(h, p)

    def test_single_part_not_mergeable(self):
        with pytest.raises(NotMergeable):
            merge_smallest_parts(Hypergraph(3), Partition(2, [1, 1, 1]), BalanceSpec.single(1))

    def test_threshold_blocks_merge(self):
        with pytest.raises(NotMergeable):
            merge_smallest_parts(Hypergraph(4), Partition(2, [0, 0, 1, 1]), BalanceSpec.single(0))

    @settings(max_examples=200)
    @given(hypergraph_and_partition(max_k=4))
    def test_cost_never_increases(self, hp):
        h, p = hp
        try:
            merged = merge_smallest_parts(h, p, BalanceSpec.single(3))
        except NotMergeable:
            return
        for metric in CostMetric:
            assert cost(h, merged, metric) <= cost(h, p, metric)


class TestNonemptyBounds:
    def test_examples(self):
        assert nonempty_part_bounds(4, 1) == (3, False)
        assert nonempty_part_bounds(4, Fraction(1, 5))[1] is True
        assert nonempty_part_bounds(4, Fraction(1, 3))[1] is False

    def test_range(self):
        with pytest.raises(ParameterError):
            nonempty_part_bounds(3, 2)

    @pytest.mark.parametrize("seed", range(15))
    def test_some_optimum_uses_few_parts(self, seed):
        r = rng(seed)
        h = random_hypergraph(r, r.randint(3, 7), r.randint(1, 6), 3)
        k, eps = 3, Fraction(1)
        bound, _ = nonempty_part_bounds(k, eps)
        best = brute_force_optimum(h, BalanceSpec.single(eps), "conn", k).cost
        used = [len(set(a)) for a in iter_balanced_assignments(h, BalanceSpec.single(eps), k)
                if cost(h, Partition(k, a)) == best]
        assert min(used) <= bound
