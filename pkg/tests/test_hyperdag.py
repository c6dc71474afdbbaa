import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import hypergraphs, rng
from hyperpart import Hypergraph, ParameterError, Partition, is_balanced
from hyperpart.hyperdag import (Dag, Layering, dag_to_hyperdag, degenerate_layers,
                                densest_hyperdag, earliest_layering, enumerate_layerings,
                                is_hyperdag, is_hyperdag_oracle, is_layerwise_balanced,
                                layer_spec, longest_path_nodes, random_dag)


@st.composite
def dags(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    perm = draw(st.permutations(range(n)))
    return Dag(n, [(perm[u], perm[v]) for u, v in chosen])


class TestDag:
    def test_cycle_rejected(self):
        with pytest.raises(ParameterError):
            Dag(3, [(0, 1), (1, 2), (2, 0)])

    def test_self_loop_rejected(self):
        with pytest.raises(ParameterError):
            Dag(2, [(1, 1)])

    def test_parallel_arcs_collapse(self):
        assert Dag(2, [(0, 1), (0, 1)]).arcs == ((0, 1),)


class TestConversion:
    def test_chain(self):
        h, gens = dag_to_hyperdag(Dag(3, [(0, 1), (1, 2)]))
        assert h.edges == ((0, 1), (1, 2)) and gens == [0, 1]

    def test_fanout(self):
        h, _ = dag_to_hyperdag(Dag(3, [(0, 1), (0, 2)]))
        assert h.edges == ((0, 1, 2),)

    def test_star_single_edge(self):
        h, _ = dag_to_hyperdag(Dag(6, [(0, v) for v in range(1, 6)]))
        assert h.m == 1 and len(h.edges[0]) == 6

    @given(dags())
    def test_edge_count(self, d):
        h, _ = dag_to_hyperdag(d)
        assert h.m == d.n - len(d.sinks())


class TestRecognition:
    def test_triangle(self):
        h = Hypergraph(3, [(0, 1), (1, 2), (0, 2)])
        res = is_hyperdag(h)
        assert not res and res.residual == frozenset({0, 1, 2})
        assert not is_hyperdag_oracle(h)

    def test_path_hypergraph(self):
        h = Hypergraph(3, [(0, 1), (1, 2)])
        res = is_hyperdag(h)
        assert res
        assert dag_to_hyperdag(res.witness)[0].same_edges(h)

    def test_single_edge(self):
        assert is_hyperdag_oracle(Hypergraph(3, [(0, 1, 2)]))
        assert is_hyperdag(Hypergraph(3, [(0, 1, 2)]))

    def test_oracle_size_limit(self):
        with pytest.raises(ParameterError):
            is_hyperdag_oracle(Hypergraph(17))

    def test_exhaustive_small(self):
        for n in range(1, 5):
            subsets = [c for r in range(1, n + 1) for c in itertools.combinations(range(n), r)]
            for m in range(4):
                for edges in itertools.combinations(subsets, m):
                    h = Hypergraph(n, edges)
                    assert bool(is_hyperdag(h)) == is_hyperdag_oracle(h), edges

    @settings(max_examples=300)
    @given(hypergraphs(max_n=10, max_m=10, max_size=5, max_weight=1))
    def test_matches_oracle(self, h):
        assert bool(is_hyperdag(h)) == is_hyperdag_oracle(h)

    @settings(max_examples=200)
    @given(dags(max_n=10))
    def test_round_trip(self, d):
        h, _ = dag_to_hyperdag(d)
        res = is_hyperdag(h)
        assert res
        assert dag_to_hyperdag(res.witness)[0].same_edges(h)
        assert h.m <= d.n - 1 or d.n == 0

    def test_witness_generators_are_edge_pins(self):
        h, _ = dag_to_hyperdag(random_dag(12, 0.3, rng(3)))
        res = is_hyperdag(h)
        assert all(g in e for g, e in zip(res.generators, h.edges))

    def test_ops_linear_in_pins(self):
        ratios = []
        for n in (50, 200, 800):
            h, _ = dag_to_hyperdag(random_dag(n, 6 / n, rng(n)))
            ratios.append(is_hyperdag(h).ops / max(1, h.rho + h.n))
        assert max(ratios) < 20


class TestDensest:
    def test_degrees(self):
        assert sorted(densest_hyperdag(4).degrees()) == [1, 2, 3, 3]

    def test_two(self):
        assert densest_hyperdag(2).edges == ((0, 1),)

    def test_recognised(self):
        for m in range(2, 51):
            h = densest_hyperdag(m)
            assert is_hyperdag(h)
            assert all(d <= i + 1 for i, d in enumerate(sorted(h.degrees())))

    def test_too_small(self):
        with pytest.raises(ParameterError):
            densest_hyperdag(1)


class TestLayering:
    def test_diamond(self):
        d = Dag(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
        assert earliest_layering(d).layer == (1, 2, 2, 3)

    def test_chain(self):
        d = Dag(5, [(i, i + 1) for i in range(4)])
        assert earliest_layering(d).layer == (1, 2, 3, 4, 5)
        assert longest_path_nodes(d) == 5
        assert len(enumerate_layerings(Dag(3, [(0, 1), (1, 2)]))) == 1

    def test_floating_sink(self):
        d = Dag(4, [(0, 1), (1, 2), (0, 3)])
        layers = enumerate_layerings(d)
        assert sorted(L.layer[3] for L in layers) == [2, 3]
        assert earliest_layering(d).layer[3] == 2

    def test_cap(self):
        with pytest.raises(Exception):
            enumerate_layerings(Dag(12, [(0, 1), (1, 2)]), cap=5)

    @settings(max_examples=100)
    @given(dags(max_n=7))
    def test_earliest_is_pointwise_minimal(self, d):
        all_l = enumerate_layerings(d)
        first = earliest_layering(d)
        assert first in all_l
        for L in all_l:
            assert L.is_valid(d)
            assert all(a <= b for a, b in zip(first.layer, L.layer))
        assert len(set(all_l)) == len(all_l)

    def test_chain_layers_are_degenerate(self):
        d = Dag(4, [(0, 1), (1, 2), (2, 3)])
        assert degenerate_layers(earliest_layering(d), 2) == [1, 2, 3, 4]

    def test_relaxed_singleton_layers(self):
        d = Dag(3, [(0, 1), (1, 2)])
        L = earliest_layering(d)
        assert is_layerwise_balanced(d, L, Partition(2, [0, 0, 0]), 0, "relaxed-ceil")
        assert not is_layerwise_balanced(d, L, Partition(2, [0, 0, 0]), 0, "strict-floor")
        assert is_layerwise_balanced(d, L, Partition(2, [0, 0, 0]), 0, "strict-floor",
                                     ignore_below=2)

    def test_wide_layers_in_one_half(self):
        # two parallel chains of two layers each, placed one after the other
        d = Dag(8, [(0, 2), (1, 3), (2, 4), (3, 5), (4, 6), (5, 7)])
        L = earliest_layering(d)
        halves = Partition(2, [0, 0, 0, 0, 1, 1, 1, 1])
        across = Partition(2, [0, 1, 0, 1, 0, 1, 0, 1])
        assert is_balanced(Hypergraph(8), halves, 0)
        assert not is_layerwise_balanced(d, L, halves, 0)
        assert is_layerwise_balanced(d, L, across, 0)

    @settings(max_examples=100)
    @given(dags(max_n=8), st.data())
    def test_agrees_with_layer_spec(self, d, data):
        L = earliest_layering(d)
        p = Partition(2, data.draw(st.lists(st.integers(0, 1), min_size=d.n, max_size=d.n)))
        assert is_layerwise_balanced(d, L, p, 0, "relaxed-ceil") == is_balanced(
            Hypergraph(d.n), p, layer_spec(L, 0, "relaxed-ceil"))

    def test_invalid_layering(self):
        d = Dag(2, [(0, 1)])
        with pytest.raises(ParameterError):
            is_layerwise_balanced(d, Layering((1, 1), 1), Partition(2, [0, 1]))
