from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import hypergraph_and_partition, hypergraphs
from hyperpart import BalanceSpec, Constraint, Hypergraph, ParseError
from hyperpart import io
from hyperpart.hierarchy import HierTopology
from hyperpart.hyperdag import Dag, Layering, earliest_layering


def no_duplicates(h):
    return len(set(h.edges)) == h.m


class TestHgr:
    @given(hypergraphs())
    def test_round_trip(self, h):
        back = io.parse_hgr(io.format_hgr(h))
        assert back.same_edges(h)
        if no_duplicates(h):
            assert back == h
        assert io.parse_hgr(io.format_hgr(h), merge_duplicates=False) == h

    def test_duplicates_merged(self):
        h = io.parse_hgr("3 3\n1 2\n2 1\n2 3\n")
        assert h.edges == ((0, 1), (1, 2)) and h.weights == (2, 1)
        assert io.parse_hgr("3 3\n1 2\n2 1\n2 3\n", merge_duplicates=False).m == 3

    def test_comments_and_weights(self):
        text = "% header next\n2 4 1\n\n3 1 2\n% skip\n1 3 4\n"
        h = io.parse_hgr(text)
        assert h.edges == ((0, 1), (2, 3)) and h.weights == (3, 1)

    @pytest.mark.parametrize("text,line", [
        ("2 3\n1 2\n", 2),          # too few edges
        ("1 3\n1 4\n", 2),          # pin out of range
        ("1 3\n1 x\n", 2),          # not an integer
        ("1 3 1\n0 1 2\n", 2),      # zero weight
        ("1 3 11\n1 2\n", 1),       # node weights unsupported
        ("1 3\n1 2\n2 3\n", 3),     # too many edges
        ("a b\n", 1),
    ])
    def test_errors_carry_line(self, text, line):
        with pytest.raises(ParseError) as exc:
            io.parse_hgr(text, "x.hgr")
        assert exc.value.line == line
        assert f"x.hgr:{line}" in str(exc.value)

    def test_empty(self):
        with pytest.raises(ParseError):
            io.parse_hgr("% nothing\n")

    def test_files(self, tmp_path):
        h = Hypergraph(4, [(0, 1, 2), (2, 3)], [2, 5])
        io.save_hgr(h, tmp_path / "a.hgr")
        assert io.load_hgr(tmp_path / "a.hgr") == h


class TestPartition:
    @given(hypergraph_and_partition())
    def test_round_trip(self, hp):
        _, p = hp
        assert io.parse_partition(io.format_partition(p), p.n, p.k) == p

    def test_errors(self):
        with pytest.raises(ParseError) as exc:
            io.parse_partition("1\n3\n", 2, 2)
        assert exc.value.line == 2
        with pytest.raises(ParseError):
            io.parse_partition("1\n2\n", 3, 2)
        with pytest.raises(ParseError):
            io.parse_partition("0\n", 1, 2)


class TestConstraints:
    @given(st.lists(st.sampled_from([Fraction(0), Fraction(1, 4), Fraction(3, 2)]), min_size=1, max_size=3),
           st.sampled_from(["strict-floor", "relaxed-ceil"]))
    def test_round_trip(self, epsilons, mode):
        cons = tuple(Constraint(frozenset({2 * i, 2 * i + 1}), e, mode) for i, e in enumerate(epsilons))
        spec = BalanceSpec(cons)
        assert io.parse_constraints(io.format_constraints(spec)) == spec

    def test_whole_set(self):
        spec = io.parse_constraints("1/5 strict-floor\n")
        assert spec == BalanceSpec.single(Fraction(1, 5))

    def test_overlap_is_parse_error(self):
        with pytest.raises(ParseError):
            io.parse_constraints("0 strict 1 2\n0 strict 2 3\n")

    def test_bad_mode(self):
        with pytest.raises(ParseError) as exc:
            io.parse_constraints("0 strict 1\n0 sideways 2\n")
        assert exc.value.line == 2


class TestDagAndSidecars:
    @given(st.integers(1, 7).flatmap(lambda n: st.tuples(
        st.just(n), st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))))))
    def test_dag_round_trip(self, data):
        n, pairs = data
        d = Dag(n, [(min(u, v), max(u, v)) for u, v in pairs if u != v])
        assert io.parse_dag(io.format_dag(d)) == d

    def test_dag_cycle(self):
        with pytest.raises(ParseError):
            io.parse_dag("2 2\n1 2\n2 1\n")

    def test_layering(self):
        L = earliest_layering(Dag(3, [(0, 1), (0, 2)]))
        assert io.parse_layering(io.format_layering(L), 3) == L

    def test_generators(self):
        assert io.parse_generators(io.format_generators([3, 0, 2])) == [3, 0, 2]
        with pytest.raises(ParseError):
            io.parse_generators("1 1\n3 2\n")

    def test_topology(self):
        T = HierTopology((2, 3), (Fraction(5, 2), 1))
        assert io.parse_topology(io.format_topology(T)) == T
        with pytest.raises(ParseError):
            io.parse_topology("2 2\n1 4\n")

    def test_meta(self):
        meta = {"gadget": "grid", "ell": "3"}
        assert io.parse_meta(io.format_meta(meta)) == meta
