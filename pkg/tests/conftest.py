import random
import sys
from fractions import Fraction

from hypothesis import strategies as st

from hyperpart import Hypergraph, Partition


@st.composite
def hypergraphs(draw, max_n=8, max_m=7, max_size=4, max_weight=3):
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(0, max_m))
    edges, weights = [], []
    for _ in range(m):
        size = draw(st.integers(1, min(max_size, n)))
        edges.append(draw(st.lists(st.integers(0, n - 1), min_size=size, max_size=size, unique=True)))
        weights.append(draw(st.integers(1, max_weight)))
    return Hypergraph(n, edges, weights)


@st.composite
def hypergraph_and_partition(draw, max_k=4, **kw):
    h = draw(hypergraphs(**kw))
    k = draw(st.integers(2, max_k))
    assign = draw(st.lists(st.integers(0, k - 1), min_size=h.n, max_size=h.n))
    return h, Partition(k, assign)


epsilons = st.sampled_from([Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(1, 5)])


def rng(seed=0):
    return random.Random(seed)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[num])
