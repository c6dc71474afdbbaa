"""Tree-shaped (NUMA) cost model and the assignment of parts to leaves.

A topology with branching factors ``b_1..b_d`` has ``k = prod(b)`` leaves,
numbered in depth-first order. The level-``i`` group of leaf ``x`` is
``x // prod(b_{i+1}..b_d)``; a hyperedge touching ``lam_i`` level-``i``
groups pays ``sum_i g_i (lam_i - lam_{i-1})`` with ``lam_0 = 1``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import networkx as nx

from .core import BalanceSpec, CostMetric, Hypergraph, Partition, as_fraction, coerce_spec
from .errors import BudgetExceeded, ParameterError


@dataclass(frozen=True)
class HierTopology:
    b: tuple
    g: tuple

    def __post_init__(self):
        b = tuple(int(x) for x in self.b)
        g = tuple(as_fraction(x) for x in self.g)
        if not b:
            raise ParameterError("a topology needs at least one level")
        if len(b) != len(g):
            raise ParameterError("one level cost per branching factor is required")
        if any(x < 2 for x in b):
            raise ParameterError("branching factors must be at least 2")
        if any(x <= 0 for x in g):
            raise ParameterError("level costs must be positive")
        if any(g[i] < g[i + 1] for i in range(len(g) - 1)):
            raise ParameterError("level costs must be non-increasing")
        if g[-1] != 1:
            raise ParameterError("the last level cost must be normalized to 1")
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "g", g)

    @property
    def d(self) -> int:
        return len(self.b)

    @property
    def k(self) -> int:
        return math.prod(self.b)

    def divisors(self) -> list[int]:
        """Leaves per level-i group, for i = 1..d."""
        out = []
        for i in range(1, self.d + 1):
            out.append(math.prod(self.b[i:]))
        return out

    def group(self, leaf: int, level: int) -> int:
        return leaf // math.prod(self.b[level:])


@dataclass(frozen=True)
class HierPartition:
    partition: Partition
    leaf_of: tuple

    def __post_init__(self):
        leaf_of = tuple(int(x) for x in self.leaf_of)
        if sorted(leaf_of) != list(range(self.partition.k)):
            raise ParameterError("leaf_of must be a bijection from parts onto leaves")
        object.__setattr__(self, "leaf_of", leaf_of)

    def leaf_assign(self) -> tuple:
        return tuple(self.leaf_of[a] for a in self.partition.assign)


def _check(hp: HierPartition, T: HierTopology):
    if hp.partition.k != T.k:
        raise ParameterError(f"partition has {hp.partition.k} parts but the topology has {T.k} leaves")


def level_lambdas(leaves, T: HierTopology) -> list[int]:
    """lam_1..lam_d for a set of touched leaves."""
    return [len({x // div for x in leaves}) for div in T.divisors()]


def edge_hier_cost(leaves, w, T: HierTopology) -> Fraction:
    prev = 1
    total = Fraction(0)
    for gi, lam in zip(T.g, level_lambdas(leaves, T)):
        total += gi * (lam - prev)
        prev = lam
    return w * total


def hierarchical_cost(h: Hypergraph, hp: HierPartition, T: HierTopology) -> Fraction:
    _check(hp, T)
    if hp.partition.n != h.n:
        raise ParameterError("partition and hypergraph have different node counts")
    leaf = hp.leaf_assign()
    total = Fraction(0)
    for e, w in zip(h.edges, h.weights):
        touched = {leaf[v] for v in e}
        if len(touched) > 1:
            total += edge_hier_cost(touched, w, T)
    return total


def contract_partition(h: Hypergraph, p: Partition) -> Hypergraph:
    """One node per part; each cut hyperedge becomes its set of touched parts.

    Uncut edges are dropped and edges with identical images are merged by
    adding their weights, in order of first appearance.
    """
    weight: dict = {}
    for e, w in zip(h.edges, h.weights):
        image = tuple(sorted({p.assign[v] for v in e}))
        if len(image) > 1:
            weight[image] = weight.get(image, 0) + w
    return Hypergraph(p.k, list(weight), list(weight.values()))


def count_assignments(T: HierTopology) -> int:
    denom = 1
    above = 1
    for bi in T.b:
        denom *= math.factorial(bi) ** above
        above *= bi
    return math.factorial(T.k) // denom


def _leaf_orders(items, b):
    """Yield leaf-ordered tuples of ``items``, one per class of sibling swaps.

    Groups at each level are formed with the smallest remaining item first
    and placed left to right in order of their minimum.
    """
    if len(b) == 1:
        yield tuple(sorted(items))
        return
    size = len(items) // b[0]

    def splits(rest):
        if not rest:
            yield []
            return
        first, others = rest[0], rest[1:]
        for combo in itertools.combinations(others, size - 1):
            group = (first,) + combo
            remaining = [x for x in others if x not in combo]
            for tail in splits(remaining):
                yield [group] + tail

    for groups in splits(sorted(items)):
        subs = [list(_leaf_orders(list(grp), b[1:])) for grp in groups]
        for choice in itertools.product(*subs):
            yield tuple(x for part in choice for x in part)


def enumerate_assignments(T: HierTopology, budget: int = 10**6) -> list[tuple]:
    """Canonical ``leaf_of`` tuples, one per equivalence class.

    Two assignments are equivalent when a permutation of sibling subtrees
    maps one onto the other. The representative returned for a class is its
    lexicographically smallest ``leaf_of``.
    """
    if count_assignments(T) > budget:
        raise BudgetExceeded(f"{count_assignments(T)} assignments exceed the budget {budget}")
    out = []
    for order in _leaf_orders(list(range(T.k)), list(T.b)):
        leaf_of = [0] * T.k
        for leaf, part in enumerate(order):
            leaf_of[part] = leaf
        out.append(tuple(leaf_of))
    return out


def sibling_permutations(T: HierTopology) -> list[tuple]:
    """Every leaf permutation generated by reordering children of internal nodes."""

    def perms(level):
        if level == T.d:
            return [(0,)]
        child = perms(level + 1)
        width = len(child[0])
        out = []
        for order in itertools.permutations(range(T.b[level])):
            for parts in itertools.product(child, repeat=T.b[level]):
                seq = []
                for slot, src in enumerate(order):
                    seq.extend(src * width + x for x in parts[slot])
                out.append(tuple(seq))
        return out

    return perms(0)


def _contracted_cost(hc: Hypergraph, leaf_of, T: HierTopology) -> Fraction:
    total = Fraction(0)
    for e, w in zip(hc.edges, hc.weights):
        total += edge_hier_cost({leaf_of[a] for a in e}, w, T)
    return total


def optimal_assignment_bruteforce(h: Hypergraph, p: Partition, T: HierTopology,
                                  budget: int = 10**6):
    """Best leaf assignment for a fixed partition, by enumeration."""
    if p.k != T.k:
        raise ParameterError("partition part count must equal the number of leaves")
    hc = contract_partition(h, p)
    best = None
    for leaf_of in enumerate_assignments(T, budget):
        c = _contracted_cost(hc, leaf_of, T)
        if best is None or c < best[1]:
            best = (leaf_of, c)
    return HierPartition(p, best[0]), best[1]


def pair_weights(hc: Hypergraph) -> dict:
    """w(u, v) = total weight of hyperedges containing both u and v."""
    out: dict = {}
    for e, w in zip(hc.edges, hc.weights):
        for u, v in itertools.combinations(e, 2):
            out[(u, v)] = out.get((u, v), 0) + w
    return out


def optimal_assignment_matching(h: Hypergraph, p: Partition | None, T: HierTopology):
    """Best leaf assignment when the lowest level pairs parts (d = 2, b_2 = 2).

    The parts are paired by a maximum-weight perfect matching on the
    complete graph with ``w(u, v)`` as above; pair ``j`` (pairs sorted by
    their smaller part) occupies leaves ``2j`` and ``2j+1``. With ``p`` set
    to ``None`` the hypergraph is taken to be already contracted.
    """
    if T.d != 2 or T.b[1] != 2:
        raise ParameterError("the matching method needs two levels with b_2 = 2")
    k = T.k
    if p is None:
        if h.n != k:
            raise ParameterError("a contracted hypergraph must have one node per part")
        p = Partition(k, range(k))
    elif p.k != k:
        raise ParameterError("partition part count must equal the number of leaves")
    hc = contract_partition(h, p)
    pw = pair_weights(hc)
    graph = nx.Graph()
    graph.add_nodes_from(range(k))
    for u, v in itertools.combinations(range(k), 2):
        graph.add_edge(u, v, weight=pw.get((u, v), 0))
    matching = nx.max_weight_matching(graph, maxcardinality=True)
    pairs = sorted(tuple(sorted(pr)) for pr in matching)
    if len(pairs) * 2 != k:
        raise ParameterError("no perfect matching found")
    plain = [(2 * j, 2 * j + 1) for j in range(k // 2)]
    if sum(pw.get(pr, 0) for pr in pairs) == sum(pw.get(pr, 0) for pr in plain):
        pairs = plain
    leaf_of = [0] * k
    for j, (a, b) in enumerate(pairs):
        leaf_of[a], leaf_of[b] = 2 * j, 2 * j + 1
    hp = HierPartition(p, tuple(leaf_of))
    return hp, hierarchical_cost(h, hp, T)


def iter_balanced_assignments(h: Hypergraph, spec, k: int):
    """Yield balanced restricted growth assignments in lexicographic order."""
    spec = coerce_spec(spec)
    spec.validate(h.n, k)
    node_cons, caps = spec.node_constraint(h.n), spec.caps(h.n, k)
    counts = [[0] * k for _ in caps]
    assign = [0] * h.n
    n = h.n

    def rec(pos, maxlab):
        if pos == n:
            yield tuple(assign)
            return
        j = node_cons[pos]
        for c in range(min(k - 1, maxlab + 1) + 1):
            if j >= 0:
                if counts[j][c] >= caps[j]:
                    continue
                counts[j][c] += 1
            assign[pos] = c
            yield from rec(pos + 1, max(maxlab, c))
            if j >= 0:
                counts[j][c] -= 1

    yield from rec(0, -1)


def hierarchical_optimum_bruteforce(h: Hypergraph, T: HierTopology, spec=None,
                                    budget: int = 10**7):
    """Minimum hierarchical cost over all balanced partitions and assignments."""
    k = T.k
    assignments = enumerate_assignments(T)
    best = None
    seen = 0
    for assign in iter_balanced_assignments(h, spec, k):
        seen += 1
        if seen > budget:
            raise BudgetExceeded("hierarchical enumeration exceeded its budget")
        p = Partition(k, assign)
        hc = contract_partition(h, p)
        for leaf_of in assignments:
            c = _contracted_cost(hc, leaf_of, T)
            if best is None or c < best[1]:
                best = (HierPartition(p, leaf_of), c)
    return best


def two_step(h: Hypergraph, T: HierTopology, eps=0, oracle=None, mode: str = "strict-floor"):
    """Standard connectivity optimum first, then the best leaf assignment.

    Returns ``(HierPartition, hierarchical cost, standard cost)`` or ``None``
    when no balanced partition exists.
    """
    from .solvers import brute_force_optimum

    oracle = oracle or brute_force_optimum
    sol = oracle(h, BalanceSpec.single(eps, mode), CostMetric.CONN, T.k)
    if sol is None:
        return None
    hp, c = optimal_assignment_bruteforce(h, sol.partition, T)
    return hp, c, sol.cost
