"""Exact partitioners.

``brute_force_optimum`` is the reference oracle: it walks every canonical
assignment. ``branch_and_bound`` returns exactly the same partition (the
lexicographically smallest canonical optimum) but cuts hopeless branches,
which makes generated gadget instances with a few hundred nodes tractable.
``bounded_cost_solver`` and ``multi_constraint_bounded_solver`` implement
the configuration enumeration plus packing table for instances whose
optimum is at most a budget ``L``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, NamedTuple

from . import kernels
from .core import (
    BalanceSpec,
    CostMetric,
    Hypergraph,
    Partition,
    canonical_labels,
    coerce_spec,
    cost,
    is_balanced,
)
from .errors import BudgetExceeded, ParameterError


class Solution(NamedTuple):
    partition: Partition
    cost: int


def count_canonical_assignments(n: int, k: int) -> int:
    """Number of restricted growth strings of length n using at most k labels."""
    # row[j] holds Stirling numbers of the second kind S(i, j)
    row = [1] + [0] * k
    for _ in range(n):
        new = [0] * (k + 1)
        for j in range(1, k + 1):
            new[j] = j * row[j] + row[j - 1]
        row = new
    return sum(row) if n else 1


def _spec_arrays(h: Hypergraph, spec: BalanceSpec, k: int):
    spec.validate(h.n, k)
    return spec.node_constraint(h.n), spec.caps(h.n, k)


def brute_force_optimum(h: Hypergraph, spec=None, metric=CostMetric.CONN, k: int = 2,
                        budget: int = 10**8):
    """Minimum-cost balanced partition by exhaustive enumeration.

    Assignments are generated in restricted growth form, so each partition
    is seen once, in lexicographic order; a prefix is abandoned only when a
    part already exceeds a cap. Returns a :class:`Solution` whose partition
    is the lexicographically smallest canonical optimum, or ``None`` if no
    assignment is balanced.
    """
    metric = CostMetric.parse(metric)
    spec = coerce_spec(spec)
    node_cons, caps = _spec_arrays(h, spec, k)
    if count_canonical_assignments(h.n, k) > budget:
        raise BudgetExceeded(f"{h.n} nodes with k={k} exceed the enumeration budget {budget}")
    n = h.n
    counts = [[0] * k for _ in caps]
    assign = [0] * n
    best = None

    def rec(pos, maxlab):
        nonlocal best
        if pos == n:
            p = Partition(k, assign)
            c = cost(h, p, metric)
            if best is None or c < best.cost:
                best = Solution(p, c)
            return
        j = node_cons[pos]
        for c in range(min(k - 1, maxlab + 1) + 1):
            if j >= 0:
                if counts[j][c] >= caps[j]:
                    continue
                counts[j][c] += 1
            assign[pos] = c
            rec(pos + 1, max(maxlab, c))
            if j >= 0:
                counts[j][c] -= 1

    rec(0, -1)
    return best


def _csr(h: Hypergraph):
    eptr, pins = [0], []
    for e in h.edges:
        pins.extend(e)
        eptr.append(len(pins))
    inc = h.incidence()
    nptr, nedges = [0], []
    for lst in inc:
        nedges.extend(lst)
        nptr.append(len(nedges))
    return eptr, pins, nptr, nedges


def branch_and_bound(h: Hypergraph, spec=None, metric=CostMetric.CONN, k: int = 2,
                     upper_bound: int | None = None, order=None, budget: int = 2 * 10**9):
    """Exact optimum by depth-first branch and bound.

    With the default node order the result coincides with
    :func:`brute_force_optimum`, including the tie-break. ``upper_bound``
    restricts the search to partitions of cost at most that value; ``None``
    is returned when there is none. ``budget`` caps the number of partial
    assignments explored.
    """
    metric = CostMetric.parse(metric)
    spec = coerce_spec(spec)
    node_cons, caps = _spec_arrays(h, spec, k)
    for j, c in enumerate(spec.constraints):
        if caps[j] * k < c.size(h.n):
            return None
    if h.n == 0:
        return Solution(Partition(k, []), 0)
    eptr, pins, nptr, nedges = _csr(h)
    worst = sum(h.weights) * (1 if metric is CostMetric.CUTNET else k - 1)
    ub = worst + 1 if upper_bound is None else min(upper_bound, worst) + 1
    if ub <= 0:
        return None
    if order is None:
        order = list(range(h.n))
    elif sorted(order) != list(range(h.n)):
        raise ParameterError("order must be a permutation of the nodes")
    status, best, assign, _ = kernels.bnb_search(
        h.n, k, eptr, pins, list(h.weights), nptr, nedges,
        0 if metric is CostMetric.CUTNET else 1, node_cons, caps, list(order), ub, True, budget,
    )
    if status == kernels.OVER_BUDGET:
        raise BudgetExceeded(f"branch and bound explored more than {budget} nodes")
    if status == kernels.NONE_BELOW:
        return None
    return Solution(Partition(k, canonical_labels(assign)), best)


def exact_optimum(h: Hypergraph, spec=None, metric=CostMetric.CONN, k: int = 2):
    """Brute force when the instance is tiny, branch and bound otherwise."""
    if count_canonical_assignments(h.n, k) <= 5000:
        return brute_force_optimum(h, spec, metric, k)
    return branch_and_bound(h, spec, metric, k)


class _DSU:
    __slots__ = ("parent",)

    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if ra < rb:
                self.parent[rb] = ra
            else:
                self.parent[ra] = rb


@dataclass
class _ConfigSearch:
    h: Hypergraph
    k: int
    L: int
    metric: CostMetric
    node_cons: list
    caps: list
    cell_budget: int
    memo: dict = field(default_factory=dict)
    best: tuple | None = None
    configs: int = 0

    def components(self, kept, removed):
        """Contract surviving edges; return (members, per-constraint sizes, mask) per component."""
        n, k = self.h.n, self.k
        dsu = _DSU(n)
        edges = self.h.edges
        for i in kept:
            e = edges[i]
            for v in e[1:]:
                dsu.union(e[0], v)
        full = (1 << k) - 1
        mask = {}
        for i, allowed in removed:
            for v in edges[i]:
                r = dsu.find(v)
                mask[r] = mask.get(r, full) & allowed
        groups: dict = {}
        for v in range(n):
            groups.setdefault(dsu.find(v), []).append(v)
        ncons = len(self.caps)
        comps = []
        for root in sorted(groups, key=lambda r: groups[r][0]):
            members = groups[root]
            sizes = [0] * ncons
            for v in members:
                j = self.node_cons[v]
                if j >= 0:
                    sizes[j] += 1
            comps.append((members, tuple(sizes), mask.get(root, full)))
        return comps

    def packable(self, comps):
        if any(m == 0 for _, _, m in comps):
            return False
        key = tuple(sorted((s, m) for _, s, m in comps))
        hit = self.memo.get(key)
        if hit is None:
            hit = self.pack([s for _, s, _ in comps], [m for _, _, m in comps]) is not None
            self.memo[key] = hit
        return hit

    def pack(self, sizes, masks):
        try:
            return kernels.pack_components(sizes, masks, self.k, self.caps, self.cell_budget)
        except kernels.TableBudget:
            raise BudgetExceeded("packing table exceeds the cell budget") from None

    def config_cost(self, i, allowed):
        w = self.h.weights[i]
        if self.metric is CostMetric.CUTNET:
            return w
        return w * (bin(allowed).count("1") - 1)

    def run(self):
        m = self.h.m
        kept: list = []
        removed: list = []
        full = (1 << self.k) - 1

        def relaxed_feasible(i):
            # undecided edges i.. treated as deleted with every colour allowed
            return self.packable(self.components(kept, removed))

        def rec(i, ccost):
            if self.best is not None and ccost >= self.best[0]:
                return
            if not relaxed_feasible(i):
                return
            if i == m:
                self.configs += 1
                self.best = (ccost, list(kept), list(removed))
                return
            kept.append(i)
            rec(i + 1, ccost)
            kept.pop()
            if len(removed) >= self.L:
                return
            for allowed in range(1, full + 1):
                add = self.config_cost(i, allowed)
                if ccost + add > self.L:
                    continue
                removed.append((i, allowed))
                rec(i + 1, ccost + add)
                removed.pop()

        rec(0, 0)
        if self.best is None:
            return None
        ccost, kept_edges, removed_edges = self.best
        comps = self.components(kept_edges, removed_edges)
        colors = self.pack([s for _, s, _ in comps], [mk for _, _, mk in comps])
        assign = [0] * self.h.n
        for (members, _, _), c in zip(comps, colors):
            for v in members:
                assign[v] = c
        p = Partition(self.k, canonical_labels(assign))
        true_cost = cost(self.h, p, self.metric)
        assert true_cost <= ccost, "configuration cost must bound the true cost"
        return Solution(p, true_cost)


def multi_constraint_bounded_solver(h: Hypergraph, spec, k: int, L: int,
                                    metric=CostMetric.CONN, cell_budget: int = 10**7):
    """Find a balanced partition of cost at most ``L`` under several constraints.

    Every configuration is a set ``E0`` of at most ``L`` hyperedges together
    with an allowed colour set per edge of ``E0``; its cost is the number of
    edges (cut-net) or the sum of ``|allowed| - 1`` (connectivity), weighted.
    The remaining edges are contracted into components, each component may
    use the colours every incident deleted edge allows, and a sparse table
    over per-constraint per-colour node counts decides whether the
    components can be coloured within the caps.

    Configurations are visited in a fixed order (edge by edge: keep, then
    delete with masks ``1..2^k-1``). The configuration returned is the first
    one of minimum configuration cost, and its cost equals the optimum
    whenever the optimum is at most ``L``. Subtrees are skipped when even
    deleting all undecided edges leaves no valid packing, which never
    removes a feasible configuration.

    Returns a :class:`Solution` or ``None``.
    """
    if L < 0:
        raise ParameterError("cost budget L must be nonnegative")
    metric = CostMetric.parse(metric)
    spec = coerce_spec(spec)
    node_cons, caps = _spec_arrays(h, spec, k)
    search = _ConfigSearch(h, k, L, metric, node_cons, caps, cell_budget)
    return search.run()


def bounded_cost_solver(h: Hypergraph, k: int, eps, L: int, metric=CostMetric.CONN,
                        mode: str = "strict-floor"):
    """Single-constraint case of :func:`multi_constraint_bounded_solver`."""
    return multi_constraint_bounded_solver(h, BalanceSpec.single(eps, mode), k, L, metric)


@dataclass
class RecursiveStep:
    level: int
    nodes: list
    parts: list
    cost: int
    balanced: bool


def recursive_partitioner(h: Hypergraph, branching, eps=0, metric=CostMetric.CONN,
                          step_oracle: Callable | None = None, mode: str = "strict-floor"):
    """Split recursively following ``branching``.

    Level ``i`` splits every current part into ``branching[i]`` parts, each
    step solved exactly on the sub-hypergraph of edges lying fully inside
    the part being split. Returns ``(HierPartition, steps)``; the final
    part labels are leaf indices in depth-first order.
    """
    from .hierarchy import HierPartition

    metric = CostMetric.parse(metric)
    oracle = step_oracle or exact_optimum
    branching = [int(b) for b in branching]
    if any(b < 2 for b in branching):
        raise ParameterError("branching factors must be at least 2")
    total = 1
    for b in branching:
        total *= b
    below = [1] * len(branching)
    for i in range(len(branching) - 2, -1, -1):
        below[i] = below[i + 1] * branching[i + 1]
    leaf = [0] * h.n
    steps: list = []
    frontier = [(list(range(h.n)), 0, 0)]
    while frontier:
        nodes, level, offset = frontier.pop(0)
        sub, back = h.induced(nodes)
        b = branching[level]
        spec = BalanceSpec.single(eps, mode)
        sol = oracle(sub, spec, metric, b)
        if sol is None:
            raise ParameterError(f"no balanced split at level {level + 1} for a part of {len(nodes)} nodes")
        parts = [[back[v] for v in part] for part in sol.partition.parts()]
        steps.append(RecursiveStep(level, list(nodes), parts, sol.cost,
                                   is_balanced(sub, sol.partition, spec)))
        for j, part in enumerate(parts):
            start = offset + j * below[level]
            if level + 1 == len(branching):
                for v in part:
                    leaf[v] = start
            else:
                frontier.append((part, level + 1, start))
    p = Partition(total, leaf)
    return HierPartition(p, tuple(range(total))), steps
