"""Computational DAGs, their hyperDAGs, recognition and layerings."""
from __future__ import annotations

import heapq
import random
from dataclasses import dataclass

import numpy as np

from .core import STRICT, BalanceSpec, Constraint, Hypergraph, Partition, is_balanced
from .errors import BudgetExceeded, ParameterError


@dataclass(frozen=True)
class Dag:
    """Directed acyclic graph on nodes ``0..n-1``.

    Parallel arcs are collapsed; self-loops and cycles are rejected.
    """

    n: int
    arcs: tuple = ()

    def __post_init__(self):
        arcs = set()
        for u, v in self.arcs:
            u, v = int(u), int(v)
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ParameterError(f"arc ({u}, {v}) leaves the node range")
            if u == v:
                raise ParameterError(f"self-loop on node {u}")
            arcs.add((u, v))
        object.__setattr__(self, "arcs", tuple(sorted(arcs)))
        if len(self.topological_order()) != self.n:
            raise ParameterError("the arcs contain a directed cycle")

    def successors(self) -> list[list[int]]:
        out = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            out[u].append(v)
        return out

    def predecessors(self) -> list[list[int]]:
        out = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            out[v].append(u)
        return out

    def topological_order(self) -> list[int]:
        """Kahn's algorithm, smallest available id first."""
        indeg = [0] * self.n
        succ = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            indeg[v] += 1
            succ[u].append(v)
        ready = [v for v in range(self.n) if indeg[v] == 0]
        heapq.heapify(ready)
        order = []
        while ready:
            u = heapq.heappop(ready)
            order.append(u)
            for v in succ[u]:
                indeg[v] -= 1
                if indeg[v] == 0:
                    heapq.heappush(ready, v)
        return order

    def sinks(self) -> list[int]:
        has_out = {u for u, _ in self.arcs}
        return [v for v in range(self.n) if v not in has_out]


def random_dag(n: int, p: float, rng: random.Random) -> Dag:
    """Random DAG: arcs follow a shuffled node order, each with probability p."""
    perm = list(range(n))
    rng.shuffle(perm)
    arcs = [(perm[i], perm[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Dag(n, arcs)


def dag_to_hyperdag(d: Dag) -> tuple[Hypergraph, list[int]]:
    """One hyperedge ``{u} + successors(u)`` per non-sink ``u``.

    Returns the hypergraph and the generator of each hyperedge.
    """
    succ = d.successors()
    edges, gens = [], []
    for u in range(d.n):
        if succ[u]:
            edges.append([u] + succ[u])
            gens.append(u)
    return Hypergraph(d.n, edges), gens


@dataclass
class Recognition:
    """Outcome of :func:`is_hyperdag`; truthy iff the input is a hyperDAG."""

    ok: bool
    witness: Dag | None
    generators: list | None
    residual: frozenset | None
    ops: int

    def __bool__(self):
        return self.ok


def is_hyperdag(h: Hypergraph) -> Recognition:
    """Decide whether ``h`` comes from some DAG by peeling low-degree nodes.

    A node of degree 0 is simply removed. A node of degree 1 becomes the
    generator of its only remaining hyperedge, which is then deleted and
    yields arcs from the generator to the edge's other pins. Among the
    removable nodes the smallest id goes first. If nodes remain but all
    have degree at least 2, they are returned as the residual set.

    ``ops`` counts elementary steps (pin visits, incidence scans, queue
    operations) and grows linearly with the pin count.
    """
    n = h.n
    inc = h.incidence()
    deg = [len(x) for x in inc]
    alive_edge = [True] * h.m
    removed = [False] * n
    scan = [0] * n
    generator = [-1] * h.m
    arcs = []
    ops = n + h.m
    heap = [v for v in range(n) if deg[v] <= 1]
    heapq.heapify(heap)
    queued = [deg[v] <= 1 for v in range(n)]
    left = n
    while heap:
        u = heapq.heappop(heap)
        ops += 1
        if removed[u]:
            continue
        if deg[u] == 1:
            lst = inc[u]
            while not alive_edge[lst[scan[u]]]:
                scan[u] += 1
                ops += 1
            e = lst[scan[u]]
            alive_edge[e] = False
            generator[e] = u
            for v in h.edges[e]:
                ops += 1
                deg[v] -= 1
                if v != u:
                    arcs.append((u, v))
                    if deg[v] <= 1 and not queued[v]:
                        queued[v] = True
                        heapq.heappush(heap, v)
                        ops += 1
        removed[u] = True
        left -= 1
    if left:
        residual = frozenset(v for v in range(n) if not removed[v])
        return Recognition(False, None, None, residual, ops)
    return Recognition(True, Dag(n, arcs), generator, None, ops)


def is_hyperdag_oracle(h: Hypergraph, max_n: int = 16) -> bool:
    """Exhaustive check: every node subset has a node of induced degree at most 1.

    Only hyperedges contained in the subset count towards degrees.
    """
    n = h.n
    if n > max_n:
        raise ParameterError(f"oracle refuses n={n} above {max_n}")
    if n == 0 or h.m == 0:
        return True
    masks = np.arange(1, 1 << n, dtype=np.int64)
    emask = np.array([sum(1 << v for v in e) for e in h.edges], dtype=np.int64)
    inside = (emask[None, :] & ~masks[:, None]) == 0
    pins = np.zeros((h.m, n), dtype=np.int64)
    for i, e in enumerate(h.edges):
        pins[i, list(e)] = 1
    deg = inside.astype(np.int64) @ pins
    member = ((masks[:, None] >> np.arange(n)[None, :]) & 1).astype(bool)
    low = (deg <= 1) & member
    return bool(low.any(axis=1).all())


def densest_hyperdag(m: int) -> Hypergraph:
    """Nodes v_1..v_m with hyperedges {v_i, ..., v_m} for i < m."""
    if m < 2:
        raise ParameterError("densest hyperDAG needs m >= 2")
    return Hypergraph(m, [list(range(i, m)) for i in range(m - 1)])


@dataclass(frozen=True)
class Layering:
    """Layer index (1-based) per node plus the layer count."""

    layer: tuple
    ell: int

    def layers(self) -> list[list[int]]:
        out = [[] for _ in range(self.ell)]
        for v, x in enumerate(self.layer):
            out[x - 1].append(v)
        return out

    def is_valid(self, d: Dag) -> bool:
        if len(self.layer) != d.n:
            return False
        if any(not 1 <= x <= self.ell for x in self.layer):
            return False
        if d.n and max(self.layer) != self.ell:
            return False
        return all(self.layer[u] < self.layer[v] for u, v in d.arcs)


def _heads_tails(d: Dag):
    order = d.topological_order()
    pred, succ = d.predecessors(), d.successors()
    head = [1] * d.n
    for v in order:
        for u in pred[v]:
            head[v] = max(head[v], head[u] + 1)
    tail = [1] * d.n
    for v in reversed(order):
        for w in succ[v]:
            tail[v] = max(tail[v], tail[w] + 1)
    return order, head, tail


def longest_path_nodes(d: Dag) -> int:
    _, head, _ = _heads_tails(d)
    return max(head, default=0)


def earliest_layering(d: Dag) -> Layering:
    _, head, _ = _heads_tails(d)
    return Layering(tuple(head), max(head, default=0))


def enumerate_layerings(d: Dag, cap: int = 10**6) -> list[Layering]:
    """All layerings with the minimum number of layers.

    Each node ranges over ``[earliest, ell - tail + 1]``, where ``tail`` is
    the number of nodes on the longest path starting at it. Nodes are fixed
    in topological order with the smallest admissible layer first.
    """
    order, head, tail = _heads_tails(d)
    ell = max(head, default=0)
    pred = d.predecessors()
    latest = [ell - tail[v] + 1 for v in range(d.n)]
    layer = [0] * d.n
    out: list = []

    def rec(i):
        if i == len(order):
            if len(out) >= cap:
                raise BudgetExceeded(f"more than {cap} layerings")
            out.append(Layering(tuple(layer), ell))
            return
        v = order[i]
        lo = head[v]
        for u in pred[v]:
            lo = max(lo, layer[u] + 1)
        for x in range(lo, latest[v] + 1):
            layer[v] = x
            rec(i + 1)
        layer[v] = 0

    rec(0)
    return out


def layer_spec(L: Layering, eps=0, mode: str = STRICT, ignore_below: int = 0) -> BalanceSpec:
    """One balance constraint per layer; layers smaller than ``ignore_below`` are skipped."""
    cons = [Constraint(frozenset(nodes), eps, mode) for nodes in L.layers()
            if nodes and len(nodes) >= ignore_below]
    return BalanceSpec(tuple(cons))


def degenerate_layers(L: Layering, k: int) -> list[int]:
    """1-based indices of layers with fewer than k nodes."""
    return [j + 1 for j, nodes in enumerate(L.layers()) if len(nodes) < k]


def is_layerwise_balanced(d: Dag, L: Layering, p: Partition, eps=0, mode: str = STRICT,
                          ignore_below: int = 0) -> bool:
    if not L.is_valid(d):
        raise ParameterError("layering is not valid for this DAG")
    spec = layer_spec(L, eps, mode, ignore_below)
    return is_balanced(Hypergraph(d.n), p, spec)
