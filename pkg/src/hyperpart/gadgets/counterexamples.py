"""Instances separating heuristics from optima, and scheduling hardness instances."""
from __future__ import annotations

import itertools
import math
from fractions import Fraction

from ..core import BalanceSpec, CostMetric, Partition, cost, is_balanced
from ..errors import ParameterError
from ..hierarchy import HierPartition, HierTopology, hierarchical_cost
from ..hyperdag import Dag
from ._common import Builder, Instance
from .reductions import as_graph


def _chain(bld: Builder, blocks):
    ids = []
    for a, b in zip(blocks, blocks[1:]):
        ids.append(bld.edge([a[-1], b[0]]))
    return ids


def recursive_counterexample(n: int, block_weight: int | None = None) -> Instance:
    """Three blocks of ``n/6`` and six of ``n/12`` nodes with a few connector hyperedges.

    The large blocks L1..L3 (nodes ``0..n/2-1``) form a chain of two
    connectors. The small blocks are joined by S1-S2, S2-S3 and one
    hyperedge touching S3, S4, S5 and S6. Each side is connected, so the
    only cost-0 bisection separates large from small blocks. The planted
    4-way partition pairs Li with Si and keeps S4..S6 together; under the
    connectivity metric it cuts every connector exactly once. Block
    hyperedges carry ``block_weight`` (default: one more than the
    connector count) so that splitting a block never pays off.
    """
    if n % 12 or n < 24:
        raise ParameterError("n must be a multiple of 12 and at least 24")
    connectors = 5
    w = connectors + 1 if block_weight is None else int(block_weight)
    if w < 1:
        raise ParameterError("block weight must be positive")
    bld = Builder()
    large = [bld.block(n // 6, w) for _ in range(3)]
    small = [bld.block(n // 12, w) for _ in range(6)]
    _chain(bld, large)
    _chain(bld, small[:3])
    bld.edge([small[2][-1]] + [small[i][0] for i in range(3, 6)])
    h = bld.hypergraph()
    assign = [0] * n
    groups = [large[0] + small[0], large[1] + small[1], large[2] + small[2],
              small[3] + small[4] + small[5]]
    for part, nodes in enumerate(groups):
        for v in nodes:
            assign[v] = part
    planted = Partition(4, assign)
    spec = BalanceSpec.single(0)
    direct = cost(h, planted, CostMetric.CONN)
    assert is_balanced(h, planted, spec) and direct == connectors
    cert = {"connectors": connectors, "planted_direct_cost": direct,
            "recursive_lower_bound": n // 12 - 1, "first_split_cost": 0, "block_weight": w,
            "large_block": n // 6, "small_block": n // 12}
    return Instance("recursive", h, spec, 4, CostMetric.CONN, {"n": n, "block_weight": w}, cert,
                    planted, topology=HierTopology((2, 2), (1, 1)))


def twostep_cost_formula(T: HierTopology, m: int) -> Fraction:
    """``m * sum_i g_i (b_i - 1)/b_i * prod_{j >= i} b_j``."""
    total = Fraction(0)
    for i in range(T.d):
        total += T.g[i] * Fraction(T.b[i] - 1, T.b[i]) * math.prod(T.b[i:])
    return total * m


def twostep_counterexample(T: HierTopology | None = None, m: int | None = None,
                           part_size: int | None = None,
                           block_weight: int | None = None) -> Instance:
    """Star-like instance where the standard optimum assigns badly to the hierarchy.

    ``part_size`` (default ``k-1``) is the node count per part; the blocks
    are A (one part), B_1..B_{k-1} and D and E_1..E_{k-3} (``part/(k-1)``
    each) and C_1..C_{k-2} (the rest of a part). The ``m`` edges between A
    and each B_i are stored as one hyperedge of weight ``m``; block
    hyperedges carry ``block_weight`` so that no block is ever split.
    """
    T = T or HierTopology((2, 2), (4, 1))
    k = T.k
    if k < 3:
        raise ParameterError("need k >= 3")
    g1 = T.g[0]
    m = math.ceil(g1 * k) if m is None else int(m)
    if m < g1 * k:
        raise ParameterError(f"m must be at least g_1 * k = {g1 * k}")
    P = k - 1 if part_size is None else int(part_size)
    if P % (k - 1) or P < k - 1:
        raise ParameterError("part size must be a positive multiple of k-1")
    q = P // (k - 1)
    need = g1 * (m + 1) * (k - 1)
    w = math.floor(need) + 1 if block_weight is None else int(block_weight)
    sizes = [P] + [q] * (k - 1) + [P - q] * (k - 2) + [q] + [q] * (k - 3)
    smallest_split = min((1 if s == 2 else s - 1) for s in sizes if s >= 2) if any(
        s >= 2 for s in sizes) else None
    if smallest_split is not None and not smallest_split * w > need:
        raise ParameterError("block weight too small: splitting must cost more than all edges")
    bld = Builder()
    A = bld.block(P, w)
    B = [bld.block(q, w) for _ in range(k - 1)]
    C = [bld.block(P - q, w) for _ in range(k - 2)]
    D = bld.block(q, w)
    E = [bld.block(q, w) for _ in range(k - 3)]
    for i, blk in enumerate(B):
        bld.edge([A[i % P], blk[0]], m)
    for i in range(k - 2):
        bld.edge([B[i][-1], C[i][0]])
    bld.edge([B[k - 2][-1], D[0]])
    h = bld.hypergraph()
    n = h.n

    def part_of(groups):
        assign = [0] * n
        for j, nodes in enumerate(groups):
            for v in nodes:
                assign[v] = j
        return Partition(k, assign)

    std_groups = [A] + [B[i] + C[i] for i in range(k - 2)] + [B[k - 2] + D + sum(E, [])]
    hier_groups = [A, sum(B, [])] + [C[i] + E[i] for i in range(k - 3)] + [C[k - 3] + D]
    std = part_of(std_groups)
    hier = HierPartition(part_of(hier_groups), tuple(range(k)))
    spec = BalanceSpec.single(0)
    assert is_balanced(h, std, spec)
    assert is_balanced(h, hier.partition, spec)
    std_cost = cost(h, std, CostMetric.CONN)
    planted_hier = hierarchical_cost(h, hier, T)
    twostep = twostep_cost_formula(T, m)
    extra = planted_hier - (k - 1) * m
    cert = {"standard_optimum": std_cost, "twostep_cost": twostep, "hier_optimum": planted_hier,
            "extra": extra, "ratio": twostep / planted_hier, "m": m, "block_weight": w,
            "part_size": P, "ratio_floor": (T.b[0] - 1) * g1 / T.b[0]}
    assert std_cost == (k - 1) * m
    return Instance("twostep", h, spec, k, CostMetric.CONN,
                    {"b": list(T.b), "g": list(T.g), "m": m, "part_size": P}, cert,
                    std, topology=T, aux={"hier_planted": hier})


# ---------------------------------------------------------------- scheduling

def equal_sum_split(numbers, t: int, b: int):
    """Split ``numbers`` into ``t`` groups each summing to ``b``; ``None`` if impossible."""
    numbers = list(numbers)
    if sum(numbers) != t * b:
        return None
    order = sorted(range(len(numbers)), key=lambda i: -numbers[i])
    loads = [0] * t
    group = [-1] * len(numbers)

    def rec(pos):
        if pos == len(order):
            return all(x == b for x in loads)
        i = order[pos]
        tried = set()
        for j in range(t):
            if loads[j] in tried or loads[j] + numbers[i] > b:
                continue
            tried.add(loads[j])
            loads[j] += numbers[i]
            group[i] = j
            if rec(pos + 1):
                return True
            loads[j] -= numbers[i]
        return False

    return list(group) if rec(0) else None


def has_clique(graph, size: int) -> bool:
    n, edges = as_graph(graph)
    es = set(edges)
    return any(all((u, v) in es for u, v in itertools.combinations(c, 2))
               for c in itertools.combinations(range(n), size))


def scheduling_hardness_instance(variant: str = "paths", numbers=None, b: int | None = None,
                                 strict: bool = False, graph=None, L: int | None = None) -> Instance:
    """DAG plus fixed two-processor assignment (blue = 0, red = 1).

    ``paths``: a main path of ``2tb`` nodes in alternating blue/red runs of
    ``b`` and, per number ``a``, a path of ``a`` red then ``a`` blue nodes.
    The makespan can reach ``n/2`` iff the numbers split into ``t`` groups
    of sum ``b``; with ``strict`` the bounds ``b/4 < a < b/2`` are enforced,
    which makes every group a triple.

    ``bounded-height``: blue nodes for graph nodes, red nodes for edges,
    arcs from nodes to incident edges, and a four-layer component with
    ``L`` red, ``C(L,2)`` blue, ``|V|-L`` red and ``|E|-C(L,2)`` blue nodes
    (empty layers skipped, consecutive layers completely joined). The
    makespan can reach ``|V|+|E|`` iff ``graph`` has an ``L``-clique.
    """
    if variant == "paths":
        if numbers is None or b is None:
            raise ParameterError("the paths variant needs numbers and b")
        nums = [int(a) for a in numbers]
        if not nums or any(a < 1 for a in nums):
            raise ParameterError("numbers must be positive")
        b = int(b)
        if sum(nums) % b:
            raise ParameterError("sum of numbers must be a multiple of b")
        t = sum(nums) // b
        if strict:
            if len(nums) != 3 * t:
                raise ParameterError("strict mode needs 3t numbers")
            if any(not (Fraction(b, 4) < a < Fraction(b, 2)) for a in nums):
                raise ParameterError("strict mode needs b/4 < a_i < b/2")
        proc, arcs = [], []

        def path(colors):
            start = len(proc)
            proc.extend(colors)
            arcs.extend((i, i + 1) for i in range(start, len(proc) - 1))

        path([(r % 2) for r in range(2 * t) for _ in range(b)])
        for a in nums:
            path([1] * a + [0] * a)
        d = Dag(len(proc), arcs)
        split = equal_sum_split(nums, t, b)
        cert = {"target_makespan": d.n // 2, "solvable": split is not None, "t": t}
        params = {"variant": variant, "numbers": nums, "b": b, "strict": strict}
    elif variant == "bounded-height":
        if graph is None or L is None:
            raise ParameterError("the bounded-height variant needs a graph and L")
        nv, edges = as_graph(graph)
        L = int(L)
        pairs = L * (L - 1) // 2
        if not 0 <= L <= nv or pairs > len(edges):
            raise ParameterError("need L <= |V| and C(L,2) <= |E|")
        proc = [0] * nv + [1] * len(edges)
        arcs = []
        for i, (u, v) in enumerate(edges):
            arcs += [(u, nv + i), (v, nv + i)]
        layers = []
        for count, color in ((L, 1), (pairs, 0), (nv - L, 1), (len(edges) - pairs, 0)):
            if count:
                layers.append(list(range(len(proc), len(proc) + count)))
                proc.extend([color] * count)
        for lo, hi in zip(layers, layers[1:]):
            arcs += [(x, y) for x in lo for y in hi]
        d = Dag(len(proc), arcs)
        cert = {"target_makespan": nv + len(edges), "solvable": has_clique((nv, edges), L)}
        params = {"variant": variant, "graph_n": nv, "graph_edges": [f"{a}-{b}" for a, b in edges],
                  "L": L}
    else:
        raise ParameterError("variant must be 'paths' or 'bounded-height'")
    p = Partition(2, proc)
    return Instance("scheduling", None, None, 2, CostMetric.CONN, params, cert, dag=d, partition=p)
