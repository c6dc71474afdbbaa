"""Reductions producing partitioning instances from other problems."""
from __future__ import annotations

import itertools
import math
from fractions import Fraction

import networkx as nx

from ..core import (STRICT, BalanceSpec, CostMetric, Hypergraph, Partition,
                    as_fraction, cost, is_balanced, threshold)
from ..errors import ParameterError
from ..hyperdag import is_hyperdag
from ._common import Builder, Instance
from .blocks import (AT_LEAST, AT_MOST, FixedPools, add_fixed_blocks, add_grid, apply_enforce,
                     color_slack, enforce_set, plan_pools)


def as_graph(graph) -> tuple[int, list[tuple[int, int]]]:
    """Accept ``(n, edges)`` or a networkx graph; return nodes ``0..n-1`` and sorted edges."""
    if isinstance(graph, nx.Graph):
        labels = {v: i for i, v in enumerate(sorted(graph.nodes))}
        n = len(labels)
        raw = [(labels[u], labels[v]) for u, v in graph.edges]
    else:
        n, raw = graph
        n = int(n)
    edges = set()
    for u, v in raw:
        u, v = int(u), int(v)
        if u == v:
            raise ParameterError("graph must be simple (self-loop found)")
        if not (0 <= u < n and 0 <= v < n):
            raise ParameterError("graph edge leaves the node range")
        edges.add((min(u, v), max(u, v)))
    return n, sorted(edges)


# ---------------------------------------------------------------- SpES

def spes_optimum(graph, p: int):
    """Fewest covered nodes over all ``p``-subsets of edges, with the first optimal subset."""
    n, edges = as_graph(graph)
    if not 0 <= p <= len(edges):
        raise ParameterError("need 0 <= p <= |E|")
    best = None
    for combo in itertools.combinations(range(len(edges)), p):
        covered = len({x for i in combo for x in edges[i]})
        if best is None or covered < best[0]:
            best = (covered, combo)
    return best


def _spes_general_sizes(n_g, n_e, p, eps, m):
    s = n_e * m + n_g
    n1 = 2 * s
    while True:
        n1 += 1
        if not s < (1 - eps) * n1 / 2:
            continue
        cap = threshold(n1, eps, 2)
        a2 = math.floor((1 - eps) * n1 / 2) - p * m
        a1 = n1 - s - a2
        if a2 < max(n_g + 1, 3) or a1 < max(m, 3):
            continue
        if a1 + a2 <= cap:
            continue
        red = a2 + p * m
        if red > cap or n1 - red > cap:
            continue
        return n1, a1, a2, s


def _spes_degree2_sizes(n_g, n_e, p, eps, ell):
    blk = ell * ell + 2
    s = n_e * blk + n_g
    n1 = 2 * s
    while True:
        n1 += 1
        if not s < (1 - eps) * n1 / 2:
            continue
        cap = threshold(n1, eps, 2)
        la2 = cap - (n_e - p) * blk - n_g
        la = math.isqrt(max(la2, 0))
        if la * la != la2 or la < max(n_g, 2):
            continue
        a2 = n1 - la2 - s
        lb = math.isqrt(a2)
        if lb < 2 or a2 - lb * lb > 2 * lb:
            continue
        if not la2 + lb * lb - n_g * n_g > (1 + eps) * n1 / 2:
            continue
        if n1 - cap > cap:
            continue
        return n1, la, a2, lb, s


def spes_reduction(graph, p: int, eps=0, k: int = 2, variant: str = "general",
                   block_size: int | None = None) -> Instance:
    """Partitioning instance whose optimum equals the SpES optimum of ``graph``.

    Colour 0 is the side of ``A`` and the nodes ``b_v``; colour 1 holds
    ``A'`` and the edge gadgets chosen in the planted solution.
    """
    if k != 2:
        raise ParameterError("only k = 2 is supported")
    eps = as_fraction(eps)
    if not 0 <= eps < 1:
        raise ParameterError("need 0 <= eps < 1")
    n_g, edges = as_graph(graph)
    if not 0 <= p <= len(edges):
        raise ParameterError("need 0 <= p <= |E|")
    opt, chosen = spes_optimum((n_g, edges), p)
    incident = [[] for _ in range(n_g)]
    for i, (u, v) in enumerate(edges):
        incident[u].append(i)
        incident[v].append(i)
    bld = Builder()
    red_nodes: list = []
    cert: dict = {"spes_optimum": opt, "planted_cost": opt, "variant": variant,
                  "chosen_edges": [f"{edges[i][0]}-{edges[i][1]}" for i in chosen]}
    aux: dict = {}
    if variant == "general":
        m = block_size or max(n_g + 1, 3)
        if m < n_g + 1:
            raise ParameterError("block size must be at least |V(G)| + 1")
        n1, a1, a2, s = _spes_general_sizes(n_g, len(edges), p, eps, m)
        A = bld.block(a1)
        A2 = bld.block(a2)
        B = [bld.block(m) for _ in edges]
        bv = bld.nodes(n_g)
        # main hyperedges: b_v plus one node of each incident edge block (endpoint-specific)
        for v in range(n_g):
            pins = [bv[v]] + [B[i][0 if edges[i][0] == v else 1] for i in incident[v]]
            bld.edge(pins)
        for v in range(n_g):
            for j in range(m):
                bld.edge([A[(v * m + j) % a1], bv[v]])
        red_nodes = A2 + [x for i in chosen for x in B[i]]
        cert.update(block_size=m, n_prime=n1, size_A=a1, size_A_prime=a2, s=s)
        assert bld.n == n1
    elif variant == "degree2":
        ell = 2 * n_g
        if ell < 2:
            raise ParameterError("degree2 variant needs at least one node")
        n1, la, a2, lb, s = _spes_degree2_sizes(n_g, len(edges), p, eps, ell)
        row_class, col_class = [], []
        a_core, bv, _, rows, cols = add_grid(bld, la, n_g, 0)
        row_class += rows
        col_class += cols
        extra = a2 - lb * lb
        r_out = min(extra, lb)
        a2_core, ro, co, rows, cols = add_grid(bld, lb, r_out, extra - r_out)
        row_class += rows
        col_class += cols
        outs = []
        for i, (u, v) in enumerate(edges):
            core, o, _, rows, cols = add_grid(bld, ell, 2, 0)
            row_class += rows
            col_class += cols
            outs.append((core, o))
        for v in range(n_g):
            pins = [bv[v]] + [outs[i][1][0 if edges[i][0] == v else 1] for i in incident[v]]
            col_class.append(bld.edge(pins))
        red_nodes = list(a2_core) + list(ro) + list(co)
        for i in chosen:
            red_nodes += outs[i][0] + outs[i][1]
        cert.update(ell=ell, ell_A=la, ell_A_prime=lb, size_A_prime=a2, n_prime=n1, s=s)
        aux["row_class"] = row_class
        aux["col_class"] = col_class
        assert bld.n == n1
    else:
        raise ParameterError("variant must be 'general' or 'degree2'")
    h = bld.hypergraph()
    spec = BalanceSpec.single(eps)
    red = set(red_nodes)
    planted = Partition(2, [1 if v in red else 0 for v in range(h.n)])
    assert is_balanced(h, planted, spec), "planted SpES partition is unbalanced"
    assert cost(h, planted, CostMetric.CUTNET) == opt, "planted SpES partition has the wrong cost"
    return Instance("spes", h, spec, 2, CostMetric.CUTNET,
                    {"p": p, "eps": eps, "variant": variant, "graph_n": n_g, "graph_m": len(edges)},
                    cert, planted, aux=aux)


# ---------------------------------------------------------------- OVP and 3-colouring

def _finish_multi(bld: Builder, red_block, planted_red, eps, name, params, cert):
    h = bld.hypergraph()
    spec = bld.spec()
    planted = None
    if planted_red is not None:
        assign = [1] * h.n
        for v in list(red_block) + list(planted_red):
            assign[v] = 0
        color_slack(bld, assign)
        planted = Partition(2, assign)
        assert is_balanced(h, planted, spec), f"{name}: planted partition is unbalanced"
        assert cost(h, planted, CostMetric.CUTNET) == 0, f"{name}: planted partition is cut"
    return Instance(name, h, spec, 2, CostMetric.CUTNET, params, cert, planted)


def has_orthogonal_pair(vectors):
    for i, j in itertools.combinations(range(len(vectors)), 2):
        if all(a * b == 0 for a, b in zip(vectors[i], vectors[j])):
            return (i, j)
    return None


def ovp_reduction(vectors, eps=0) -> Instance:
    """Multi-constraint instance with a cost-0 partition iff two vectors are orthogonal.

    Red (colour 0) anchors select vectors; a red anchor forces every pin of
    its vector's hyperedge red, and each dimension admits at most one red
    pin.
    """
    vectors = [tuple(int(x) for x in vec) for vec in vectors]
    if len(vectors) < 2:
        raise ParameterError("need at least two vectors")
    dim = len(vectors[0])
    if dim < 1 or any(len(v) != dim for v in vectors):
        raise ParameterError("vectors must share a positive dimension")
    if any(x not in (0, 1) for v in vectors for x in v):
        raise ParameterError("vectors must be binary")
    eps = as_fraction(eps)
    cnt = len(vectors)
    anchor_c = enforce_set(cnt, 2, eps, AT_LEAST)
    dim_c = enforce_set(cnt, 1, eps, AT_MOST)
    m0 = plan_pools([anchor_c] + [dim_c] * dim)
    bld = Builder()
    red_blk, blue_blk = add_fixed_blocks(bld, m0, eps, core=1)
    pools = FixedPools(red_blk[1:], blue_blk[1:])
    u = bld.nodes(cnt)
    vn = [bld.nodes(dim) for _ in range(cnt)]
    for i, vec in enumerate(vectors):
        bld.edge([u[i]] + [vn[i][j] for j in range(dim) if vec[j]])
    apply_enforce(bld, u, anchor_c, pools)
    for j in range(dim):
        apply_enforce(bld, [vn[i][j] for i in range(cnt)], dim_c, pools)
    pair = has_orthogonal_pair(vectors)
    planted_red = None
    if pair is not None:
        planted_red = []
        for i in pair:
            planted_red += [u[i]] + [vn[i][j] for j in range(dim) if vectors[i][j]]
    cert = {"orthogonal_pair": pair is not None, "optimum_zero": pair is not None,
            "fixed_block_size": m0}
    if pair is not None:
        cert["pair"] = list(pair)
    return _finish_multi(bld, red_blk, planted_red, eps, "ovp",
                         {"vectors": ["".join(map(str, v)) for v in vectors], "eps": eps}, cert)


def three_coloring(graph):
    """First proper 3-colouring in lexicographic order, or ``None``."""
    n, edges = as_graph(graph)
    for col in itertools.product(range(3), repeat=n):
        if all(col[u] != col[v] for u, v in edges):
            return col
    return None


def coloring_reduction(graph, eps=0) -> Instance:
    """Multi-constraint instance with a cost-0 partition iff ``graph`` is 3-colourable."""
    n, edges = as_graph(graph)
    eps = as_fraction(eps)
    incident = [[] for _ in range(n)]
    for i, (u, v) in enumerate(edges):
        incident[u].append(i)
        incident[v].append(i)
    most1 = enforce_set(3, 1, eps, AT_MOST)
    least1 = enforce_set(3, 1, eps, AT_LEAST)
    pair1 = enforce_set(2, 1, eps, AT_MOST)
    m0 = plan_pools([most1, least1] * n + [pair1] * (3 * len(edges)))
    bld = Builder()
    red_blk, blue_blk = add_fixed_blocks(bld, m0, eps, core=1)
    pools = FixedPools(red_blk[1:], blue_blk[1:])
    w = {}
    for v in range(n):
        for e in incident[v]:
            for i in range(3):
                w[v, e, i] = bld.nodes(1)[0]
    what = {}
    for v in range(n):
        for i in range(3):
            what[v, i, 1], what[v, i, 2] = bld.nodes(2)
    for v in range(n):
        for i in range(3):
            bld.edge([w[v, e, i] for e in incident[v]] + [what[v, i, 1], what[v, i, 2]])
    for v in range(n):
        apply_enforce(bld, [what[v, i, 1] for i in range(3)], most1, pools)
        apply_enforce(bld, [what[v, i, 2] for i in range(3)], least1, pools)
    for e, (a, b) in enumerate(edges):
        for i in range(3):
            apply_enforce(bld, [w[a, e, i], w[b, e, i]], pair1, pools)
    col = three_coloring((n, edges))
    planted_red = None
    if col is not None:
        planted_red = []
        for v in range(n):
            i = col[v]
            planted_red += [w[v, e, i] for e in incident[v]] + [what[v, i, 1], what[v, i, 2]]
    cert = {"three_colorable": col is not None, "optimum_zero": col is not None,
            "fixed_block_size": m0}
    return _finish_multi(bld, red_blk, planted_red, eps, "coloring",
                         {"graph_n": n, "graph_edges": [f"{a}-{b}" for a, b in edges], "eps": eps},
                         cert)


# ---------------------------------------------------------------- c constraints -> k-section

def multiconstraint_to_ksection(h: Hypergraph, spec: BalanceSpec, k: int = 2) -> Instance:
    """Single-constraint ``k``-section instance with the same optimum.

    Nodes outside every constraint get ``k-1`` isolated partners each. With
    relaxed rounding a constraint whose size is not divisible by ``k`` is
    padded with isolated members; with strict rounding it is rejected. Every
    node of the ``i``-th constraint then becomes a block of ``n0^i`` nodes,
    whose first node keeps the original hyperedges; a single constraint
    covering every node needs no inflation. Block hyperedges carry
    a weight large enough that splitting a block costs more than cutting
    every original hyperedge.
    """
    if k < 2:
        raise ParameterError("k must be at least 2")
    cons = list(spec.constraints)
    if not cons:
        raise ParameterError("need at least one constraint")
    if any(c.eps != 0 for c in cons):
        raise ParameterError("the reduction needs epsilon = 0 on every constraint")
    subsets = [frozenset(c.nodes(h.n)) for c in cons]
    owner = [-1] * h.n
    for i, sub in enumerate(subsets):
        for v in sub:
            owner[v] = i
    pads = []
    for c, sub in zip(cons, subsets):
        rem = (-len(sub)) % k
        if rem and c.mode == STRICT:
            raise ParameterError(f"constraint of size {len(sub)} is not divisible by k = {k}")
        pads.append(rem)
    free = [v for v in range(h.n) if owner[v] < 0]
    n0 = h.n + sum(pads) + (k - 1) * len(free)
    if len(cons) == 1 and not free:
        # one constraint over every node: padding alone already gives a k-section
        sizes = [1]
    else:
        sizes = [n0 ** (i + 1) for i in range(len(cons))]
    worst = (k - 1) * sum(h.weights)
    smallest = sizes[0]
    split = 1 if smallest <= 2 else smallest - 1
    bw = max(1, worst // split + 1)
    bld = Builder()
    rep, blocks = [], []
    for v in range(h.n):
        if owner[v] >= 0:
            nodes = bld.block(sizes[owner[v]], bw)
        else:
            nodes = bld.nodes(1)
        rep.append(nodes[0])
        blocks.append(nodes)
    pad_blocks = [[bld.block(sizes[i], bw) for _ in range(pads[i])] for i in range(len(cons))]
    partners = {v: bld.nodes(k - 1) for v in free}
    for e, wt in zip(h.edges, h.weights):
        bld.edge([rep[v] for v in e], wt)
    target = bld.hypergraph()
    cert = {"n0": n0, "block_sizes": sizes, "block_weight": bw, "n_prime": target.n,
            "pads": pads, "free_nodes": len(free)}
    aux = {"rep": rep, "blocks": blocks, "pad_blocks": pad_blocks, "partners": partners,
           "owner": owner}
    return Instance("multiconstraint", target, BalanceSpec.single(0), k, CostMetric.CONN,
                    {"k": k, "c": len(cons)}, cert, aux=aux)


def lift_partition(inst: Instance, p: Partition) -> Partition:
    """Map a balanced source partition to the target of :func:`multiconstraint_to_ksection`.

    Padding blocks go to the lightest part of their constraint and the
    isolated partners of free nodes fill up the lightest parts.
    """
    k, aux = inst.k, inst.aux
    assign = [0] * inst.h.n
    for v, nodes in enumerate(aux["blocks"]):
        for x in nodes:
            assign[x] = p.assign[v]
    for i, pads in enumerate(aux["pad_blocks"]):
        counts = [0] * k
        for v, own in enumerate(aux["owner"]):
            if own == i:
                counts[p.assign[v]] += 1
        for blk in pads:
            c = min(range(k), key=counts.__getitem__)
            counts[c] += 1
            for x in blk:
                assign[x] = c
    partner_nodes = {x for extra in aux["partners"].values() for x in extra}
    sizes = [0] * k
    for x in range(inst.h.n):
        if x not in partner_nodes:
            sizes[assign[x]] += 1
    for x in sorted(partner_nodes):
        c = min(range(k), key=sizes.__getitem__)
        assign[x] = c
        sizes[c] += 1
    if max(sizes) > inst.h.n // k:
        raise ParameterError("source partition does not lift to a balanced target partition")
    return Partition(k, assign)


# ---------------------------------------------------------------- hyperDAG blocks

def hyperdag_np_instance(h: Hypergraph, eps, k: int = 2, L: int | None = None,
                         m: int | None = None) -> Instance:
    """HyperDAG with the same cost-at-most-``L`` solutions as ``h``.

    Each node becomes a densest hyperDAG on ``m`` nodes whose last node keeps
    the original hyperedges, and every hyperedge gets a private light node.
    ``eps_prime`` is chosen so that ``(1+eps')n'/k`` equals
    ``m * floor((1+eps)|V|/k) + |E|`` exactly.
    """
    eps = as_fraction(eps)
    if eps <= 0:
        raise ParameterError("the construction needs epsilon > 0")
    if eps >= k - 1:
        raise ParameterError("epsilon must be below k-1")
    nv, ne = h.n, h.m
    if nv == 0:
        raise ParameterError("need at least one node")
    worst = (k - 1) * sum(h.weights)
    L = worst if L is None else int(L)
    if L < 0:
        raise ParameterError("L must be nonnegative")
    if math.floor((1 + eps) * nv / k) * k < nv:
        raise ParameterError("the source balance constraint admits no partition")
    lower = max(L * (nv + 1) + ne, Fraction((k - 1) * ne) / (eps * nv))
    if m is None:
        m = math.floor(lower) + 1
    if not m > lower or m < 2:
        raise ParameterError(f"m must exceed {lower}")
    bld = Builder()
    last = []
    for _ in range(nv):
        nodes = bld.nodes(m)
        for i in range(m - 1):
            bld.edge(nodes[i:])
        last.append(nodes[-1])
    light = bld.nodes(ne)
    for j, (e, wt) in enumerate(zip(h.edges, h.weights)):
        bld.edge([light[j]] + [last[v] for v in e], wt)
    target = bld.hypergraph()
    n1 = target.n
    base = math.floor((1 + eps) * nv / k)
    cap = m * base + ne
    eps_prime = Fraction(k * cap, n1) - 1
    formula_eps = Fraction((1 + eps) * m * nv + k * ne, m * nv + ne) - 1
    if not 0 < eps_prime < k - 1:
        raise ParameterError("derived epsilon' is not in (0, k-1); increase m")
    assert threshold(n1, eps_prime, k) == cap
    assert is_hyperdag(target).ok
    cert = {"eps_prime": eps_prime, "eps_prime_formula": formula_eps, "cap": cap, "m": m, "L": L,
            "n_prime": n1, "is_hyperdag": True}
    return Instance("hyperdag-np", target, BalanceSpec.single(eps_prime), k, CostMetric.CONN,
                    {"eps": eps, "k": k, "L": L, "m": m}, cert,
                    aux={"last": last, "light": light})
