"""Batch property suites, one per acceptance criterion.

Every suite takes keyword knobs (sizes, trial counts, ``seed``) and
returns a :class:`Report`. Checks recompute certified values with the
exact solvers rather than trusting generator output. Failures are always
listed with the values involved; passing checks are listed when
``verbose`` is set, and each suite adds summary lines with the key numbers.
"""
from __future__ import annotations

import inspect
import itertools
import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

import networkx as nx

from . import gadgets as gd
from .core import BalanceSpec, Constraint, CostMetric, Hypergraph, Partition, cost, is_balanced
from .errors import ParameterError
from .hierarchy import (HierTopology, count_assignments, enumerate_assignments,
                        hierarchical_optimum_bruteforce, optimal_assignment_bruteforce,
                        optimal_assignment_matching, two_step)
from .hyperdag import Dag, dag_to_hyperdag, is_hyperdag, is_hyperdag_oracle, random_dag
from .scheduling import optimal_makespan, optimal_makespan_fixed_partition
from .solvers import (branch_and_bound, brute_force_optimum, multi_constraint_bounded_solver,
                      recursive_partitioner)

EPS_CHOICES = (Fraction(0), Fraction(1, 4))


@dataclass
class Report:
    suite: str
    verbose: bool = False
    checks: int = 0
    failures: int = 0
    lines: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def check(self, ok: bool, text) -> bool:
        """Record one check; ``text`` may be a callable so it is built only when needed."""
        self.checks += 1
        if not ok:
            self.failures += 1
            self.lines.append("FAIL " + (text() if callable(text) else text))
        elif self.verbose:
            self.lines.append("ok   " + (text() if callable(text) else text))
        return ok

    def note(self, text: str) -> None:
        self.lines.append(text)

    def summary(self) -> str:
        verdict = "PASS" if self.ok else "FAIL"
        return (f"{verdict} {self.suite}: {self.checks} checks, {self.failures} failures, "
                f"{self.seconds:.1f}s")

    def render(self) -> str:
        return "\n".join(self.lines + [self.summary()])


def random_hypergraph(rng: random.Random, n: int, m: int, max_size: int = 4,
                      max_weight: int = 1) -> Hypergraph:
    edges, weights = [], []
    for _ in range(m):
        size = rng.randint(1, min(max_size, n))
        edges.append(rng.sample(range(n), size))
        weights.append(rng.randint(1, max_weight))
    return Hypergraph(n, edges, weights)


def _random_graph(rng: random.Random, n: int, p: float = 0.5):
    return n, [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p]


def _oracle_sweep(rep: Report, rng, trials, n_max, m_max, ks, lmax, constraints):
    agree = 0
    for t in range(trials):
        n = rng.randint(1, n_max)
        h = random_hypergraph(rng, n, rng.randint(0, m_max), 4, rng.choice((1, 1, 2)))
        k = rng.choice(ks)
        metric = rng.choice((CostMetric.CUTNET, CostMetric.CONN))
        if constraints == 1:
            spec = BalanceSpec.single(rng.choice(EPS_CHOICES))
        else:
            nodes = list(range(n))
            rng.shuffle(nodes)
            cut = rng.randint(0, n)
            rest = rng.randint(cut, n)
            spec = BalanceSpec((Constraint(frozenset(nodes[:cut]), rng.choice(EPS_CHOICES)),
                                Constraint(frozenset(nodes[cut:rest]), rng.choice(EPS_CHOICES))))
        ref = brute_force_optimum(h, spec, metric, k)
        opt = None if ref is None else ref.cost
        ok_all = True
        for L in range(lmax + 1):
            sol = multi_constraint_bounded_solver(h, spec, k, L, metric)
            want = opt is not None and opt <= L
            tag = f"trial {t} n={n} m={h.m} k={k} {metric.value} L={L}"
            ok_all &= rep.check((sol is not None) == want,
                                lambda: f"{tag}: solver {'found' if sol else 'none'}, optimum {opt}")
            if sol is not None:
                ok_all &= rep.check(sol.cost == opt and sol.cost <= L,
                                    lambda: f"{tag}: solver cost {sol.cost} vs optimum {opt}")
                ok_all &= rep.check(is_balanced(h, sol.partition, spec)
                                    and cost(h, sol.partition, metric) == sol.cost,
                                    lambda: f"{tag}: returned partition fails re-check")
        agree += ok_all
    rep.note(f"instances={trials} agreeing={agree} L=0..{lmax} constraints={constraints}")


def suite_solver_oracle(rep: Report, *, trials=500, n=9, m=7, lmax=5, seed=0):
    """Bounded-cost solver against brute force, single constraint, k in {2, 3}."""
    _oracle_sweep(rep, random.Random(seed), trials, n, m, (2, 3), lmax, 1)


def suite_multi_oracle(rep: Report, *, trials=500, n=9, m=7, lmax=5, seed=0):
    """Same sweep with two disjoint constraints."""
    _oracle_sweep(rep, random.Random(seed), trials, n, m, (2, 3), lmax, 2)


def suite_recognition(rep: Report, *, exhaustive_n=4, max_edges=3, trials=10000, n=12,
                      dags=1000, seed=0):
    """Peeling recognition against the subset oracle, and DAG round trips."""
    rng = random.Random(seed)
    total = 0
    for nn in range(1, exhaustive_n + 1):
        subsets = [c for r in range(1, nn + 1) for c in itertools.combinations(range(nn), r)]
        for r in range(max_edges + 1):
            for es in itertools.combinations(subsets, r):
                h = Hypergraph(nn, es)
                a, b = bool(is_hyperdag(h)), is_hyperdag_oracle(h)
                rep.check(a == b, lambda: f"n={nn} edges={es}: peeling {a}, oracle {b}")
                total += 1
    yes = 0
    for t in range(trials):
        nn = rng.randint(1, n)
        h = random_hypergraph(rng, nn, rng.randint(0, nn), rng.randint(2, 4))
        res = is_hyperdag(h)
        b = is_hyperdag_oracle(h)
        yes += b
        rep.check(bool(res) == b, lambda: f"random {t} {h.edges}: peeling {bool(res)}, oracle {b}")
        if not res:
            rep.check(_residual_ok(h, res.residual), lambda: f"random {t}: bad residual")
    for t in range(dags):
        d = random_dag(rng.randint(1, n), rng.choice((0.1, 0.25, 0.5)), rng)
        h, _ = dag_to_hyperdag(d)
        res = is_hyperdag(h)
        rep.check(bool(res), lambda: f"dag {t}: hyperDAG of {d.arcs} not recognized")
        if res:
            back, _ = dag_to_hyperdag(res.witness)
            rep.check(back.same_edges(h), lambda: f"dag {t}: witness re-converts differently")
    rep.note(f"exhaustive={total} random={trials} (hyperDAGs {yes}) round_trips={dags}")


def _residual_ok(h: Hypergraph, residual) -> bool:
    inside = [e for e in h.edges if set(e) <= residual]
    deg = {v: 0 for v in residual}
    for e in inside:
        for v in e:
            deg[v] += 1
    return bool(residual) and all(x >= 2 for x in deg.values())


def suite_grid(rep: Report, *, lmin=2, lmax=4, samples=100000, seed=0):
    """Cut cost of any core colouring is at least sqrt(minority count)."""
    rng = random.Random(seed)
    for ell in range(lmin, lmax + 1):
        g = gd.grid(ell)
        cells = ell * ell
        exhaustive = (1 << cells) <= samples
        masks = range(1 << cells) if exhaustive else (rng.getrandbits(cells)
                                                      for _ in range(samples))
        lines = [sum(1 << v for v in e) for e in g.h.edges]
        worst = None
        for mask in masks:
            t0 = min(bin(mask).count("1"), cells - bin(mask).count("1"))
            c = sum(1 for ln in lines if 0 < mask & ln != ln)
            rep.check(c * c >= t0, lambda: f"ell={ell} colouring {mask:b}: cost {c} < sqrt({t0})")
            if t0 and (worst is None or Fraction(c * c, t0) < worst[0]):
                worst = (Fraction(c * c, t0), c, t0)
        rep.note(f"ell={ell} {'exhaustive' if exhaustive else f'{samples} samples'}: "
                 f"min cost^2/t0 = {worst[0]} (cost {worst[1]}, t0 {worst[2]})")


def suite_block(rep: Report, *, bmin=3, bmax=5, colors=3):
    """Splitting a block of b nodes costs at least b-1."""
    for b in range(bmin, bmax + 1):
        h = gd.block(b)
        best = None
        for k in range(2, colors + 1):
            for assign in itertools.product(range(k), repeat=b):
                if len(set(assign)) < 2:
                    continue
                c = cost(h, Partition(k, assign), CostMetric.CUTNET)
                rep.check(c >= b - 1, lambda: f"b={b} colouring {assign}: cost {c} < {b - 1}")
                best = c if best is None else min(best, c)
        rep.note(f"b={b}: cheapest split costs {best} >= {b - 1}")


def _small_graphs(max_nodes):
    for g in nx.graph_atlas_g():
        if 1 <= g.number_of_nodes() <= max_nodes:
            yield g


def suite_spes(rep: Report, *, max_nodes=4, variant="general", eps=0):
    """Generated optimum equals the SpES optimum on every small graph and p."""
    count = 0
    for g in _small_graphs(max_nodes):
        nv, edges = gd.as_graph(g)
        for p in range(0, len(edges) + 1):
            inst = gd.spes_reduction((nv, edges), p, eps, variant=variant)
            want = gd.spes_optimum((nv, edges), p)[0]
            planted = inst.planted
            rep.check(is_balanced(inst.h, planted, inst.spec)
                      and cost(inst.h, planted, inst.metric) == inst.certificate["planted_cost"],
                      lambda: f"graph {edges} p={p}: planted partition fails re-check")
            sol = branch_and_bound(inst.h, inst.spec, inst.metric, 2,
                                   upper_bound=inst.certificate["planted_cost"])
            got = None if sol is None else sol.cost
            rep.check(got == want, lambda: f"graph n={nv} {edges} p={p}: partition optimum "
                                           f"{got}, SpES optimum {want}")
            if variant == "degree2":
                rep.check(inst.h.max_degree <= 2, lambda: f"graph {edges}: degree above 2")
            count += 1
    rep.note(f"{variant}: {count} (graph, p) instances")


def suite_ovp(rep: Report, *, trials=200, max_vectors=4, max_dim=4, seed=0):
    """Multi-constraint optimum is 0 iff an orthogonal pair exists."""
    rng = random.Random(seed)
    positive = 0
    for t in range(trials):
        cnt = rng.randint(2, max_vectors)
        dim = rng.randint(1, max_dim)
        vecs = [tuple(rng.randint(0, 1) for _ in range(dim)) for _ in range(cnt)]
        eps = rng.choice(EPS_CHOICES)
        inst = gd.ovp_reduction(vecs, eps)
        want = any(all(a * b == 0 for a, b in zip(x, y))
                   for x, y in itertools.combinations(vecs, 2))
        positive += want
        sol = multi_constraint_bounded_solver(inst.h, inst.spec, 2, 0, inst.metric)
        rep.check((sol is not None) == want,
                  lambda: f"trial {t} {vecs} eps={eps}: zero-cost {sol is not None}, pair {want}")
        if sol is not None:
            rep.check(is_balanced(inst.h, sol.partition, inst.spec)
                      and cost(inst.h, sol.partition, inst.metric) == 0,
                      lambda: f"trial {t}: zero-cost partition fails re-check")
    rep.note(f"vector sets={trials} with orthogonal pair={positive}")


def _three_colorable(n, edges):
    return any(all(c[u] != c[v] for u, v in edges) for c in itertools.product(range(3), repeat=n))


def suite_coloring(rep: Report, *, trials=20, max_n=5, seed=0):
    """Optimum 0 iff the graph is 3-colourable."""
    rng = random.Random(seed)
    named = [("triangle", (3, [(0, 1), (1, 2), (0, 2)]), True),
             ("K4", (4, list(itertools.combinations(range(4), 2))), False)]
    graphs = [(name, g, want) for name, g, want in named]
    for t in range(trials):
        n, edges = _random_graph(rng, rng.randint(1, max_n), rng.choice((0.4, 0.6, 0.8)))
        graphs.append((f"random {t}", (n, edges), _three_colorable(n, edges)))
    colorable = 0
    for name, g, want in graphs:
        inst = gd.coloring_reduction(g, rng.choice(EPS_CHOICES))
        sol = multi_constraint_bounded_solver(inst.h, inst.spec, 2, 0, inst.metric)
        colorable += want
        rep.check((sol is not None) == want,
                  lambda: f"{name} {g}: zero-cost {sol is not None}, 3-colourable {want}")
        if sol is not None:
            rep.check(is_balanced(inst.h, sol.partition, inst.spec),
                      lambda: f"{name}: zero-cost partition unbalanced")
    rep.note(f"graphs={len(graphs)} 3-colourable={colorable}")


def suite_recursive(rep: Report, *, sizes=(24, 48)):
    """Optimal-per-step recursion pays Theta(n) while a direct 4-way split pays O(1)."""
    ratios = []
    for n in sizes:
        inst = gd.recursive_counterexample(n)
        hp, steps = recursive_partitioner(inst.h, (2, 2), 0, CostMetric.CONN,
                                          step_oracle=branch_and_bound)
        rec_cost = cost(inst.h, hp.partition, CostMetric.CONN)
        direct = branch_and_bound(inst.h, inst.spec, CostMetric.CONN, 4)
        conn = inst.certificate["connectors"]
        rep.check(steps[0].cost == 0, lambda: f"n={n}: first split costs {steps[0].cost}")
        rep.check(rec_cost >= n // 12 - 1,
                  lambda: f"n={n}: recursive cost {rec_cost} < n/12 - 1 = {n // 12 - 1}")
        rep.check(direct is not None and direct.cost == conn,
                  lambda: f"n={n}: direct optimum {direct and direct.cost} != connectors {conn}")
        ratio = Fraction(rec_cost, direct.cost)
        ratios.append(ratio)
        rep.note(f"n={n}: recursive={rec_cost} (steps {[s.cost for s in steps]}) "
                 f"direct={direct.cost} connectors={conn} ratio={ratio}")
    for a, b in zip(ratios, ratios[1:]):
        rep.check(b > a, lambda: f"ratio does not grow: {a} then {b}")


def _topology_for(k: int, g1) -> HierTopology:
    if k == 4:
        return HierTopology((2, 2), (g1, 1))
    if k % 2 or k < 4:
        raise ParameterError("k must be an even number >= 4")
    return HierTopology((k // 2, 2), (g1, 1))


def suite_twostep(rep: Report, *, trials=100, n=9, k=4, g1=4, seed=0):
    """Two-step sandwich on random instances, and the counterexample ratio."""
    rng = random.Random(seed)
    done = 0
    for t in range(trials):
        gg = rng.choice((2, 4))
        T = HierTopology((2, 2), (gg, 1))
        nn = rng.randint(4, n)
        h = random_hypergraph(rng, nn, rng.randint(1, 7), 4, rng.choice((1, 2)))
        eps = rng.choice(EPS_CHOICES)
        spec = BalanceSpec.single(eps, "relaxed-ceil")
        opt = hierarchical_optimum_bruteforce(h, T, spec)
        ts = two_step(h, T, eps, mode="relaxed-ceil")
        if opt is None or ts is None:
            rep.check(opt is None and ts is None, lambda: f"trial {t}: feasibility differs")
            continue
        lo, mid = opt[1], ts[1]
        rep.check(lo <= mid <= gg * lo,
                  lambda: f"trial {t} n={nn} g1={gg}: optimum {lo}, two-step {mid}")
        done += 1
    rep.note(f"random instances with b=(2,2): {done}")
    T = _topology_for(k, g1)
    inst = gd.twostep_counterexample(T)
    cert = inst.certificate
    m = cert["m"]
    std = brute_force_optimum(inst.h, inst.spec, CostMetric.CONN, T.k)
    rep.check(std.cost == cert["standard_optimum"],
              lambda: f"standard optimum {std.cost} != certified {cert['standard_optimum']}")
    _, ts_cost = optimal_assignment_bruteforce(inst.h, std.partition, T)
    rep.check(ts_cost == cert["twostep_cost"],
              lambda: f"two-step cost {ts_cost} != certified {cert['twostep_cost']}")
    opt = hierarchical_optimum_bruteforce(inst.h, T, inst.spec)[1]
    rep.check(opt == cert["hier_optimum"],
              lambda: f"hierarchical optimum {opt} != certified {cert['hier_optimum']}")
    c = opt - (T.k - 1) * m
    ratio = ts_cost / opt
    bound = (sum(T.g[i] * Fraction(T.b[i] - 1, T.b[i]) * math.prod(T.b[i:]) for i in range(T.d))
             / ((T.k - 1) + Fraction(c, m)))
    rep.check(ratio >= bound, lambda: f"ratio {ratio} < {bound}")
    floor = Fraction(T.b[0] - 1, T.b[0]) * T.g[0]
    rep.check(ratio >= floor, lambda: f"ratio {ratio} < (b1-1)/b1 * g1 = {floor}")
    rep.note(f"counterexample k={T.k} g=({','.join(map(str, T.g))}) m={m}: standard={std.cost} "
             f"two-step={ts_cost} optimum={opt} (extra {c}) ratio={ratio} "
             f"bound={bound} floor={floor}")


def _topologies(max_f: int, max_k: int = 24):
    def rec(prefix, prod):
        if prefix:
            yield tuple(prefix)
        for b in range(2, max_k // prod + 1):
            yield from rec(prefix + [b], prod * b)

    for b in rec([], 1):
        T = HierTopology(b, (1,) * len(b))
        if count_assignments(T) <= max_f:
            yield T


def suite_assignment(rep: Report, *, trials=200, ks=(4, 6, 8), max_f=10000, seed=0):
    """Matching assignment equals brute force; f(k) equals the enumeration size."""
    rng = random.Random(seed)
    for t in range(trials):
        k = rng.choice(ks)
        T = HierTopology((k // 2, 2), (rng.choice((1, 2, 3, Fraction(5, 2))), 1))
        hc = random_hypergraph(rng, k, rng.randint(0, 2 * k), 4, 3)
        p = Partition(k, range(k))
        _, a = optimal_assignment_matching(hc, None, T)
        _, b = optimal_assignment_bruteforce(hc, p, T)
        rep.check(a == b, lambda: f"trial {t} k={k} g1={T.g[0]}: matching {a}, brute force {b}")
    counted = 0
    for T in _topologies(max_f):
        f = count_assignments(T)
        got = len(enumerate_assignments(T))
        rep.check(f == got, lambda: f"b={T.b}: f={f} but {got} enumerated")
        counted += 1
    for b, want in (((2, 2), 3), ((2, 3), 10)):
        f = count_assignments(HierTopology(b, (1,) * len(b)))
        rep.check(f == want, lambda: f"f({b}) = {f}, expected {want}")
    rep.note(f"matching trials={trials}; topologies with f <= {max_f}: {counted}")


def _partition_brute(numbers, t, b) -> bool:
    for labels in itertools.product(range(t), repeat=len(numbers)):
        sums = [0] * t
        for a, j in zip(numbers, labels):
            sums[j] += a
        if all(s == b for s in sums):
            return True
    return False


HARDNESS_CASES = (((3, 4, 5), 12), ((2, 3, 5), 10), ((3, 3, 4, 4, 5, 5), 12),
                  ((3, 3, 3, 5, 5, 5), 12), ((4, 4, 4, 4, 4, 4), 12), ((3, 3, 3, 3, 4, 4), 10),
                  ((2, 2, 2, 3, 3, 4), 8), ((1, 1, 1, 1, 3, 5), 6))


def suite_scheduling(rep: Report, *, nmax=20, ks=(1, 2, 3), cases=HARDNESS_CASES):
    """Makespan identities and the hardness certificates."""
    for k in ks:
        for n in range(1, nmax + 1):
            path = Dag(n, [(i, i + 1) for i in range(n - 1)])
            mu = optimal_makespan(path, k)
            rep.check(mu == n, lambda: f"path n={n} k={k}: mu={mu}")
        for size in range(1, nmax // k + 1):
            arcs = []
            for c in range(k):
                base = c * size
                arcs += [(base + i, base + i + 1) for i in range(size - 1)]
            d = Dag(k * size, arcs)
            mu = optimal_makespan(d, k)
            rep.check(mu == size, lambda: f"{k} components of {size}: mu={mu}")
            p = Partition(k, [v // size for v in range(k * size)])
            mu_p = optimal_makespan_fixed_partition(d, p, k)
            rep.check(mu_p == mu, lambda: f"{k} components of {size}: mu_p={mu_p} != mu={mu}")
    for nums, b in cases:
        inst = gd.scheduling_hardness_instance("paths", nums, b)
        t = sum(nums) // b
        mu_p = optimal_makespan_fixed_partition(inst.dag, inst.partition, 2)
        want = _partition_brute(nums, t, b)
        target = inst.dag.n // 2
        rep.check((mu_p == target) == want,
                  lambda: f"numbers {nums} b={b}: mu_p={mu_p} target={target} split={want}")
        rep.note(f"paths {nums} b={b}: n={inst.dag.n} mu_p={mu_p} target={target} split={want}")
    for name, g, L in (("K4", nx.complete_graph(4), 3), ("P4", nx.path_graph(4), 3),
                       ("C5", nx.cycle_graph(5), 3), ("K4-e", _k4_minus_edge(), 3)):
        inst = gd.scheduling_hardness_instance("bounded-height", graph=g, L=L)
        mu_p = optimal_makespan_fixed_partition(inst.dag, inst.partition, 2)
        target = inst.certificate["target_makespan"]
        nv, edges = gd.as_graph(g)
        want = any(all((u, v) in set(edges) for u, v in itertools.combinations(c, 2))
                   for c in itertools.combinations(range(nv), L))
        rep.check((mu_p == target) == want,
                  lambda: f"{name} L={L}: mu_p={mu_p} target={target} clique={want}")
        rep.note(f"bounded-height {name} L={L}: mu_p={mu_p} target={target} clique={want}")


def _k4_minus_edge():
    g = nx.complete_graph(4)
    g.remove_edge(0, 1)
    return g


def _slack_choices(counts, red_in_s):
    """Red counts reachable by colouring the slack nodes."""
    return [counts.red + red_in_s + x for x in range(counts.slack + 1)]


def suite_enforce(rep: Report, *, smax=5, eps_values=EPS_CHOICES, hmax=5):
    """Enforcement gadgets realize their predicates, checked on explicit colourings."""
    modes = (gd.AT_MOST, gd.AT_LEAST, gd.EXACT)
    built = 0
    for size in range(1, smax + 1):
        for h in range(size + 1):
            for eps in eps_values:
                for mode in modes:
                    if mode == gd.EXACT and eps != 0:
                        continue
                    c = gd.enforce_set(size, h, eps, mode)
                    built += 1
                    _check_enforce(rep, c, size, h, eps, mode)
    for eps in (Fraction(0),) + tuple(e for e in eps_values if e):
        for h in range(hmax + 1):
            for mode in ((gd.EXACT,) if eps == 0 else (gd.AT_MOST, gd.AT_LEAST)):
                vc = gd.enforce_variable_set(h, h + 3, eps, mode)
                for s in range(vc.sweep_limit() + 1):
                    total = vc.red + vc.blue + s
                    hg = Hypergraph(total)
                    # red = colour 0 on the first red + s nodes
                    p = Partition(2, [0] * (vc.red + s) + [1] * vc.blue)
                    ok = is_balanced(hg, p, BalanceSpec.single(eps))
                    rep.check(ok == vc.predicate(s),
                              lambda: f"variable h={h} eps={eps} {mode} |S|={s}: "
                                      f"balanced {ok}, predicate {vc.predicate(s)}")
    for m0, eps in ((2, 0), (3, 0), (2, Fraction(1, 2)), (3, Fraction(1, 4))):
        fb = gd.fixed_color_blocks(m0, eps)
        spec = BalanceSpec((fb.constraint,))
        for assign in itertools.product(range(2), repeat=fb.h.n):
            p = Partition(2, assign)
            if cost(fb.h, p, CostMetric.CUTNET) == 0 and is_balanced(fb.h, p, spec):
                rep.check(assign[fb.red[0]] != assign[fb.blue[0]],
                          lambda: f"fixed blocks m0={m0} eps={eps}: {assign} same colours")
    rep.note(f"enforce_set configurations={built}")


def _check_enforce(rep, c, size, h, eps, mode):
    total = c.total
    spec = BalanceSpec((Constraint(frozenset(range(total)), eps),))
    hg = Hypergraph(total)
    for mask in range(1 << size):
        red_s = bin(mask).count("1")
        assign = [0 if mask >> i & 1 else 1 for i in range(size)]
        assign += [0] * c.red + [1] * c.blue
        ok = False
        for x in range(c.slack + 1):
            full = assign + [0] * x + [1] * (c.slack - x)
            if is_balanced(hg, Partition(2, full), spec):
                ok = True
                break
        want = c.predicate(red_s)
        rep.check(ok == want, lambda: f"|S|={size} h={h} eps={eps} {mode} red(S)={red_s}: "
                                      f"satisfiable {ok}, predicate {want}")


def suite_gadgets(rep: Report, *, seed=0):
    """Structural claims of the remaining generators."""
    inst = gd.spes_reduction((3, [(0, 1), (1, 2)]), 1, variant="degree2")
    rep.check(inst.h.max_degree <= 2, lambda: f"degree2 SpES max degree {inst.h.max_degree}")
    rows, cols = set(inst.aux["row_class"]), set(inst.aux["col_class"])
    classes_ok = not rows & cols and len(rows | cols) == inst.h.m and all(
        sum(1 for e in inc if e in rows) <= 1 and sum(1 for e in inc if e in cols) <= 1
        for inc in inst.h.incidence())
    rep.check(classes_ok, "degree2 SpES: every node meets each edge class at most once")
    h = Hypergraph(3, [(0, 1), (1, 2)])
    for eps in (Fraction(1, 2), Fraction(1, 3)):
        hd = gd.hyperdag_np_instance(h, eps, 2)
        rep.check(bool(is_hyperdag(hd.h)), f"hyperdag_np eps={eps}: output is not a hyperDAG")
        rep.check(hd.certificate["eps_prime"] > 0, f"hyperdag_np eps={eps}: eps' <= 0")
        src = brute_force_optimum(h, BalanceSpec.single(eps), CostMetric.CONN, 2)
        tgt = branch_and_bound(hd.h, hd.spec, CostMetric.CONN, 2, upper_bound=src.cost)
        rep.check(tgt is not None and tgt.cost == src.cost,
                  lambda: f"hyperdag_np eps={eps}: source {src.cost} target {tgt and tgt.cost}")
    h = Hypergraph(4, [(0, 1), (2, 3), (1, 2)])
    spec = BalanceSpec.multi([{0, 2}, {1, 3}], 0)
    mc = gd.multiconstraint_to_ksection(h, spec, 2)
    sizes = mc.certificate["block_sizes"]
    rep.check(all(b == mc.certificate["n0"] * a for a, b in zip(sizes, sizes[1:])),
              f"block sizes {sizes} are not successive multiples of n0")
    src = brute_force_optimum(h, spec, CostMetric.CONN, 2)
    tgt = branch_and_bound(mc.h, mc.spec, CostMetric.CONN, 2, upper_bound=src.cost)
    rep.check(tgt is not None and tgt.cost == src.cost,
              lambda: f"multiconstraint: source {src.cost} target {tgt and tgt.cost}")
    rep.note(f"degree2 n={inst.h.n}; multiconstraint n'={mc.h.n} sizes={sizes}")


SUITES = {
    "solver-oracle": (1, suite_solver_oracle),
    "multi-oracle": (2, suite_multi_oracle),
    "recognition": (3, suite_recognition),
    "grid": (4, suite_grid),
    "block": (5, suite_block),
    "spes": (6, suite_spes),
    "ovp": (7, suite_ovp),
    "coloring": (8, suite_coloring),
    "recursive": (9, suite_recursive),
    "twostep": (10, suite_twostep),
    "assignment": (11, suite_assignment),
    "scheduling": (12, suite_scheduling),
    "enforce": (13, suite_enforce),
    "gadgets": (None, suite_gadgets),
}

BY_CRITERION = {num: name for name, (num, _) in SUITES.items() if num is not None}


def suite_knobs(name: str) -> dict:
    fn = SUITES[name][1]
    return {p.name: p.default for p in inspect.signature(fn).parameters.values()
            if p.kind is p.KEYWORD_ONLY}


def run_suite(name: str, verbose: bool = False, **knobs) -> Report:
    if name not in SUITES:
        raise ParameterError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    allowed = suite_knobs(name)
    unknown = set(knobs) - set(allowed)
    if unknown:
        raise ParameterError(f"suite {name} has no knob(s) {', '.join(sorted(unknown))}; "
                             f"available: {', '.join(allowed) or 'none'}")
    rep = Report(name, verbose)
    start = time.perf_counter()
    SUITES[name][1](rep, **knobs)
    rep.seconds = time.perf_counter() - start
    return rep


# ---------------------------------------------------------------- generated instances

def _meta_value(text: str):
    if text in ("true", "false"):
        return text == "true"
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        return text


def verify_instance(prefix: str, verbose: bool = False) -> Report:
    """Recompute the certificate of an instance written by ``generate``."""
    from pathlib import Path

    from . import io

    rep = Report(f"instance {prefix}", verbose)
    start = time.perf_counter()
    meta = io.parse_meta(Path(prefix + ".meta").read_text(), prefix + ".meta")
    cert = {k[5:]: _meta_value(v) for k, v in meta.items() if k.startswith("cert.")}
    gadget = meta.get("gadget")
    k = int(meta.get("k", 2))
    metric = CostMetric.parse(meta.get("metric", "conn"))

    listed = meta.get("files")
    owned = set(listed.split(",")) if listed is not None else None

    def exists(suffix):
        if owned is not None:
            return suffix[1:] in owned
        return Path(prefix + suffix).exists()

    h = io.load_hgr(prefix + ".hgr") if exists(".hgr") else None
    spec = io.load_constraints(prefix + ".constraints", h.n if h else None) \
        if exists(".constraints") else BalanceSpec.single(0)
    part = None
    if exists(".part"):
        n = h.n if h is not None else None
        part = io.load_partition(prefix + ".part", n, k)
    if h is not None:
        rep.check(h.n == int(meta.get("n", h.n)) and h.m == int(meta.get("m", h.m)),
                  "hypergraph size differs from the sidecar")
    if h is not None and part is not None:
        rep.check(is_balanced(h, part, spec), "planted partition is unbalanced")
        for key in ("planted_cost", "planted_direct_cost"):
            if key in cert:
                c = cost(h, part, metric)
                rep.check(c == cert[key], lambda: f"planted cost {c} != {key} {cert[key]}")
    if gadget == "spes":
        sol = branch_and_bound(h, spec, metric, 2, upper_bound=cert["planted_cost"])
        got = sol and sol.cost
        rep.check(got == cert["spes_optimum"],
                  lambda: f"partition optimum {got} != SpES optimum {cert['spes_optimum']}")
        rep.note(f"optimum={got} spes_optimum={cert['spes_optimum']}")
    elif gadget in ("ovp", "coloring"):
        sol = multi_constraint_bounded_solver(h, spec, 2, 0, metric)
        rep.check((sol is not None) == cert["optimum_zero"],
                  lambda: f"zero-cost partition {'found' if sol else 'absent'}, "
                          f"certificate says {cert['optimum_zero']}")
        rep.note(f"optimum_zero={sol is not None}")
    elif gadget == "recursive":
        direct = branch_and_bound(h, spec, metric, 4)
        rep.check(direct.cost == cert["connectors"],
                  lambda: f"direct optimum {direct.cost} != connectors {cert['connectors']}")
        hp, steps = recursive_partitioner(h, (2, 2), 0, metric, step_oracle=branch_and_bound)
        rc = cost(h, hp.partition, metric)
        rep.check(rc >= cert["recursive_lower_bound"],
                  lambda: f"recursive cost {rc} < {cert['recursive_lower_bound']}")
        rep.note(f"direct={direct.cost} recursive={rc}")
    elif gadget == "twostep":
        T = io.load_topology(prefix + ".topology")
        std = brute_force_optimum(h, spec, CostMetric.CONN, T.k)
        rep.check(std.cost == cert["standard_optimum"],
                  lambda: f"standard optimum {std.cost} != {cert['standard_optimum']}")
        _, ts = optimal_assignment_bruteforce(h, std.partition, T)
        rep.check(ts == cert["twostep_cost"], lambda: f"two-step {ts} != {cert['twostep_cost']}")
        opt = hierarchical_optimum_bruteforce(h, T, spec)[1]
        rep.check(opt == cert["hier_optimum"], lambda: f"optimum {opt} != {cert['hier_optimum']}")
        rep.note(f"standard={std.cost} two-step={ts} optimum={opt}")
    elif gadget == "multiconstraint":
        sizes = [int(x) for x in str(cert["block_sizes"]).split(",")]
        n0 = cert["n0"]
        first_ok = sizes == [1] or sizes[0] == n0
        rep.check(first_ok and all(b == n0 * a for a, b in zip(sizes, sizes[1:])),
                  lambda: f"block sizes {sizes} are not successive powers of n0={n0}")
        rep.note(f"n0={n0} block_sizes={sizes}")
    elif gadget in ("hyperdag-np", "densest-hyperdag"):
        rep.check(bool(is_hyperdag(h)), "output is not a hyperDAG")
    elif gadget == "scheduling":
        d = io.load_dag(prefix + ".dag")
        mu_p = optimal_makespan_fixed_partition(d, part, 2)
        rep.check((mu_p == cert["target_makespan"]) == cert["solvable"],
                  lambda: f"mu_p={mu_p} target={cert['target_makespan']} "
                          f"solvable={cert['solvable']}")
        rep.note(f"mu_p={mu_p} target={cert['target_makespan']}")
    elif gadget == "block":
        bound = cert["split_lower_bound"]
        if h.n <= 16:
            for mask in range(1, (1 << h.n) - 1):
                p = Partition(2, [mask >> v & 1 for v in range(h.n)])
                c = cost(h, p, CostMetric.CUTNET)
                rep.check(c >= bound, lambda: f"split {mask:b} costs {c} < {bound}")
    elif gadget == "grid":
        rep.check(h.max_degree == cert["max_degree"] <= 2, "grid degree exceeds 2")
    elif gadget == "fixed-blocks" and h.n <= 16:
        core = cert["core"]
        m0 = h.n // 2
        for assign in itertools.product(range(2), repeat=h.n):
            p = Partition(2, assign)
            if cost(h, p, CostMetric.CUTNET) == 0 and is_balanced(h, p, spec):
                rep.check(assign[0] != assign[m0], lambda: f"{assign}: blocks share a colour")
        rep.note(f"core={core}")
    elif gadget == "enforce":
        counts = gd.enforce_set(int(meta["param.size"]), int(meta["param.h"]),
                                Fraction(meta["param.eps"]), meta["param.mode"])
        rep.check((counts.red, counts.blue, counts.slack) ==
                  (cert["red"], cert["blue"], cert["slack"]), "filler counts differ")
        _check_enforce(rep, counts, counts.size_s, counts.h, counts.eps, counts.mode)
    else:
        rep.note(f"gadget {gadget}: structural checks only")
    rep.seconds = time.perf_counter() - start
    return rep
