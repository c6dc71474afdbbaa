"""Command-line front end.

Exit codes: 0 ok, 1 infeasible or negative answer, 2 usage error,
3 unreadable or malformed input, 4 search budget exceeded.
"""
from __future__ import annotations

import argparse
import random
import sys
from fractions import Fraction
from pathlib import Path

import networkx as nx

from . import gadgets as gd
from . import io
from .core import BalanceSpec, CostMetric, Partition, as_fraction, cost, is_balanced
from .errors import BudgetExceeded, ParameterError, ParseError
from .hierarchy import (HierPartition, HierTopology, hierarchical_cost, level_lambdas,
                        optimal_assignment_bruteforce, optimal_assignment_matching, two_step)
from .hyperdag import (dag_to_hyperdag, degenerate_layers, earliest_layering,
                       enumerate_layerings, is_hyperdag, is_layerwise_balanced)
from .scheduling import optimal_makespan, optimal_makespan_fixed_partition
from .solvers import (branch_and_bound, brute_force_optimum, count_canonical_assignments,
                      multi_constraint_bounded_solver, recursive_partitioner)
from .verify import BY_CRITERION, SUITES, run_suite, suite_knobs, verify_instance

OK, NEGATIVE, USAGE, PARSE, BUDGET = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _frac_arg(text: str) -> Fraction:
    try:
        return as_fraction(text)
    except ParameterError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _k_arg(text: str) -> int:
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if k < 1:
        raise argparse.ArgumentTypeError("k must be at least 1")
    return k


def _load_spec(args, n: int) -> BalanceSpec:
    if getattr(args, "constraints", None):
        return io.load_constraints(args.constraints, n)
    return BalanceSpec.single(args.eps, args.threshold)


# ---------------------------------------------------------------- evaluate

def cmd_evaluate(args) -> int:
    h = io.load_hgr(args.hypergraph)
    p = io.load_partition(args.partition, h.n, args.k)
    metric = CostMetric.parse(args.metric)
    print(f"cost={cost(h, p, metric)} metric={metric.value}")
    other = CostMetric.CONN if metric is CostMetric.CUTNET else CostMetric.CUTNET
    print(f"cost_{other.value}={cost(h, p, other)}")
    T = io.load_topology(args.topology) if args.topology else None
    if T is not None:
        if p.k != T.k:
            raise ParameterError(f"partition has {p.k} parts, topology has {T.k} leaves")
        hp = HierPartition(p, tuple(range(T.k)))
        print(f"hierarchical_cost={hierarchical_cost(h, hp, T)}")
    for i, e in enumerate(h.edges):
        parts = {p.assign[v] for v in e}
        line = f"edge {i + 1}: lambda={len(parts)}"
        if T is not None:
            lams = level_lambdas(parts, T)
            line += " levels=" + ",".join(map(str, lams))
        print(line)
    spec = _load_spec(args, h.n)
    for j, c in enumerate(spec.constraints):
        sizes = [0] * p.k
        for v in c.nodes(h.n):
            sizes[p.assign[v]] += 1
        cap = c.cap(h.n, p.k)
        print(f"constraint {j + 1}: sizes={','.join(map(str, sizes))} cap={cap} "
              f"balanced={_yes(max(sizes, default=0) <= cap)}")
    ok = is_balanced(h, p, spec)
    print(f"balanced={_yes(ok)}")
    return OK


# ---------------------------------------------------------------- solve

def cmd_solve(args) -> int:
    h = io.load_hgr(args.hypergraph)
    metric = CostMetric.parse(args.metric)
    spec = _load_spec(args, h.n)
    mode = args.mode or ("bounded" if args.budget is not None else "brute")
    k = args.k
    if mode == "bounded":
        if args.budget is None:
            raise UsageError("--mode bounded needs --budget L")
        sol = multi_constraint_bounded_solver(h, spec, k, args.budget, metric)
        part = sol.partition if sol else None
    elif mode == "brute":
        if count_canonical_assignments(h.n, k) <= args.enum_limit:
            sol = brute_force_optimum(h, spec, metric, k)
        else:
            sol = branch_and_bound(h, spec, metric, k, upper_bound=args.budget)
        part = sol.partition if sol else None
    else:
        if spec.c != 1 or spec.constraints[0].subset is not None:
            raise UsageError("--mode recursive needs a single whole-set constraint")
        branching = [int(x) for x in args.branching.split(",")] if args.branching else [k]
        total = 1
        for b in branching:
            total *= b
        if total != k:
            raise UsageError(f"branching factors multiply to {total}, not k = {k}")
        c0 = spec.constraints[0]
        hp, steps = recursive_partitioner(h, branching, c0.eps, metric, mode=c0.mode)
        part = hp.partition
        sol = True
        for st in steps:
            print(f"step level={st.level + 1} nodes={len(st.nodes)} cost={st.cost}")
    if not sol:
        print("cost=- feasible=no")
        return NEGATIVE
    out = args.out or f"{args.hypergraph}.part.{k}"
    io.save_partition(part, out)
    feasible = is_balanced(h, part, spec)
    print(f"cost={cost(h, part, metric)} feasible={_yes(feasible)}")
    return OK if feasible else NEGATIVE


# ---------------------------------------------------------------- hyperDAG commands

def _write_witness(res, prefix: str):
    io.save_dag(res.witness, prefix + ".dag")
    Path(prefix + ".gen").write_text(io.format_generators(res.generators))


def cmd_recognize(args) -> int:
    h = io.load_hgr(args.hypergraph)
    res = is_hyperdag(h)
    if res:
        print("yes")
        if args.witness:
            _write_witness(res, args.witness)
            print(f"witness={args.witness}.dag generators={args.witness}.gen")
        else:
            sys.stdout.write(io.format_dag(res.witness))
        return OK
    print("no")
    print("violating=" + " ".join(str(v + 1) for v in sorted(res.residual)))
    return NEGATIVE


def cmd_convert(args) -> int:
    src = args.input
    kind = args.source or ("dag" if src.endswith(".dag") else "hgr")
    if kind == "dag":
        d = io.load_dag(src)
        h, gens = dag_to_hyperdag(d)
        prefix = args.out or str(Path(src).with_suffix(""))
        io.save_hgr(h, prefix + ".hgr")
        Path(prefix + ".gen").write_text(io.format_generators(gens))
        print(f"hypergraph={prefix}.hgr generators={prefix}.gen edges={h.m}")
        return OK
    h = io.load_hgr(src)
    res = is_hyperdag(h)
    if not res:
        print("no")
        print("violating=" + " ".join(str(v + 1) for v in sorted(res.residual)))
        return NEGATIVE
    prefix = args.out or str(Path(src).with_suffix(""))
    _write_witness(res, prefix)
    print(f"dag={prefix}.dag generators={prefix}.gen arcs={len(res.witness.arcs)}")
    return OK


def cmd_layer(args) -> int:
    d = io.load_dag(args.dag)
    if args.enumerate:
        lays = enumerate_layerings(d, args.cap)
        print(f"layerings={len(lays)}")
        for L in lays:
            print(" ".join(map(str, L.layer)))
        return OK
    L = io.load_layering(args.layering, d.n) if args.layering else earliest_layering(d)
    if not L.is_valid(d):
        print("valid=no")
        return NEGATIVE
    if args.out:
        io.save_layering(L, args.out)
    print(f"layers={L.ell}")
    if not args.out:
        sys.stdout.write(io.format_layering(L))
    if args.partition:
        p = io.load_partition(args.partition, d.n, args.k)
        k = p.k
        small = degenerate_layers(L, k)
        if small:
            print("degenerate_layers=" + " ".join(map(str, small)))
        ok = is_layerwise_balanced(d, L, p, args.eps, args.threshold, args.ignore_below)
        print(f"layerwise_balanced={_yes(ok)}")
        return OK if ok else NEGATIVE
    return OK


def cmd_schedule(args) -> int:
    d = io.load_dag(args.dag)
    mu = optimal_makespan(d, args.k, args.budget)
    if not args.partition:
        print(f"mu={mu}")
        return OK
    p = io.load_partition(args.partition, d.n, args.k)
    mu_p = optimal_makespan_fixed_partition(d, p, args.k, args.budget)
    feasible = mu_p <= (1 + args.eps) * mu
    print(f"mu={mu} mu_p={mu_p} feasible={_yes(feasible)}")
    return OK if feasible else NEGATIVE


def cmd_assign(args) -> int:
    T = io.load_topology(args.topology)
    h = io.load_hgr(args.hypergraph)
    if args.method == "twostep":
        res = two_step(h, T, args.eps, mode=args.threshold)
        if res is None:
            print("cost=- feasible=no")
            return NEGATIVE
        hp, c, std = res
        print(f"standard_cost={std}")
    else:
        if not args.partition:
            raise UsageError(f"--method {args.method} needs --partition")
        p = io.load_partition(args.partition, h.n, T.k)
        if args.method == "brute":
            hp, c = optimal_assignment_bruteforce(h, p, T)
        else:
            hp, c = optimal_assignment_matching(h, p, T)
    print("leaf_of=" + " ".join(str(x + 1) for x in hp.leaf_of))
    print(f"cost={c}")
    if args.out:
        io.save_partition(Partition(T.k, hp.leaf_assign()), args.out)
    return OK


# ---------------------------------------------------------------- generate

def _graph_param(text: str, rng: random.Random):
    """``complete:4``, ``path:3``, ``cycle:5``, ``random:N:P`` or ``N:u-v,u-v``."""
    kind, _, rest = text.partition(":")
    if kind == "complete":
        return nx.complete_graph(int(rest))
    if kind == "path":
        return nx.path_graph(int(rest))
    if kind == "cycle":
        return nx.cycle_graph(int(rest))
    if kind == "empty":
        return nx.empty_graph(int(rest))
    if kind == "random":
        n, _, p = rest.partition(":")
        return nx.gnp_random_graph(int(n), float(p or 0.5), seed=rng.randrange(2**32))
    if kind.isdigit():
        edges = [tuple(int(x) for x in pair.split("-")) for pair in rest.split(",") if pair]
        return int(kind), edges
    raise ParameterError(f"cannot read graph parameter {text!r}")


def _vectors_param(text: str, rng: random.Random):
    if text.startswith("random:"):
        _, m, dim = text.split(":")
        return [tuple(rng.randint(0, 1) for _ in range(int(dim))) for _ in range(int(m))]
    return [tuple(int(ch) for ch in word) for word in text.split(",")]


def _ints(text: str):
    return [int(x) for x in text.split(",") if x]


class _Params:
    def __init__(self, raw: dict):
        self.raw = dict(raw)

    def get(self, key, conv=str, default=None, required=False):
        if key not in self.raw:
            if required:
                raise ParameterError(f"missing parameter {key}=...")
            return default
        return conv(self.raw.pop(key))

    def done(self):
        if self.raw:
            raise ParameterError(f"unknown parameter(s): {', '.join(sorted(self.raw))}")


def _wrap_hypergraph(name, h, params, cert=None, spec=None):
    return gd.Instance(name, h, spec, 2, CostMetric.CONN, params, cert or {})


def _gen_block(pr, rng):
    b = pr.get("b", int, required=True)
    return _wrap_hypergraph("block", gd.block(b), {"b": b},
                            {"degenerate": gd.block_is_degenerate(b),
                             "split_lower_bound": gd.block_split_bound(b)})


def _gen_grid(pr, rng):
    ell = pr.get("ell", int, required=True)
    ell0 = pr.get("ell0", int, 0)
    co = pr.get("col_outsiders", int, 0)
    g = gd.extended_grid(ell, ell0, co)
    return _wrap_hypergraph("grid", g.h, {"ell": ell, "ell0": ell0, "col_outsiders": co},
                            {"core_nodes": ell * ell, "outsiders": len(g.outsiders),
                             "max_degree": g.h.max_degree})


def _gen_fixed(pr, rng):
    m0 = pr.get("m0", int, required=True)
    eps = pr.get("eps", as_fraction, Fraction(0))
    fb = gd.fixed_color_blocks(m0, eps)
    return _wrap_hypergraph("fixed-blocks", fb.h, {"m0": m0, "eps": eps}, {"core": fb.core},
                            BalanceSpec((fb.constraint,)))


def _gen_enforce(pr, rng):
    size = pr.get("size", int, required=True)
    h = pr.get("h", int, required=True)
    eps = pr.get("eps", as_fraction, Fraction(0))
    mode = pr.get("mode", str, gd.AT_MOST)
    c = gd.enforce_set(size, h, eps, mode)
    bld = gd.Builder()
    red, blue = gd.add_fixed_blocks(bld, gd.blocks.plan_pools([c]), eps, core=1)
    s_nodes = bld.nodes(size)
    gd.blocks.apply_enforce(bld, s_nodes, c, gd.blocks.FixedPools(red[1:], blue[1:]))
    cert = {"red": c.red, "blue": c.blue, "slack": c.slack, "m": c.formula_m,
            "s_nodes": [v + 1 for v in s_nodes]}
    return gd.Instance("enforce", bld.hypergraph(), bld.spec(), 2, CostMetric.CUTNET,
                       {"size": size, "h": h, "eps": eps, "mode": mode}, cert)


def _gen_enforce_variable(pr, rng):
    h = pr.get("h", int, required=True)
    h0 = pr.get("h0", int)
    eps = pr.get("eps", as_fraction, Fraction(0))
    mode = pr.get("mode", str, gd.EXACT)
    c = gd.enforce_variable_set(h, h0, eps, mode)
    return gd.Instance("enforce-variable", None, None, 2, CostMetric.CUTNET,
                       {"h": h, "h0": h0, "eps": eps, "mode": mode},
                       {"red": c.red, "blue": c.blue})


def _gen_densest(pr, rng):
    from .hyperdag import densest_hyperdag

    m = pr.get("m", int, required=True)
    return _wrap_hypergraph("densest-hyperdag", densest_hyperdag(m), {"m": m},
                            {"is_hyperdag": True})


def _gen_spes(pr, rng):
    g = _graph_param(pr.get("graph", str, required=True), rng)
    return gd.spes_reduction(g, pr.get("p", int, required=True), pr.get("eps", as_fraction, 0),
                             variant=pr.get("variant", str, "general"),
                             block_size=pr.get("block_size", int))


def _gen_ovp(pr, rng):
    return gd.ovp_reduction(_vectors_param(pr.get("vectors", str, required=True), rng),
                            pr.get("eps", as_fraction, 0))


def _gen_coloring(pr, rng):
    return gd.coloring_reduction(_graph_param(pr.get("graph", str, required=True), rng),
                                 pr.get("eps", as_fraction, 0))


def _gen_multiconstraint(pr, rng):
    h = io.load_hgr(pr.get("hgr", str, required=True))
    spec = io.load_constraints(pr.get("constraints", str, required=True), h.n)
    return gd.multiconstraint_to_ksection(h, spec, pr.get("k", int, 2))


def _gen_hyperdag_np(pr, rng):
    h = io.load_hgr(pr.get("hgr", str, required=True))
    return gd.hyperdag_np_instance(h, pr.get("eps", as_fraction, required=True),
                                   pr.get("k", int, 2), pr.get("L", int), pr.get("m", int))


def _gen_recursive(pr, rng):
    return gd.recursive_counterexample(pr.get("n", int, 24), pr.get("block_weight", int))


def _gen_twostep(pr, rng):
    b = pr.get("b", _ints, [2, 2])
    g = pr.get("g", lambda s: [as_fraction(x) for x in s.split(",")], [4, 1])
    return gd.twostep_counterexample(HierTopology(tuple(b), tuple(g)), pr.get("m", int),
                                     pr.get("part_size", int), pr.get("block_weight", int))


def _gen_scheduling(pr, rng):
    variant = pr.get("variant", str, "paths")
    if variant == "paths":
        return gd.scheduling_hardness_instance(
            "paths", pr.get("numbers", _ints, required=True), pr.get("b", int, required=True),
            pr.get("strict", lambda s: s.lower() in ("1", "true", "yes"), False))
    return gd.scheduling_hardness_instance(
        variant, graph=_graph_param(pr.get("graph", str, required=True), rng),
        L=pr.get("L", int, required=True))


GADGETS = {
    "block": _gen_block,
    "grid": _gen_grid,
    "fixed-blocks": _gen_fixed,
    "enforce": _gen_enforce,
    "enforce-variable": _gen_enforce_variable,
    "densest-hyperdag": _gen_densest,
    "spes": _gen_spes,
    "ovp": _gen_ovp,
    "coloring": _gen_coloring,
    "multiconstraint": _gen_multiconstraint,
    "hyperdag-np": _gen_hyperdag_np,
    "recursive": _gen_recursive,
    "twostep": _gen_twostep,
    "scheduling": _gen_scheduling,
}


def write_instance(inst: gd.Instance, prefix: str) -> list[str]:
    written = []

    def put(suffix, text):
        Path(prefix + suffix).write_text(text)
        written.append(prefix + suffix)

    if inst.h is not None:
        put(".hgr", io.format_hgr(inst.h))
    if inst.spec is not None:
        put(".constraints", io.format_constraints(inst.spec))
    if inst.dag is not None:
        put(".dag", io.format_dag(inst.dag))
    part = inst.planted if inst.planted is not None else inst.partition
    if part is not None:
        put(".part", io.format_partition(part))
    if inst.topology is not None:
        put(".topology", io.format_topology(inst.topology))
    meta = inst.meta()
    meta["files"] = ",".join(p[len(prefix) + 1:] for p in written)
    put(".meta", io.format_meta(meta))
    return written


def cmd_generate(args) -> int:
    if args.gadget not in GADGETS:
        raise UsageError(f"unknown gadget {args.gadget!r}; choose from {', '.join(GADGETS)}")
    raw = {}
    for item in args.params or []:
        key, sep, val = item.partition("=")
        if not sep:
            raise UsageError(f"parameter {item!r} is not KEY=VAL")
        raw[key] = val
    pr = _Params(raw)
    inst = GADGETS[args.gadget](pr, random.Random(args.seed))
    pr.done()
    for path in write_instance(inst, args.out):
        print(f"wrote {path}")
    for key, val in inst.meta().items():
        if key.startswith("cert."):
            print(f"{key}={val}")
    return OK


# ---------------------------------------------------------------- verify

def _knob_value(text: str):
    for conv in (int, Fraction):
        try:
            return conv(text)
        except (ValueError, ZeroDivisionError):
            pass
    if "," in text:
        return tuple(_knob_value(x) for x in text.split(",") if x)
    return text


def _parse_knobs(extra) -> dict:
    knobs = {}
    i = 0
    while i < len(extra):
        tok = extra[i]
        if not tok.startswith("--"):
            raise UsageError(f"unexpected argument {tok!r}")
        key = tok[2:]
        if "=" in key:
            key, val = key.split("=", 1)
            i += 1
        elif i + 1 < len(extra) and not extra[i + 1].startswith("--"):
            val = extra[i + 1]
            i += 2
        else:
            raise UsageError(f"knob --{key} needs a value")
        knobs[key.replace("-", "_")] = _knob_value(val)
    return knobs


def cmd_verify(args, extra) -> int:
    if args.instance:
        rep = verify_instance(args.instance, verbose=args.verbose)
        print(rep.render())
        return OK if rep.ok else NEGATIVE
    if not args.suite:
        raise UsageError("name a suite (or 'all', or --instance PREFIX); suites: "
                         + ", ".join(SUITES))
    knobs = _parse_knobs(extra)
    if args.seed is not None:
        knobs["seed"] = args.seed
    name = args.suite
    if name.isdigit():
        if int(name) not in BY_CRITERION:
            raise UsageError(f"no suite for criterion {name}")
        name = BY_CRITERION[int(name)]
    names = list(SUITES) if name == "all" else [name]
    if name not in SUITES and name != "all":
        raise UsageError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    failed = False
    for nm in names:
        use = {k: v for k, v in knobs.items() if name != "all" or k in suite_knobs(nm)}
        rep = run_suite(nm, args.verbose, **use)
        print(rep.render())
        failed |= not rep.ok
    return NEGATIVE if failed else OK


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hyperpart", description=__doc__.splitlines()[0])
    ap.add_argument("--threads", type=int, default=1,
                    help="worker cap; every command currently runs in one process")
    sub = ap.add_subparsers(dest="command", required=True)

    def balance(p, k_required=True):
        p.add_argument("--k", type=_k_arg, required=k_required)
        p.add_argument("--eps", type=_frac_arg, default=Fraction(0), help="NUM/DEN")
        p.add_argument("--threshold", choices=("strict-floor", "relaxed-ceil"),
                       default="strict-floor")

    p = sub.add_parser("evaluate", help="cost and balance report of a partition")
    p.add_argument("hypergraph")
    p.add_argument("partition")
    p.add_argument("--metric", default="conn", choices=("cutnet", "conn"))
    p.add_argument("--topology")
    p.add_argument("--constraints")
    balance(p, k_required=False)

    p = sub.add_parser("solve", help="exact balanced partitioning")
    p.add_argument("hypergraph")
    balance(p)
    p.add_argument("--metric", default="conn", choices=("cutnet", "conn"))
    p.add_argument("--budget", type=int, help="cost bound L (enables the bounded solver)")
    p.add_argument("--constraints")
    p.add_argument("--mode", choices=("brute", "bounded", "recursive"))
    p.add_argument("--branching", help="comma-separated factors for --mode recursive")
    p.add_argument("--enum-limit", type=int, default=2 * 10**6,
                   help="largest enumeration for plain brute force before branch and bound")
    p.add_argument("--out")

    p = sub.add_parser("recognize", help="decide whether a hypergraph is a hyperDAG")
    p.add_argument("hypergraph")
    p.add_argument("--witness", metavar="PREFIX")

    p = sub.add_parser("convert", help="DAG to hyperDAG or hyperDAG to witness DAG")
    p.add_argument("input")
    p.add_argument("--from", dest="source", choices=("dag", "hgr"))
    p.add_argument("--out", metavar="PREFIX")

    p = sub.add_parser("layer", help="layerings of a DAG")
    p.add_argument("dag")
    p.add_argument("--layering")
    p.add_argument("--enumerate", action="store_true")
    p.add_argument("--cap", type=int, default=10**6)
    p.add_argument("--partition")
    p.add_argument("--ignore-below", type=int, default=0)
    p.add_argument("--out")
    balance(p, k_required=False)

    p = sub.add_parser("schedule", help="optimal makespans")
    p.add_argument("--dag", required=True)
    p.add_argument("--k", type=_k_arg, required=True)
    p.add_argument("--partition")
    p.add_argument("--eps", type=_frac_arg, default=Fraction(0))
    p.add_argument("--budget", type=int, default=2 * 10**7)

    p = sub.add_parser("assign", help="map parts to hierarchy leaves")
    p.add_argument("hypergraph")
    p.add_argument("--topology", required=True)
    p.add_argument("--partition")
    p.add_argument("--method", choices=("brute", "matching", "twostep"), default="brute")
    p.add_argument("--eps", type=_frac_arg, default=Fraction(0))
    p.add_argument("--threshold", choices=("strict-floor", "relaxed-ceil"),
                   default="strict-floor")
    p.add_argument("--out")

    p = sub.add_parser("generate", help="write a gadget or reduction instance")
    p.add_argument("--gadget", required=True)
    p.add_argument("--params", nargs="*", metavar="KEY=VAL")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True, metavar="PREFIX")

    p = sub.add_parser("verify", help="run a property suite or check a generated instance")
    p.add_argument("suite", nargs="?")
    p.add_argument("--instance", metavar="PREFIX")
    p.add_argument("--seed", type=int)
    p.add_argument("--verbose", action="store_true")
    return ap


COMMANDS = {
    "evaluate": cmd_evaluate, "solve": cmd_solve, "recognize": cmd_recognize,
    "convert": cmd_convert, "layer": cmd_layer, "schedule": cmd_schedule,
    "assign": cmd_assign, "generate": cmd_generate,
}


def main(argv=None) -> int:
    ap = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args, extra = ap.parse_known_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        if args.command == "verify":
            return cmd_verify(args, extra)
        if extra:
            raise UsageError(f"unrecognized arguments: {' '.join(extra)}")
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return PARSE
    except OSError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return PARSE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return BUDGET
    except ParameterError as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
