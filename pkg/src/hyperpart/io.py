"""Text formats: hMetis hypergraphs, partitions, constraints, DAGs and sidecars.

All formats are newline-delimited; lines starting with ``%`` are comments
and blank lines are ignored. Nodes and parts are 1-indexed on disk and
0-indexed in memory. ``parse_*`` functions take the file contents,
``load_*`` and ``save_*`` take paths. Parse failures raise
:class:`~hyperpart.errors.ParseError` with the physical line number.
"""
from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from .core import BalanceSpec, Constraint, Hypergraph, Partition, normalize_mode
from .errors import HyperpartError, ParseError
from .hierarchy import HierTopology
from .hyperdag import Dag, Layering


def _lines(text: str):
    """Yield ``(line number, tokens)`` for every content line."""
    for no, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if not s or s.startswith("%"):
            continue
        yield no, s.split()


def _int(tok: str, no: int, what: str, path=None, low: int | None = None) -> int:
    try:
        val = int(tok)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {tok!r}", no, path) from None
    if low is not None and val < low:
        raise ParseError(f"{what} must be at least {low}, got {val}", no, path)
    return val


def _frac(tok: str, no: int, what: str, path=None) -> Fraction:
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"{what} must be a rational p/q, got {tok!r}", no, path) from None


def _wrap(build, no, path):
    try:
        return build()
    except ParseError:
        raise
    except HyperpartError as exc:
        raise ParseError(str(exc), no, path) from None


def _read(path) -> str:
    return Path(path).read_text()


def _write(path, text: str) -> None:
    Path(path).write_text(text)


# ---------------------------------------------------------------- hypergraph

def parse_hgr(text: str, path=None, merge_duplicates: bool = True) -> Hypergraph:
    """hMetis format: header ``|E| |V| [fmt]``, then one hyperedge per line.

    ``fmt`` 1 means every edge line starts with its weight; node weights
    (``fmt`` 10 or 11) are not supported. Hyperedges with the same pin set
    are merged into one edge carrying the summed weight, at the position
    of the first copy; pass ``merge_duplicates=False`` to keep them apart.
    """
    lines = _lines(text)
    try:
        no, head = next(lines)
    except StopIteration:
        raise ParseError("missing header line", None, path) from None
    if len(head) not in (2, 3):
        raise ParseError("header must be '|E| |V| [fmt]'", no, path)
    m = _int(head[0], no, "edge count", path, 0)
    n = _int(head[1], no, "node count", path, 0)
    fmt = head[2] if len(head) == 3 else "0"
    if fmt not in ("0", "1", "00", "01"):
        raise ParseError(f"unsupported fmt {fmt!r} (only edge weights are supported)", no, path)
    weighted = fmt.endswith("1")
    edges, weights = [], []
    last = no
    for no, toks in lines:
        last = no
        if len(edges) == m:
            raise ParseError(f"more than the declared {m} hyperedges", no, path)
        w = 1
        if weighted:
            w = _int(toks[0], no, "edge weight", path, 1)
            toks = toks[1:]
        if not toks:
            raise ParseError("hyperedge without pins", no, path)
        pins = []
        for t in toks:
            v = _int(t, no, "pin", path, 1)
            if v > n:
                raise ParseError(f"pin {v} exceeds node count {n}", no, path)
            pins.append(v - 1)
        edges.append(pins)
        weights.append(w)
    if len(edges) != m:
        raise ParseError(f"expected {m} hyperedges, found {len(edges)}", last, path)
    if merge_duplicates:
        acc: dict = {}
        for e, w in zip(edges, weights):
            key = tuple(sorted(set(e)))
            acc[key] = acc.get(key, 0) + w
        edges, weights = list(acc), list(acc.values())
    return Hypergraph(n, edges, weights)


def format_hgr(h: Hypergraph) -> str:
    weighted = any(w != 1 for w in h.weights)
    out = [f"{h.m} {h.n} 1" if weighted else f"{h.m} {h.n}"]
    for e, w in zip(h.edges, h.weights):
        pins = " ".join(str(v + 1) for v in e)
        out.append(f"{w} {pins}" if weighted else pins)
    return "\n".join(out) + "\n"


def load_hgr(path, merge_duplicates: bool = True) -> Hypergraph:
    return parse_hgr(_read(path), path, merge_duplicates)


def save_hgr(h: Hypergraph, path) -> None:
    _write(path, format_hgr(h))


# ---------------------------------------------------------------- partition

def parse_partition(text: str, n: int | None = None, k: int | None = None,
                    path=None) -> Partition:
    """One 1-indexed part per line; ``k`` defaults to the largest part seen."""
    assign = []
    last = None
    for no, toks in _lines(text):
        last = no
        if len(toks) != 1:
            raise ParseError("expected a single part index", no, path)
        part = _int(toks[0], no, "part", path, 1)
        if k is not None and part > k:
            raise ParseError(f"part {part} exceeds k = {k}", no, path)
        assign.append(part - 1)
    if n is not None and len(assign) != n:
        raise ParseError(f"expected {n} lines, found {len(assign)}", last, path)
    kk = k if k is not None else max(assign, default=0) + 1
    return Partition(kk, assign)


def format_partition(p: Partition) -> str:
    return "".join(f"{a + 1}\n" for a in p.assign)


def load_partition(path, n: int | None = None, k: int | None = None) -> Partition:
    return parse_partition(_read(path), n, k, path)


def save_partition(p: Partition, path) -> None:
    _write(path, format_partition(p))


# ---------------------------------------------------------------- constraints

def parse_constraints(text: str, n: int | None = None, path=None) -> BalanceSpec:
    """Lines ``eps mode v1 v2 ...``; no nodes means the whole node set."""
    cons = []
    last = None
    for no, toks in _lines(text):
        last = no
        if len(toks) < 2:
            raise ParseError("expected 'eps mode [nodes...]'", no, path)
        eps = _frac(toks[0], no, "epsilon", path)
        mode = _wrap(lambda: normalize_mode(toks[1]), no, path)
        nodes = []
        for t in toks[2:]:
            v = _int(t, no, "node", path, 1)
            if n is not None and v > n:
                raise ParseError(f"node {v} exceeds node count {n}", no, path)
            nodes.append(v - 1)
        subset = frozenset(nodes) if nodes else None
        cons.append(_wrap(lambda: Constraint(subset, eps, mode), no, path))
    return _wrap(lambda: BalanceSpec(tuple(cons)), last, path)


def format_constraints(spec: BalanceSpec) -> str:
    out = []
    for c in spec.constraints:
        eps = f"{c.eps.numerator}/{c.eps.denominator}"
        nodes = "" if c.subset is None else " " + " ".join(str(v + 1) for v in sorted(c.subset))
        out.append(f"{eps} {c.mode}{nodes}")
    return "".join(line + "\n" for line in out)


def load_constraints(path, n: int | None = None) -> BalanceSpec:
    return parse_constraints(_read(path), n, path)


def save_constraints(spec: BalanceSpec, path) -> None:
    _write(path, format_constraints(spec))


# ---------------------------------------------------------------- DAG and sidecars

def parse_dag(text: str, path=None) -> Dag:
    """Header ``n m``, then ``m`` arcs ``u v`` (1-indexed, u before v)."""
    lines = _lines(text)
    try:
        no, head = next(lines)
    except StopIteration:
        raise ParseError("missing header line", None, path) from None
    if len(head) != 2:
        raise ParseError("header must be 'n m'", no, path)
    n = _int(head[0], no, "node count", path, 0)
    m = _int(head[1], no, "arc count", path, 0)
    arcs = []
    last = no
    for no, toks in lines:
        last = no
        if len(toks) != 2:
            raise ParseError("arc line must be 'u v'", no, path)
        u = _int(toks[0], no, "node", path, 1)
        v = _int(toks[1], no, "node", path, 1)
        if u > n or v > n:
            raise ParseError(f"arc endpoint exceeds node count {n}", no, path)
        arcs.append((u - 1, v - 1))
    if len(arcs) != m:
        raise ParseError(f"expected {m} arcs, found {len(arcs)}", last, path)
    return _wrap(lambda: Dag(n, arcs), last, path)


def format_dag(d: Dag) -> str:
    out = [f"{d.n} {len(d.arcs)}"] + [f"{u + 1} {v + 1}" for u, v in d.arcs]
    return "\n".join(out) + "\n"


def load_dag(path) -> Dag:
    return parse_dag(_read(path), path)


def save_dag(d: Dag, path) -> None:
    _write(path, format_dag(d))


def parse_layering(text: str, n: int | None = None, path=None) -> Layering:
    layer = []
    last = None
    for no, toks in _lines(text):
        last = no
        if len(toks) != 1:
            raise ParseError("expected a single layer index", no, path)
        layer.append(_int(toks[0], no, "layer", path, 1))
    if n is not None and len(layer) != n:
        raise ParseError(f"expected {n} lines, found {len(layer)}", last, path)
    return Layering(tuple(layer), max(layer, default=0))


def format_layering(L: Layering) -> str:
    return "".join(f"{x}\n" for x in L.layer)


def load_layering(path, n: int | None = None) -> Layering:
    return parse_layering(_read(path), n, path)


def save_layering(L: Layering, path) -> None:
    _write(path, format_layering(L))


def parse_generators(text: str, path=None) -> list[int]:
    """Lines ``edge generator`` (both 1-indexed); returns generator per edge, 0-indexed."""
    pairs = {}
    for no, toks in _lines(text):
        if len(toks) != 2:
            raise ParseError("expected 'edge_index generator_node'", no, path)
        e = _int(toks[0], no, "edge index", path, 1)
        g = _int(toks[1], no, "generator node", path, 1)
        if e in pairs:
            raise ParseError(f"edge {e} listed twice", no, path)
        pairs[e] = g - 1
    if sorted(pairs) != list(range(1, len(pairs) + 1)):
        raise ParseError("edge indices must be 1..|E|", None, path)
    return [pairs[e] for e in range(1, len(pairs) + 1)]


def format_generators(gens) -> str:
    return "".join(f"{i + 1} {g + 1}\n" for i, g in enumerate(gens))


def parse_topology(text: str, path=None) -> HierTopology:
    """Two lines: branching factors, then level costs as rationals."""
    rows = list(_lines(text))
    if len(rows) != 2:
        raise ParseError("topology needs exactly two lines", rows[-1][0] if rows else None, path)
    (nb, btoks), (ng, gtoks) = rows
    b = [_int(t, nb, "branching factor", path) for t in btoks]
    g = [_frac(t, ng, "level cost", path) for t in gtoks]
    return _wrap(lambda: HierTopology(tuple(b), tuple(g)), ng, path)


def format_topology(T: HierTopology) -> str:
    return " ".join(map(str, T.b)) + "\n" + " ".join(str(x) for x in T.g) + "\n"


def load_topology(path) -> HierTopology:
    return parse_topology(_read(path), path)


def save_topology(T: HierTopology, path) -> None:
    _write(path, format_topology(T))


def parse_meta(text: str, path=None) -> dict:
    out = {}
    for no, toks in _lines(text):
        line = " ".join(toks)
        if "=" not in line:
            raise ParseError("expected key=value", no, path)
        key, val = line.split("=", 1)
        out[key.strip()] = val.strip()
    return out


def format_meta(meta: dict) -> str:
    return "".join(f"{k}={v}\n" for k, v in meta.items())
