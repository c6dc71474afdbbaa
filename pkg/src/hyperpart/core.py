"""Hypergraphs, partitions, cost metrics and balance constraints.

Nodes are the integers ``0..n-1``. Every quantity that involves the
imbalance parameter is computed with :class:`fractions.Fraction`, so part
size thresholds are exact floors or ceilings and never suffer from float
rounding.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NotMergeable, ParameterError

STRICT = "strict-floor"
RELAXED = "relaxed-ceil"
_MODE_ALIASES = {
    "strict": STRICT,
    "strict-floor": STRICT,
    "floor": STRICT,
    "relaxed": RELAXED,
    "relaxed-ceil": RELAXED,
    "ceil": RELAXED,
}


class CostMetric(str, enum.Enum):
    CUTNET = "cutnet"
    CONN = "conn"

    @classmethod
    def parse(cls, value) -> "CostMetric":
        if isinstance(value, CostMetric):
            return value
        text = str(value).strip().lower()
        if text in ("cutnet", "cut-net", "cut"):
            return cls.CUTNET
        if text in ("conn", "connectivity", "km1", "lambda-1"):
            return cls.CONN
        raise ParameterError(f"unknown cost metric {value!r}")


def as_fraction(value) -> Fraction:
    """Convert ints, Fractions, "p/q" strings or floats to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        # floats like 0.2 are meant literally, not as their binary expansion
        return Fraction(str(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParameterError(f"not a rational number: {value!r}") from exc
    raise ParameterError(f"cannot interpret {value!r} as a rational")


def normalize_mode(mode) -> str:
    try:
        return _MODE_ALIASES[str(mode).strip().lower()]
    except KeyError:
        raise ParameterError(f"unknown threshold mode {mode!r}") from None


def threshold(size: int, eps, k: int, mode: str = STRICT) -> int:
    """Largest admissible part size for a subset of ``size`` nodes."""
    if k < 1:
        raise ParameterError("k must be at least 1")
    bound = (1 + as_fraction(eps)) * size / k
    if normalize_mode(mode) == STRICT:
        return math.floor(bound)
    return math.ceil(bound)


@dataclass(frozen=True)
class Hypergraph:
    """Node count plus an ordered list of weighted hyperedges.

    Each hyperedge is stored as a sorted tuple of distinct pins. Duplicate
    hyperedges are allowed and behave like a single edge carrying the summed
    weight.
    """

    n: int
    edges: tuple = ()
    weights: tuple = None

    def __post_init__(self):
        if self.n < 0:
            raise ParameterError("node count must be nonnegative")
        edges = tuple(tuple(sorted(set(int(v) for v in e))) for e in self.edges)
        for i, e in enumerate(edges):
            if not e:
                raise ParameterError(f"hyperedge {i} is empty")
            if e[0] < 0 or e[-1] >= self.n:
                raise ParameterError(f"hyperedge {i} has a pin outside 0..{self.n - 1}")
        if self.weights is None:
            weights = (1,) * len(edges)
        else:
            weights = tuple(int(w) for w in self.weights)
            if len(weights) != len(edges):
                raise ParameterError("one weight per hyperedge is required")
            if any(w <= 0 for w in weights):
                raise ParameterError("hyperedge weights must be positive integers")
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "weights", weights)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def rho(self) -> int:
        """Pin count, the sum of hyperedge sizes."""
        return sum(len(e) for e in self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return deg

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def incidence(self) -> list[list[int]]:
        """Edge indices incident to each node."""
        inc = [[] for _ in range(self.n)]
        for i, e in enumerate(self.edges):
            for v in e:
                inc[v].append(i)
        return inc

    def total_weight(self) -> int:
        return sum(self.weights)

    def with_isolated(self, count: int) -> "Hypergraph":
        if count < 0:
            raise ParameterError("cannot add a negative number of nodes")
        return Hypergraph(self.n + count, self.edges, self.weights)

    def induced(self, nodes: Iterable[int]) -> tuple["Hypergraph", list[int]]:
        """Sub-hypergraph on ``nodes`` keeping only edges fully inside it.

        Returns the new hypergraph (nodes renumbered in increasing order)
        and the list mapping new ids back to the original ones.
        """
        keep = sorted(set(nodes))
        index = {v: i for i, v in enumerate(keep)}
        edges, weights = [], []
        for e, w in zip(self.edges, self.weights):
            if all(v in index for v in e):
                edges.append([index[v] for v in e])
                weights.append(w)
        return Hypergraph(len(keep), edges, weights), keep

    def canonical_multiset(self, drop_singletons: bool = False) -> dict:
        """Map from pin tuple to total weight; used for equality up to order."""
        out: dict = {}
        for e, w in zip(self.edges, self.weights):
            if drop_singletons and len(e) < 2:
                continue
            out[e] = out.get(e, 0) + w
        return out

    def same_edges(self, other: "Hypergraph", drop_singletons: bool = False) -> bool:
        return self.n == other.n and self.canonical_multiset(
            drop_singletons
        ) == other.canonical_multiset(drop_singletons)


@dataclass(frozen=True)
class Partition:
    """Total assignment of nodes to parts ``0..k-1``; parts may be empty."""

    k: int
    assign: tuple

    def __post_init__(self):
        assign = tuple(int(a) for a in self.assign)
        if self.k < 1:
            raise ParameterError("k must be at least 1")
        for v, a in enumerate(assign):
            if not 0 <= a < self.k:
                raise ParameterError(f"node {v} assigned to part {a}, outside 0..{self.k - 1}")
        object.__setattr__(self, "assign", assign)

    @property
    def n(self) -> int:
        return len(self.assign)

    def sizes(self) -> list[int]:
        out = [0] * self.k
        for a in self.assign:
            out[a] += 1
        return out

    def parts(self) -> list[list[int]]:
        out = [[] for _ in range(self.k)]
        for v, a in enumerate(self.assign):
            out[a].append(v)
        return out

    def canonical(self) -> "Partition":
        return Partition(self.k, canonical_labels(self.assign))

    def relabel(self, mapping: Sequence[int]) -> "Partition":
        return Partition(self.k, [mapping[a] for a in self.assign])


def canonical_labels(assign: Sequence[int]) -> tuple:
    """Relabel parts in order of first occurrence (restricted growth form)."""
    seen: dict = {}
    out = []
    for a in assign:
        if a not in seen:
            seen[a] = len(seen)
        out.append(seen[a])
    return tuple(out)


@dataclass(frozen=True)
class Constraint:
    """Balance requirement on one node subset; ``subset=None`` means all nodes."""

    subset: frozenset | None
    eps: Fraction = Fraction(0)
    mode: str = STRICT

    def __post_init__(self):
        if self.subset is not None:
            object.__setattr__(self, "subset", frozenset(int(v) for v in self.subset))
        eps = as_fraction(self.eps)
        if eps < 0:
            raise ParameterError("epsilon must be nonnegative")
        object.__setattr__(self, "eps", eps)
        object.__setattr__(self, "mode", normalize_mode(self.mode))

    def nodes(self, n: int):
        return range(n) if self.subset is None else sorted(self.subset)

    def size(self, n: int) -> int:
        return n if self.subset is None else len(self.subset)

    def cap(self, n: int, k: int) -> int:
        return threshold(self.size(n), self.eps, k, self.mode)


@dataclass(frozen=True)
class BalanceSpec:
    """A family of balance constraints over pairwise disjoint node subsets."""

    constraints: tuple = field(default_factory=tuple)

    def __post_init__(self):
        cons = tuple(self.constraints)
        seen: set = set()
        whole = 0
        for c in cons:
            if not isinstance(c, Constraint):
                raise ParameterError("BalanceSpec entries must be Constraint objects")
            if c.subset is None:
                whole += 1
                continue
            if seen & c.subset:
                raise ParameterError("balance constraint subsets overlap")
            seen |= c.subset
        if whole and (whole > 1 or seen):
            raise ParameterError("a whole-node-set constraint overlaps every other constraint")
        object.__setattr__(self, "constraints", cons)

    @classmethod
    def single(cls, eps=0, mode: str = STRICT) -> "BalanceSpec":
        return cls((Constraint(None, eps, mode),))

    @classmethod
    def multi(cls, subsets, eps=0, mode: str = STRICT) -> "BalanceSpec":
        return cls(tuple(Constraint(frozenset(s), eps, mode) for s in subsets))

    @property
    def c(self) -> int:
        return len(self.constraints)

    def validate(self, n: int, k: int) -> None:
        for c in self.constraints:
            if c.subset is not None and any(not 0 <= v < n for v in c.subset):
                raise ParameterError("balance constraint names a node outside the hypergraph")
            if k > 1 and c.eps >= k - 1:
                raise ParameterError(f"epsilon {c.eps} must be below k-1 = {k - 1}")

    def node_constraint(self, n: int) -> list[int]:
        """Constraint index covering each node, or -1."""
        out = [-1] * n
        for j, c in enumerate(self.constraints):
            for v in c.nodes(n):
                out[v] = j
        return out

    def caps(self, n: int, k: int) -> list[int]:
        return [c.cap(n, k) for c in self.constraints]

    def degenerate(self, n: int, k: int) -> list[int]:
        """Indices of constraints whose subset has fewer than k nodes."""
        return [j for j, c in enumerate(self.constraints) if c.size(n) < k]


def coerce_spec(spec, eps=None) -> BalanceSpec:
    if spec is None:
        return BalanceSpec.single(0 if eps is None else eps)
    if isinstance(spec, BalanceSpec):
        return spec
    return BalanceSpec.single(spec)


def lambda_e(h: Hypergraph, p: Partition, e: int) -> int:
    """Number of parts that hyperedge ``e`` touches."""
    if not 0 <= e < h.m:
        raise ParameterError(f"edge index {e} out of range")
    return len({p.assign[v] for v in h.edges[e]})


def edge_cost(lam: int, weight: int, metric: CostMetric) -> int:
    if metric is CostMetric.CUTNET:
        return weight if lam > 1 else 0
    return weight * (lam - 1)


def cost(h: Hypergraph, p: Partition, metric=CostMetric.CONN) -> int:
    metric = CostMetric.parse(metric)
    if p.n != h.n:
        raise ParameterError("partition and hypergraph have different node counts")
    assign = p.assign
    total = 0
    for e, w in zip(h.edges, h.weights):
        lam = len({assign[v] for v in e})
        total += edge_cost(lam, w, metric)
    return total


def is_balanced(h: Hypergraph, p: Partition, spec) -> bool:
    spec = coerce_spec(spec)
    if p.n != h.n:
        raise ParameterError("partition and hypergraph have different node counts")
    for c in spec.constraints:
        counts = [0] * p.k
        for v in c.nodes(h.n):
            counts[p.assign[v]] += 1
        if max(counts) > c.cap(h.n, p.k):
            return False
    return True


def to_bisection_instance(h: Hypergraph, eps, k: int = 2) -> Hypergraph:
    """Pad with isolated nodes so that an eps-balanced instance becomes a k-section.

    The padded node count is ``k * floor((1+eps) n / k)``; every part then
    has exactly the old threshold as its size.
    """
    eps = as_fraction(eps)
    target = k * threshold(h.n, eps, k, STRICT)
    return h.with_isolated(max(0, target - h.n))


def merge_smallest_parts(h: Hypergraph, p: Partition, spec=None) -> Partition:
    """Merge the two smallest nonempty parts into the one with the lower label.

    Raises :class:`NotMergeable` when fewer than two parts are nonempty or
    when the merged part would exceed a threshold. Only the merged part is
    checked; the other parts are left exactly as they were.
    """
    spec = coerce_spec(spec)
    if p.n != h.n:
        raise ParameterError("partition and hypergraph have different node counts")
    sizes = p.sizes()
    nonempty = sorted((s, i) for i, s in enumerate(sizes) if s > 0)
    if len(nonempty) < 2:
        raise NotMergeable("only one nonempty part")
    (_, a), (_, b) = nonempty[0], nonempty[1]
    keep, drop = min(a, b), max(a, b)
    for c in spec.constraints:
        inside = sum(1 for v in c.nodes(h.n) if p.assign[v] in (a, b))
        if inside > c.cap(h.n, p.k):
            raise NotMergeable("merged part exceeds a balance threshold")
    return Partition(p.k, [keep if x == drop else x for x in p.assign])


def nonempty_part_bounds(k: int, eps) -> tuple[int, bool]:
    """Bound on nonempty parts in some optimum, and whether all parts are nonempty.

    Returns ``ceil(2k/(1+eps)) - 1`` together with the flag
    ``eps < 1/(k-1)``.
    """
    eps = as_fraction(eps)
    if k < 2:
        raise ParameterError("k must be at least 2")
    if not 0 <= eps < k - 1:
        raise ParameterError("epsilon must lie in [0, k-1)")
    bound = math.ceil(Fraction(2 * k) / (1 + eps)) - 1
    return bound, eps < Fraction(1, k - 1)
