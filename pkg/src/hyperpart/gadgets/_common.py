"""Shared plumbing for the generators: an incremental builder and the instance record."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..core import BalanceSpec, Constraint, CostMetric, Hypergraph, Partition
from ..errors import ParameterError


class Builder:
    """Accumulates nodes, weighted hyperedges and constraints."""

    def __init__(self):
        self.n = 0
        self.edges: list = []
        self.weights: list = []
        self.constraints: list = []
        self.fillers: list = []

    def nodes(self, count: int) -> list[int]:
        out = list(range(self.n, self.n + count))
        self.n += count
        return out

    def edge(self, pins, weight: int = 1):
        pins = list(pins)
        if not pins:
            raise ParameterError("refusing to add an empty hyperedge")
        self.edges.append(pins)
        self.weights.append(weight)
        return len(self.edges) - 1

    def block(self, count: int, weight: int = 1) -> list[int]:
        """Fresh block of ``count`` nodes.

        Two nodes get a single pair edge instead of the inert singleton pair.
        """
        nodes = self.nodes(count)
        if count == 2:
            self.edge(nodes, weight)
        elif count >= 3:
            for i in range(count):
                self.edge(nodes[:i] + nodes[i + 1:], weight)
        return nodes

    def constraint(self, subset, eps=0, mode="strict-floor"):
        self.constraints.append(Constraint(frozenset(subset), eps, mode))

    def hypergraph(self) -> Hypergraph:
        return Hypergraph(self.n, self.edges, self.weights)

    def spec(self) -> BalanceSpec:
        return BalanceSpec(tuple(self.constraints))


@dataclass
class Instance:
    """Generated instance plus the facts its construction guarantees.

    ``certificate`` holds plain values (ints, Fractions, strings, bools)
    that the verification suites recompute independently; ``planted`` is a
    partition witnessing the claimed optimum where one exists.
    """

    name: str
    h: Hypergraph | None = None
    spec: BalanceSpec | None = None
    k: int = 2
    metric: CostMetric = CostMetric.CONN
    params: dict = field(default_factory=dict)
    certificate: dict = field(default_factory=dict)
    planted: Partition | None = None
    dag: object = None
    partition: Partition | None = None
    topology: object = None
    aux: dict = field(default_factory=dict)

    def meta(self) -> dict:
        out = {"gadget": self.name, "k": self.k, "metric": self.metric.value}
        for key, val in self.params.items():
            out[f"param.{key}"] = _flat(val)
        for key, val in self.certificate.items():
            out[f"cert.{key}"] = _flat(val)
        if self.h is not None:
            out["n"] = self.h.n
            out["m"] = self.h.m
        return out


def _flat(val) -> str:
    if isinstance(val, bool):
        return "true" if val else "false"
    if isinstance(val, Fraction):
        return str(val)
    if isinstance(val, (list, tuple)):
        return ",".join(_flat(x) for x in val)
    return str(val)
