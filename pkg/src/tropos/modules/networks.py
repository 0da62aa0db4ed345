"""Planar networks and their weight matrices.

A network is a weighted acyclic digraph with n sources and n targets,
numbered bottom to top. Its tropical weight matrix records the heaviest
source-to-target path, its series weight matrix the sum of path weights.
Ladder networks realize products of Jacobi factors one stage per factor.
"""

import logging
import random
from collections.abc import Callable, Hashable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, TypeVar

import networkx as nx

from tropos.errors import DimensionError, InconsistentData, NotAcyclic
from tropos.types import JacobiKind

from .factorization import JacobiFactor, check_factor_index
from .series_field import SeriesMatrix, SeriesRat, parse_series
from .trop_core import (
    NEG_INF,
    ZERO,
    TropMatrix,
    format_scalar,
    to_scalar,
    trop_add,
    trop_mul,
)

logger = logging.getLogger("tropos.networks")

Node = Hashable
W = TypeVar("W")


@dataclass
class PlanarNetwork:
    """Acyclic digraph with ``weight`` on edges and ``col``/``row`` on nodes.

    Planarity of hand-built networks is trusted; ladder networks are planar
    by construction.
    """

    graph: nx.DiGraph
    sources: list[Node] = field(default_factory=list)
    targets: list[Node] = field(default_factory=list)

    def __post_init__(self) -> None:
        missing = [v for v in [*self.sources, *self.targets] if v not in self.graph]
        if missing:
            raise InconsistentData(f"Sources or targets not in the network: {missing}")

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.sources), len(self.targets))

    def edge_count(self) -> int:
        return int(self.graph.number_of_edges())


def _topological_order(G: PlanarNetwork) -> list[Node]:
    try:
        return list(nx.topological_sort(G.graph))
    except nx.NetworkXUnfeasible as e:
        raise NotAcyclic("Network contains a directed cycle") from e


def _path_dp(
    G: PlanarNetwork,
    zero: W,
    one: W,
    add: Callable[[W, W], W],
    mul: Callable[[W, W], W],
    weight: Callable[[dict[str, Any]], W],
) -> list[list[W]]:
    """Semiring path sums from every source to every target in topological order."""
    order = _topological_order(G)
    result: list[list[W]] = []
    for source in G.sources:
        totals: dict[Node, W] = {v: zero for v in order}
        totals[source] = one
        for u in order:
            for _, v, data in G.graph.out_edges(u, data=True):
                totals[v] = add(totals[v], mul(totals[u], weight(data)))
        result.append([totals[t] for t in G.targets])
    return result


def weight_matrix_trop(G: PlanarNetwork) -> TropMatrix:
    """Heaviest path weight from source i to target j; -inf if there is no path.

    Raises:
        NotAcyclic: If the graph has a directed cycle.
    """
    rows = _path_dp(
        G, NEG_INF, ZERO, trop_add, trop_mul, lambda data: to_scalar(data.get("weight", 0))
    )
    return TropMatrix(tuple(tuple(row) for row in rows))


def weight_matrix_series(G: PlanarNetwork) -> SeriesMatrix:
    """Sum of path weights from source i to target j.

    Raises:
        NotAcyclic: If the graph has a directed cycle.
    """
    rows = _path_dp(
        G,
        SeriesRat(0),
        SeriesRat(1),
        lambda a, b: a + b,
        lambda a, b: a * b,
        lambda data: parse_series(data.get("weight", 1)),
    )
    return SeriesMatrix(tuple(tuple(row) for row in rows))


# ============================================================================
# Construction
# ============================================================================


def _ladder_node(stage: int, wire: int) -> str:
    return f"{stage}:{wire}"


def network_from_jacobi(fs: Sequence[JacobiFactor], n: int) -> PlanarNetwork:
    """Ladder network with one stage per factor.

    Every stage has a horizontal edge per wire, of weight 0 except on wire i
    of a ``Diag(i, a)`` stage, which carries ``a``. ``Lower(i, a)`` adds an
    edge from wire i+1 down to wire i and ``Upper(i, a)`` one from wire i up
    to wire i+1, both of weight ``a``.

    Raises:
        FactorIndexError: If a factor does not fit n wires.
    """
    graph = nx.DiGraph()
    for stage in range(len(fs) + 1):
        for wire in range(n):
            graph.add_node(_ladder_node(stage, wire), col=stage, row=wire)
    for stage, f in enumerate(fs):
        check_factor_index(f.kind, f.i, n)
        for wire in range(n):
            w = f.a if f.kind is JacobiKind.DIAG and wire == f.i else ZERO
            graph.add_edge(_ladder_node(stage, wire), _ladder_node(stage + 1, wire), weight=w)
        if f.kind is JacobiKind.LOWER:
            graph.add_edge(
                _ladder_node(stage, f.i + 1), _ladder_node(stage + 1, f.i), weight=f.a
            )
        elif f.kind is JacobiKind.UPPER:
            graph.add_edge(
                _ladder_node(stage, f.i), _ladder_node(stage + 1, f.i + 1), weight=f.a
            )
    last = len(fs)
    return PlanarNetwork(
        graph,
        sources=[_ladder_node(0, w) for w in range(n)],
        targets=[_ladder_node(last, w) for w in range(n)],
    )


def lift_network(G: PlanarNetwork, rng: random.Random | None = None) -> PlanarNetwork:
    """Copy of ``G`` with every tropical weight w replaced by ``t^w``.

    With ``rng`` each edge also gets a random positive rational coefficient,
    so the lifted weight matrix stays totally nonnegative with valuation
    equal to the tropical weights.
    """
    graph = G.graph.copy()
    for _, _, data in graph.edges(data=True):
        weight = SeriesRat.t_power(to_scalar(data.get("weight", 0)))
        if rng is not None:
            weight = weight * Fraction(rng.randint(1, 9), rng.randint(1, 4))
        data["weight"] = weight
    return PlanarNetwork(graph, list(G.sources), list(G.targets))


def concatenate(G1: PlanarNetwork, G2: PlanarNetwork) -> PlanarNetwork:
    """Glue the targets of ``G1`` to the sources of ``G2``.

    The weight matrix of the result is the product of the two weight matrices.

    Raises:
        DimensionError: If the target and source counts differ.
    """
    if len(G1.targets) != len(G2.sources):
        raise DimensionError(
            f"Cannot glue {len(G1.targets)} targets to {len(G2.sources)} sources"
        )
    left = nx.relabel_nodes(G1.graph, {v: ("L", v) for v in G1.graph})
    glue = dict(zip(G2.sources, G1.targets, strict=True))
    right = nx.relabel_nodes(
        G2.graph, {v: ("L", glue[v]) if v in glue else ("R", v) for v in G2.graph}
    )
    offset = 1 + max((data.get("col", 0) for _, data in G1.graph.nodes(data=True)), default=0)
    for node, data in right.nodes(data=True):
        if node[0] == "R" and "col" in data:
            data["col"] = data["col"] + offset
    # compose keeps the attributes of its second argument on shared nodes
    graph = nx.compose(right, left)
    return PlanarNetwork(
        graph,
        sources=[("L", v) for v in G1.sources],
        targets=[("L", glue[v]) if v in glue else ("R", v) for v in G2.targets],
    )


def example_network(alpha: Any = 6) -> PlanarNetwork:
    """Two-wire network with weight matrix ``[[1, 3], [4, max(alpha, 6)]]``."""
    graph = nx.DiGraph()
    graph.add_node("s1", col=0, row=0)
    graph.add_node("s2", col=0, row=1)
    graph.add_node("a", col=1, row=0)
    graph.add_node("b", col=2, row=0)
    graph.add_node("u1", col=3, row=0)
    graph.add_node("u2", col=3, row=1)
    for u, v, w in [
        ("s1", "a", 0),
        ("s2", "a", 3),
        ("s2", "u2", alpha),
        ("a", "b", 1),
        ("b", "u1", 0),
        ("b", "u2", 2),
    ]:
        graph.add_edge(u, v, weight=to_scalar(w))
    return PlanarNetwork(graph, sources=["s1", "s2"], targets=["u1", "u2"])


# ============================================================================
# Documents
# ============================================================================


def _format_weight(value: Any) -> str:
    if isinstance(value, SeriesRat):
        return str(value)
    return format_scalar(to_scalar(value))


def network_to_document(G: PlanarNetwork) -> dict[str, Any]:
    """Network JSON: ``{nodes, edges, sources, targets}`` with string ids."""
    ids = {v: str(v) for v in G.graph}
    if len(set(ids.values())) != len(ids):
        ids = {v: str(i) for i, v in enumerate(G.graph)}
    return {
        "nodes": [
            {"id": ids[v], "col": data.get("col", 0), "row": data.get("row", 0)}
            for v, data in G.graph.nodes(data=True)
        ],
        "edges": [
            {"from": ids[u], "to": ids[v], "weight": _format_weight(data.get("weight", 0))}
            for u, v, data in G.graph.edges(data=True)
        ],
        "sources": [ids[v] for v in G.sources],
        "targets": [ids[v] for v in G.targets],
    }


def network_from_document(doc: dict[str, Any], series: bool = False) -> PlanarNetwork:
    """Inverse of ``network_to_document``; weights are parsed as tropical scalars or series.

    Raises:
        InconsistentData: If an edge or endpoint names an unknown node.
        ParseError: If a weight cannot be parsed.
    """
    parse: Callable[[Any], Any] = parse_series if series else to_scalar
    default = "1" if series else 0
    graph = nx.DiGraph()
    for node in doc.get("nodes", []):
        graph.add_node(str(node["id"]), col=node.get("col", 0), row=node.get("row", 0))
    for edge in doc.get("edges", []):
        u, v = str(edge["from"]), str(edge["to"])
        if u not in graph or v not in graph:
            raise InconsistentData(f"Edge {u} -> {v} names an unknown node")
        graph.add_edge(u, v, weight=parse(edge.get("weight", default)))
    return PlanarNetwork(
        graph,
        sources=[str(v) for v in doc.get("sources", [])],
        targets=[str(v) for v in doc.get("targets", [])],
    )

