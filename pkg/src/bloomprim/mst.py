"""Prim-style minimum spanning tree solvers.

Two solvers share the same greedy frontier expansion but differ in how
they remember visited nodes:

* :func:`prim_baseline` tracks visited nodes in an exact hash set and
  returns the true MST.
* :func:`prim_bloom` tracks them in a Bloom filter.  A false positive
  makes the solver skip a node permanently, so its tree may span fewer
  nodes and cost less than the true MST; it never selects a node twice
  and never forms a cycle.

Frontier entries are ``(weight, edge_id, sink_node)`` tuples, so the
heap orders by weight with the global edge id as a deterministic
tie-break.  The start node is marked visited before the main loop, which
keeps frontier edges pointing back at it from being selected.

The baseline runs in O(|E| log |V|); the filter variant additionally
hashes on every membership check, for O(k |E| log |V|) with k the
filter's hash count.  Both solvers are pure functions of their inputs
and may run concurrently over a shared graph.

Results carry the selected edges as a bit array indexed by edge id, from
which the full tree is recoverable with :func:`recover_edges`.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .bitset import BitArray
from .bloom import BloomFilter
from .graph import Graph


@dataclass
class MstResult:
    """Outcome of one solver run.

    ``edge_bits`` has one bit per graph edge; bit ``e`` is set iff edge
    ``e`` was selected.  ``spanned_node_count`` includes the start node,
    so an exact solve of a connected graph has
    ``selected_edge_count == node_count - 1`` and
    ``spanned_node_count == node_count``.
    """

    total_cost: float
    edge_bits: BitArray
    selected_edge_count: int
    spanned_node_count: int


class ExactSet:
    """Exact visited-set with the same ``add``/``contains`` surface as
    :class:`~bloomprim.bloom.BloomFilter`; substituting it into
    :func:`prim_bloom` removes all false positives."""

    __slots__ = ("_items",)

    def __init__(self):
        self._items: set[int] = set()

    def add(self, key: int) -> None:
        self._items.add(key)

    def contains(self, key: int) -> bool:
        return key in self._items

    __contains__ = contains


def _check_start(graph: Graph, start: int) -> None:
    if not 0 <= start < graph.node_count:
        raise ValueError(f"start node {start} out of range [0, {graph.node_count})")


def prim_baseline(graph: Graph, start: int = 0) -> MstResult:
    """Exact Prim's algorithm with a hash-set visited structure.

    Returns the MST of the component containing ``start`` (the full MST
    when the graph is connected).
    """
    _check_start(graph, start)
    visited = {start}
    edge_bits = BitArray(graph.edge_count)
    total_cost = 0.0
    selected = 0
    spanned = 1
    node_count = graph.node_count
    heap: list[tuple[float, int, int]] = []
    push = heapq.heappush
    pop = heapq.heappop

    nodes, weights, edge_ids = graph.adjacent(start)
    for node, weight, edge_id in zip(nodes, weights, edge_ids):
        if node not in visited:
            push(heap, (weight, edge_id, node))

    while heap:
        weight, edge_id, node = pop(heap)
        if node in visited:
            continue
        visited.add(node)
        total_cost += weight
        selected += 1
        spanned += 1
        edge_bits.set(edge_id)
        if spanned == node_count:
            break
        nodes, weights, edge_ids = graph.adjacent(node)
        for nxt, nxt_weight, nxt_edge in zip(nodes, weights, edge_ids):
            if nxt not in visited:
                push(heap, (nxt_weight, nxt_edge, nxt))

    return MstResult(total_cost, edge_bits, selected, spanned)


def prim_bloom(
    graph: Graph,
    start: int = 0,
    epsilon: float = 0.01,
    hash_seed: int = 0,
    visited=None,
) -> MstResult:
    """Prim's algorithm with a Bloom-filter visited structure.

    The filter is sized for ``graph.node_count`` keys at rate
    ``epsilon``.  Pass ``visited`` (any object with ``add``/``contains``
    over int keys, e.g. :class:`ExactSet`) to substitute the membership
    structure; with an exact set the result equals
    :func:`prim_baseline` bit for bit.

    A false positive drops the popped frontier entry, and the filter
    only ever gains bits, so the affected node stays unreachable; the
    result then reports ``spanned_node_count < node_count``.
    """
    _check_start(graph, start)
    if visited is None:
        visited = BloomFilter.for_capacity(graph.node_count, epsilon, hash_seed)
    contains = visited.contains
    add = visited.add

    add(start)
    edge_bits = BitArray(graph.edge_count)
    total_cost = 0.0
    selected = 0
    spanned = 1
    node_count = graph.node_count
    heap: list[tuple[float, int, int]] = []
    push = heapq.heappush
    pop = heapq.heappop

    nodes, weights, edge_ids = graph.adjacent(start)
    for node, weight, edge_id in zip(nodes, weights, edge_ids):
        if not contains(node):
            push(heap, (weight, edge_id, node))

    while heap:
        weight, edge_id, node = pop(heap)
        if contains(node):
            continue
        add(node)
        total_cost += weight
        selected += 1
        spanned += 1
        edge_bits.set(edge_id)
        if spanned == node_count:
            break
        nodes, weights, edge_ids = graph.adjacent(node)
        for nxt, nxt_weight, nxt_edge in zip(nodes, weights, edge_ids):
            if not contains(nxt):
                push(heap, (nxt_weight, nxt_edge, nxt))

    return MstResult(total_cost, edge_bits, selected, spanned)


def recover_edges(result: MstResult, graph: Graph) -> list[tuple[int, int, float]]:
    """Selected edges as ``(u, v, weight)`` triples in ascending edge id."""
    if len(result.edge_bits) != graph.edge_count:
        raise ValueError(
            f"edge bit array has {len(result.edge_bits)} bits, "
            f"graph has {graph.edge_count} edges"
        )
    u = graph.edge_u
    v = graph.edge_v
    w = graph.edge_weight
    return [(int(u[e]), int(v[e]), float(w[e])) for e in result.edge_bits.iter_set()]
