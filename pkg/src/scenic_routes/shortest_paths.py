"""All-pairs shortest paths over an arrangement (Floyd-Warshall).

The arrangement is a multigraph; distances are computed on its simple
projection where each node pair keeps its shortest edge (lowest id on
ties).  ``edge_choice`` remembers which concrete edge realizes each
adjacency so that paths can be expanded back into edge ids.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class DisconnectedGraphError(ValueError):
    """Raised when shortest paths are requested on a disconnected graph."""


@dataclass(frozen=True)
class ApspTable:
    dist: np.ndarray
    next_hop: np.ndarray
    edge_choice: dict[tuple[int, int], int]

    @property
    def size(self) -> int:
        return self.dist.shape[0]


def _simple_projection(n: int, edges) -> tuple[np.ndarray, dict[tuple[int, int], int]]:
    weight = np.full((n, n), np.inf)
    np.fill_diagonal(weight, 0.0)
    choice: dict[tuple[int, int], int] = {}
    for e in edges:
        if e.u == e.v:
            continue
        key = (min(e.u, e.v), max(e.u, e.v))
        best = choice.get(key)
        if best is None or e.length < weight[key] or (e.length == weight[key] and e.id < best):
            weight[e.u, e.v] = weight[e.v, e.u] = e.length
            choice[key] = e.id
    return weight, choice


def floyd_warshall(weight: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Distances and next-hop matrix of a dense weight matrix (``inf`` = no edge).

    Only strict improvements replace an entry, so ties keep the earlier
    route.  ``next_hop[i, j]`` is ``-1`` when ``j`` is unreachable.
    """
    n = weight.shape[0]
    dist = weight.astype(float, copy=True)
    nxt = np.where(np.isfinite(dist), np.arange(n)[None, :], -1)
    via = np.empty_like(dist)
    better = np.empty(dist.shape, dtype=bool)
    for k in range(n):
        np.add(dist[:, k, None], dist[None, k, :], out=via)
        np.less(via, dist, out=better)
        if better.any():
            np.copyto(dist, via, where=better)
            np.copyto(nxt, nxt[:, k, None], where=better)
    return dist, nxt


def compute_apsp(arr) -> ApspTable:
    """Shortest path table over the nodes and edges of ``arr``.

    Raises
    ------
    DisconnectedGraphError
        If some node pair has no connecting path; bridge the arrangement first.
    """
    n = len(arr.nodes)
    weight, choice = _simple_projection(n, arr.edges)
    dist, nxt = floyd_warshall(weight)
    if not np.isfinite(dist).all():
        raise DisconnectedGraphError("arrangement is disconnected; bridge components first")
    dist.setflags(write=False)
    nxt.setflags(write=False)
    return ApspTable(dist, nxt, choice)


def node_path(table: ApspTable, a: int, b: int) -> list[int]:
    if a == b:
        return [a]
    if table.next_hop[a, b] < 0:
        raise DisconnectedGraphError(f"no path between {a} and {b}")
    path = [a]
    while a != b:
        a = int(table.next_hop[a, b])
        path.append(a)
    return path


def reconstruct_path(table: ApspTable, a: int, b: int) -> list[int]:
    """Ordered edge ids of a shortest path from node ``a`` to node ``b``."""
    nodes = node_path(table, a, b)
    return [table.edge_choice[(min(u, v), max(u, v))] for u, v in zip(nodes, nodes[1:])]
