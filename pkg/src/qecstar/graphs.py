"""Finite connected graphs, BFS distance matrices and star products.

Vertices are the integers ``0 .. n-1``.  A :class:`Graph` is immutable and
always connected; the check happens once, at construction.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from os import PathLike
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "GraphError",
    "SelfLoopError",
    "DuplicateEdgeError",
    "VertexRangeError",
    "DisconnectedGraphError",
    "EmbeddingError",
    "EdgeListFormatError",
    "Graph",
    "build_graph",
    "named_graph",
    "distance_matrix",
    "star_product",
    "is_isometric_subgraph",
    "parse_edge_list",
    "read_edge_list",
    "format_edge_list",
]


class GraphError(ValueError):
    """Base class for invalid graph input."""


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class VertexRangeError(GraphError):
    pass


class DisconnectedGraphError(GraphError):
    pass


class EmbeddingError(GraphError):
    """A vertex map that is not an injective, edge-preserving map."""


class EdgeListFormatError(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def degrees(self) -> list[int]:
        return [len(nbrs) for nbrs in self.adjacency]

    def is_tree(self) -> bool:
        return self.edge_count == self.vertex_count - 1

    def __len__(self) -> int:
        return self.vertex_count


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Validate an edge list and return the connected graph it describes.

    Raises a distinct :class:`GraphError` subclass for a self-loop, a
    duplicate edge (``(v, u)`` after ``(u, v)`` counts as a duplicate), an
    out-of-range index, or a disconnected result.
    """
    if n < 1:
        raise VertexRangeError(f"vertex count must be positive, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for edge in edges:
        u, v = (int(x) for x in edge)
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if v in nbrs[u]:
            raise DuplicateEdgeError(f"duplicate edge ({u}, {v})")
        nbrs[u].add(v)
        nbrs[v].add(u)
    adjacency = tuple(tuple(sorted(s)) for s in nbrs)
    if len(_bfs(adjacency, 0)) != n:
        raise DisconnectedGraphError("graph is not connected")
    return Graph(n, adjacency)


def _bfs(adjacency: Sequence[Sequence[int]], source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in adjacency[u]:
            if v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def named_graph(kind: str, n: int) -> Graph:
    """Complete graph, path, cycle or star on ``n`` vertices.

    ``path`` uses the edges ``{i, i+1}``; ``star`` is ``K_{1,n-1}`` with
    centre 0.
    """
    minimum = 3 if kind == "cycle" else 1
    if kind not in {"complete", "path", "cycle", "star"}:
        raise ValueError(f"unknown graph kind {kind!r}")
    if n < minimum:
        raise ValueError(f"{kind} graph needs n >= {minimum}, got {n}")
    if kind == "complete":
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    elif kind == "path":
        edges = [(i, i + 1) for i in range(n - 1)]
    elif kind == "cycle":
        edges = [(i, (i + 1) % n) for i in range(n)]
    else:
        edges = [(0, i) for i in range(1, n)]
    return build_graph(n, edges)


def distance_matrix(g: Graph) -> np.ndarray:
    """All-pairs shortest path lengths by one BFS per vertex (read-only int array)."""
    n = g.vertex_count
    D = np.zeros((n, n), dtype=np.int64)
    for s in range(n):
        for t, d in _bfs(g.adjacency, s).items():
            D[s, t] = d
    D.setflags(write=False)
    return D


def star_product(
    factors: Sequence[tuple[Graph, int]],
) -> tuple[Graph, list[tuple[int, ...]]]:
    """Glue the factors at their roots.

    The glued vertex is 0 in the product.  The non-root vertices of factor
    ``j`` occupy one contiguous block, in factor order and in increasing
    original index.  Returns the product and, per factor, the map sending
    each factor vertex to its product vertex.
    """
    if not factors:
        raise ValueError("star product needs at least one factor")
    for j, (g, root) in enumerate(factors):
        if not 0 <= root < g.vertex_count:
            raise VertexRangeError(f"factor {j}: root {root} out of range")
        if g.vertex_count < 2:
            raise ValueError(f"factor {j}: needs at least 2 vertices")

    maps: list[tuple[int, ...]] = []
    edges: list[tuple[int, int]] = []
    offset = 1
    for g, root in factors:
        mapping = [0] * g.vertex_count
        for v in range(g.vertex_count):
            if v != root:
                mapping[v] = offset
                offset += 1
        maps.append(tuple(mapping))
        edges.extend((mapping[u], mapping[v]) for u, v in g.edges)
    return build_graph(offset, edges), maps


def is_isometric_subgraph(g: Graph, h: Graph, embedding: Sequence[int]) -> bool:
    """True iff ``embedding`` (h-vertex -> g-vertex) preserves all distances.

    The map must be injective and send h-edges to g-edges, otherwise
    :class:`EmbeddingError` is raised.
    """
    emb = [int(x) for x in embedding]
    if len(emb) != h.vertex_count:
        raise EmbeddingError("embedding length does not match h")
    if any(not 0 <= x < g.vertex_count for x in emb):
        raise EmbeddingError("embedding leaves the vertex set of g")
    if len(set(emb)) != len(emb):
        raise EmbeddingError("embedding is not injective")
    g_adj = [set(nbrs) for nbrs in g.adjacency]
    for u, v in h.edges:
        if emb[v] not in g_adj[emb[u]]:
            raise EmbeddingError(f"h-edge ({u}, {v}) is not mapped to a g-edge")
    Dg = distance_matrix(g)
    Dh = distance_matrix(h)
    idx = np.asarray(emb)
    return bool(np.array_equal(Dg[np.ix_(idx, idx)], Dh))


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n <count>`` / ``u v`` edge-list format (``#`` comments)."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "n":
                raise EdgeListFormatError(f"line {lineno}: expected 'n <vertex_count>'")
            n = _parse_int(fields[1], lineno)
            continue
        if len(fields) != 2:
            raise EdgeListFormatError(f"line {lineno}: expected 'u v'")
        edges.append((_parse_int(fields[0], lineno), _parse_int(fields[1], lineno)))
    if n is None:
        raise EdgeListFormatError("missing 'n <vertex_count>' header")
    return build_graph(n, edges)


def _parse_int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise EdgeListFormatError(f"line {lineno}: {token!r} is not an integer") from None


def read_edge_list(path: str | PathLike) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def format_edge_list(g: Graph) -> str:
    lines = [f"n {g.vertex_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
