"""Undirected weighted graphs and their symmetric operators.

Vertices are labelled ``1..N`` in every external format; internally matrices
are 0-based numpy arrays.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Literal

import numpy as np

from .errors import (
    DuplicateEdge,
    EdgeIndexOutOfRange,
    GraphParseError,
    MalformedLine,
    NonPositiveWeight,
    SelfLoop,
)

OperatorKind = Literal["laplacian", "adjacency"]


@dataclass(frozen=True)
class Graph:
    """Undirected weighted graph on vertices ``1..n_vertices``.

    ``edges`` holds ``(i, j, w)`` with ``i < j`` and ``w > 0``, sorted.
    Use :meth:`from_edges` rather than the raw constructor.
    """

    n_vertices: int
    edges: tuple[tuple[int, int, float], ...] = ()

    def __post_init__(self):
        if self.n_vertices < 1:
            raise ValueError("a graph needs at least one vertex")
        seen = set()
        for i, j, w in self.edges:
            if not i < j:
                raise ValueError(f"edge ({i}, {j}) is not normalised to i < j")
            if not 1 <= i <= self.n_vertices or not 1 <= j <= self.n_vertices:
                raise EdgeIndexOutOfRange(f"edge ({i}, {j}) outside 1..{self.n_vertices}")
            if (i, j) in seen:
                raise DuplicateEdge(f"edge ({i}, {j}) listed twice")
            if not (w > 0 and math.isfinite(w)):
                raise NonPositiveWeight(f"edge ({i}, {j}) has weight {w}")
            seen.add((i, j))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple]) -> "Graph":
        """Build a graph from ``(i, j)`` or ``(i, j, w)`` tuples in any orientation."""
        out = {}
        for e in edges:
            i, j = int(e[0]), int(e[1])
            w = float(e[2]) if len(e) > 2 else 1.0
            if i == j:
                raise SelfLoop(f"self-loop at vertex {i}")
            key = (min(i, j), max(i, j))
            if key in out:
                raise DuplicateEdge(f"edge {key} listed twice")
            out[key] = w
        return cls(n, tuple((i, j, w) for (i, j), w in sorted(out.items())))

    @property
    def n(self) -> int:
        return self.n_vertices

    def weight_matrix(self) -> np.ndarray:
        W = np.zeros((self.n_vertices, self.n_vertices))
        for i, j, w in self.edges:
            W[i - 1, j - 1] = w
            W[j - 1, i - 1] = w
        return W

    def degrees(self) -> np.ndarray:
        d = np.zeros(self.n_vertices)
        for i, j, w in self.edges:
            d[i - 1] += w
            d[j - 1] += w
        return d


@dataclass(frozen=True)
class GraphOperator:
    """A real symmetric matrix attached to a graph."""

    kind: OperatorKind
    matrix: np.ndarray = field(repr=False)

    def __post_init__(self):
        m = np.array(self.matrix, dtype=float)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"operator matrix must be square, got shape {m.shape}")
        if not np.array_equal(m, m.T):
            raise ValueError("operator matrix is not exactly symmetric")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def n(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True)
class Connectivity:
    components: int

    @property
    def connected(self) -> bool:
        return self.components == 1


def _parse_int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise MalformedLine(f"line {lineno}: expected an integer vertex label, got {token!r}") from None


def parse_edge_list(text: str, n: int | None = None) -> Graph:
    """Parse a 1-based edge list.

    Lines are ``i j [w]``; ``#`` starts a comment. An optional header line
    ``n <N>`` fixes the vertex count, otherwise ``n`` must be passed.
    Any unordered pair appearing twice is rejected.
    """
    header_n = None
    raw = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "n":
            if len(tokens) != 2 or header_n is not None:
                raise MalformedLine(f"line {lineno}: bad header {line!r}")
            header_n = _parse_int(tokens[1], lineno)
            continue
        if len(tokens) not in (2, 3):
            raise MalformedLine(f"line {lineno}: expected 'i j [w]', got {line!r}")
        i, j = _parse_int(tokens[0], lineno), _parse_int(tokens[1], lineno)
        w = 1.0
        if len(tokens) == 3:
            try:
                w = float(tokens[2])
            except ValueError:
                raise MalformedLine(f"line {lineno}: bad weight {tokens[2]!r}") from None
            if math.isnan(w):
                raise MalformedLine(f"line {lineno}: weight is NaN")
        raw.append((lineno, i, j, w))

    if header_n is not None and n is not None and header_n != n:
        raise GraphParseError(f"header says n={header_n} but n={n} was given")
    n = header_n if header_n is not None else n
    if n is None:
        raise GraphParseError("vertex count unknown: add an 'n <N>' header or pass n")
    if n < 1:
        raise GraphParseError(f"vertex count must be positive, got {n}")

    edges = {}
    for lineno, i, j, w in raw:
        if not (1 <= i <= n and 1 <= j <= n):
            raise EdgeIndexOutOfRange(f"line {lineno}: vertex outside 1..{n}")
        if i == j:
            raise SelfLoop(f"line {lineno}: self-loop at vertex {i}")
        if not (w > 0 and math.isfinite(w)):
            raise NonPositiveWeight(f"line {lineno}: weight {w} is not a positive real")
        key = (min(i, j), max(i, j))
        if key in edges:
            raise DuplicateEdge(f"line {lineno}: pair {key} already listed")
        edges[key] = w
    return Graph(n, tuple((i, j, w) for (i, j), w in sorted(edges.items())))


def serialize_edge_list(g: Graph) -> str:
    lines = [f"n {g.n_vertices}"]
    lines += [f"{i} {j} {w!r}" for i, j, w in g.edges]
    return "\n".join(lines) + "\n"


def adjacency(g: Graph) -> GraphOperator:
    return GraphOperator("adjacency", g.weight_matrix())


def laplacian(g: Graph) -> GraphOperator:
    """Combinatorial Laplacian ``D - W``.

    Exactly symmetric by construction. The diagonal is the negated off-diagonal
    row sum, so rows sum to exactly zero whenever the degrees are exactly
    representable (integer or dyadic weights), and to within one rounding
    of the degree otherwise.
    """
    L = np.zeros((g.n_vertices, g.n_vertices))
    for i, j, w in g.edges:
        a, b = i - 1, j - 1
        L[a, b] -= w
        L[b, a] -= w
    np.fill_diagonal(L, -L.sum(axis=1))
    return GraphOperator("laplacian", L)


def graph_operator(g: Graph, kind: OperatorKind) -> GraphOperator:
    if kind == "laplacian":
        return laplacian(g)
    if kind == "adjacency":
        return adjacency(g)
    raise ValueError(f"unknown operator kind {kind!r}")


def connectivity_check(g: Graph) -> Connectivity:
    """Count connected components by breadth-first search."""
    nbrs = [[] for _ in range(g.n_vertices)]
    for i, j, _ in g.edges:
        nbrs[i - 1].append(j - 1)
        nbrs[j - 1].append(i - 1)
    seen = [False] * g.n_vertices
    count = 0
    for start in range(g.n_vertices):
        if seen[start]:
            continue
        count += 1
        seen[start] = True
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in nbrs[v]:
                if not seen[u]:
                    seen[u] = True
                    queue.append(u)
    return Connectivity(count)


def dump_operator(op: GraphOperator) -> str:
    """Dense row-major text dump, 17 significant digits."""
    rows = [f"kind: {op.kind}"]
    rows += [" ".join(f"{x:.17g}" for x in row) for row in op.matrix]
    return "\n".join(rows) + "\n"


def load_operator(text: str) -> GraphOperator:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("kind:"):
        raise MalformedLine("operator dump must start with 'kind: <kind>'")
    kind = lines[0].split(":", 1)[1].strip()
    try:
        matrix = np.array([[float(t) for t in ln.split()] for ln in lines[1:]])
    except ValueError as exc:
        raise MalformedLine(f"bad operator entry: {exc}") from None
    return GraphOperator(kind, matrix)
