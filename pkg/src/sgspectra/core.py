"""Signed-graph data model and structural operations.

A signed graph is carried as a symmetric n x n numpy int8 matrix with
entries in {-1, 0, +1} and zero diagonal.  All values are immutable after
construction and every operation is a pure function, so everything can be
shared freely across worker processes.
"""

from __future__ import annotations

from collections import deque

import numpy as np


class SignedGraph:
    """Immutable signed graph on vertices 0..n-1."""

    __slots__ = ("n", "sign")

    def __init__(self, sign):
        a = np.ascontiguousarray(np.asarray(sign, dtype=np.int8))
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("sign matrix must be square")
        if a.size:
            if not np.array_equal(a, a.T):
                raise ValueError("sign matrix must be symmetric")
            if np.any(np.diagonal(a) != 0):
                raise ValueError("sign matrix must have zero diagonal")
            if np.any(np.abs(a) > 1):
                raise ValueError("sign matrix entries must be in {-1, 0, +1}")
        a.setflags(write=False)
        object.__setattr__(self, "sign", a)
        object.__setattr__(self, "n", a.shape[0])

    def __setattr__(self, name, value):
        raise AttributeError("SignedGraph is immutable")

    @classmethod
    def empty(cls, n: int) -> "SignedGraph":
        return cls(np.zeros((n, n), dtype=np.int8))

    @classmethod
    def from_edges(cls, n: int, edges) -> "SignedGraph":
        a = np.zeros((n, n), dtype=np.int8)
        for u, v, s in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"vertex out of range: ({u}, {v})")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if s not in (-1, 1):
                raise ValueError(f"invalid sign {s!r} for edge ({u}, {v})")
            if a[u, v] != 0:
                raise ValueError(f"repeated edge ({u}, {v})")
            a[u, v] = a[v, u] = s
        return cls(a)

    @classmethod
    def complete(cls, n: int, sign: int = 1) -> "SignedGraph":
        a = np.full((n, n), sign, dtype=np.int8)
        np.fill_diagonal(a, 0)
        return cls(a)

    def edges(self):
        """Edges as (u, v, sign) with u < v, sorted lexicographically."""
        us, vs = np.nonzero(np.triu(self.sign))
        return [(int(u), int(v), int(self.sign[u, v])) for u, v in zip(us, vs)]

    def edge_count(self) -> int:
        return int(np.count_nonzero(self.sign)) // 2

    def __eq__(self, other):
        return (isinstance(other, SignedGraph) and self.n == other.n
                and np.array_equal(self.sign, other.sign))

    def __hash__(self):
        return hash((self.n, self.sign.tobytes()))

    def __repr__(self):
        return f"SignedGraph(n={self.n}, edges={self.edges()})"


class UnsignedGraph:
    """Immutable simple graph as a symmetric 0/1 matrix."""

    __slots__ = ("n", "adj")

    def __init__(self, adj):
        a = np.ascontiguousarray(np.asarray(adj, dtype=np.int8))
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency matrix must be square")
        if a.size:
            if not np.array_equal(a, a.T):
                raise ValueError("adjacency matrix must be symmetric")
            if np.any(np.diagonal(a) != 0):
                raise ValueError("adjacency matrix must have zero diagonal")
            if np.any((a != 0) & (a != 1)):
                raise ValueError("adjacency entries must be 0/1")
        a.setflags(write=False)
        object.__setattr__(self, "adj", a)
        object.__setattr__(self, "n", a.shape[0])

    def __setattr__(self, name, value):
        raise AttributeError("UnsignedGraph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges) -> "UnsignedGraph":
        a = np.zeros((n, n), dtype=np.int8)
        for u, v in edges:
            a[u, v] = a[v, u] = 1
        return cls(a)

    def edges(self):
        us, vs = np.nonzero(np.triu(self.adj))
        return [(int(u), int(v)) for u, v in zip(us, vs)]

    def edge_count(self) -> int:
        return int(np.count_nonzero(self.adj)) // 2

    def degrees(self):
        return [int(d) for d in self.adj.sum(axis=0)]

    def __eq__(self, other):
        return (isinstance(other, UnsignedGraph) and self.n == other.n
                and np.array_equal(self.adj, other.adj))

    def __hash__(self):
        return hash((self.n, self.adj.tobytes()))

    def __repr__(self):
        return f"UnsignedGraph(n={self.n}, edges={self.edges()})"


def _check_vertex_set(n: int, x) -> list[int]:
    xs = sorted(set(int(v) for v in x))
    if xs and (xs[0] < 0 or xs[-1] >= n):
        raise ValueError(f"vertex index out of range for order {n}: {xs}")
    return xs


def switch(g: SignedGraph, x) -> SignedGraph:
    """Negate every edge with exactly one endpoint in x (an involution)."""
    xs = _check_vertex_set(g.n, x)
    d = np.ones(g.n, dtype=np.int8)
    d[xs] = -1
    return SignedGraph(d[:, None] * g.sign * d[None, :])


def negate(g: SignedGraph) -> SignedGraph:
    return SignedGraph(-g.sign)


def underlying(g: SignedGraph) -> UnsignedGraph:
    return UnsignedGraph(np.abs(g.sign))


def with_all_positive(h: UnsignedGraph) -> SignedGraph:
    """The all-positive signing of h."""
    return SignedGraph(h.adj)


def induced(g: SignedGraph, s) -> SignedGraph:
    """Induced signed subgraph on s, keeping the relative vertex order."""
    idx = _check_vertex_set(g.n, s)
    return SignedGraph(g.sign[np.ix_(idx, idx)])


def induced_unsigned(h: UnsignedGraph, s) -> UnsignedGraph:
    idx = _check_vertex_set(h.n, s)
    return UnsignedGraph(h.adj[np.ix_(idx, idx)])


def disjoint_union(g: SignedGraph, h: SignedGraph) -> SignedGraph:
    n = g.n + h.n
    a = np.zeros((n, n), dtype=np.int8)
    a[:g.n, :g.n] = g.sign
    a[g.n:, g.n:] = h.sign
    return SignedGraph(a)


def components(g: SignedGraph) -> list[list[int]]:
    """Connected components of the underlying graph, each sorted, ordered
    by smallest vertex.  The empty graph has no components."""
    seen = [False] * g.n
    out = []
    for start in range(g.n):
        if seen[start]:
            continue
        comp = []
        queue = deque([start])
        seen[start] = True
        while queue:
            v = queue.popleft()
            comp.append(v)
            for w in np.nonzero(g.sign[v])[0]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(int(w))
        out.append(sorted(comp))
    return out


def is_connected(g: SignedGraph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def bipartition(h: UnsignedGraph):
    """Two colour classes when h is bipartite, else None.

    Deterministic: within each component the class of the smallest vertex
    is the first one.
    """
    color = [-1] * h.n
    for start in range(h.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in np.nonzero(h.adj[v])[0]:
                w = int(w)
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    left = [v for v in range(h.n) if color[v] == 0]
    right = [v for v in range(h.n) if color[v] == 1]
    return left, right


def complement(h: UnsignedGraph) -> UnsignedGraph:
    a = 1 - h.adj
    np.fill_diagonal(a, 0)
    return UnsignedGraph(a)


def seidel_graph(h: UnsignedGraph) -> SignedGraph:
    """Complete signed graph with -1 on the edges of h, +1 elsewhere."""
    a = np.where(h.adj != 0, -1, 1).astype(np.int8)
    np.fill_diagonal(a, 0)
    return SignedGraph(a)


def is_complete(g: SignedGraph) -> bool:
    off = np.abs(g.sign).sum()
    return int(off) == g.n * (g.n - 1)


_SIGN_TOKENS = {"+": 1, "-": -1, "1": 1, "-1": -1}


def parse(text: str) -> SignedGraph:
    """Parse the `.sg` text format (see `serialize`)."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("malformed header: empty input")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "sg":
        raise ValueError(f"malformed header: {lines[0]!r}")
    try:
        n = int(head[1])
    except ValueError:
        raise ValueError(f"malformed header: {lines[0]!r}") from None
    if n < 0:
        raise ValueError(f"malformed header: negative order {n}")
    a = np.zeros((n, n), dtype=np.int8)
    for ln in lines[1:]:
        fields = ln.split()
        if len(fields) != 3:
            raise ValueError(f"malformed edge line: {ln!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ValueError(f"malformed edge line: {ln!r}") from None
        if fields[2] not in _SIGN_TOKENS:
            raise ValueError(f"invalid sign token in line: {ln!r}")
        s = _SIGN_TOKENS[fields[2]]
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"vertex out of range in line: {ln!r}")
        if a[u, v] != 0:
            raise ValueError(f"repeated edge ({u}, {v})")
        a[u, v] = a[v, u] = s
    return SignedGraph(a)


def serialize(g: SignedGraph) -> str:
    """Canonical `.sg` text: header `sg <n>`, then `u v +|-` lines sorted
    lexicographically by (u, v) with u < v."""
    out = [f"sg {g.n}"]
    for u, v, s in g.edges():
        out.append(f"{u} {v} {'+' if s > 0 else '-'}")
    return "\n".join(out) + "\n"
