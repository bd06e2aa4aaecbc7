"""Canonical forms for signed graphs up to switching isomorphism.

The reduction is the matched double cover: every vertex v becomes a fiber
pair (v,+), (v,-) joined by a fiber edge, a positive edge uv lifts to
(u,+)(v,+) and (u,-)(v,-), a negative edge to the two cross pairs.
Swapping a fiber is exactly a switching at that vertex, so two signed
graphs are switching isomorphic iff their covers are isomorphic by a map
that respects the two edge colours (cover vs fiber).  The cover is
canonically labeled by colour refinement plus individualization with
automorphism pruning, and the resulting byte string is the canonical code:
equal codes iff switching isomorphic.  Negation is NOT quotiented out.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .core import SignedGraph, negate


@dataclass(frozen=True)
class MatchedDoubleCover:
    base_n: int
    rel: np.ndarray  # (2n, 2n): 0 none, 1 cover edge, 2 fiber pair

    @property
    def cover_edges(self):
        n = self.base_n
        out = []
        for u in range(2 * n):
            for v in range(u + 1, 2 * n):
                if self.rel[u, v] == 1:
                    out.append(((u % n, "+-"[u // n]), (v % n, "+-"[v // n])))
        return out

    @property
    def fiber_pairs(self):
        return [((v, "+"), (v, "-")) for v in range(self.base_n)]


def matched_double_cover(g: SignedGraph) -> MatchedDoubleCover:
    return MatchedDoubleCover(base_n=g.n, rel=_cover_rel(g.sign))


def _cover_rel(sign: np.ndarray) -> np.ndarray:
    n = sign.shape[0]
    rel = np.zeros((2 * n, 2 * n), dtype=np.int8)
    pos = sign == 1
    neg = sign == -1
    rel[:n, :n] = pos
    rel[n:, n:] = pos
    rel[:n, n:] = neg
    rel[n:, :n] = neg
    idx = np.arange(n)
    rel[idx, idx + n] = 2
    rel[idx + n, idx] = 2
    return rel


def _refine(rel1: np.ndarray, rel2: np.ndarray, colors: np.ndarray) -> np.ndarray:
    """Colour refinement with two edge relations.  Colour ids are the ranks
    of the sorted signatures, hence isomorphism-invariant."""
    n = len(colors)
    while True:
        k = int(colors.max()) + 1 if n else 0
        onehot = np.zeros((n, k), dtype=np.int32)
        onehot[np.arange(n), colors] = 1
        sig = np.concatenate(
            [colors[:, None], rel1 @ onehot, rel2 @ onehot], axis=1)
        _, new = np.unique(sig, axis=0, return_inverse=True)
        new = new.astype(np.int32).reshape(n)
        if np.array_equal(new, colors):
            return colors
        colors = new


def _canonical_cover_code(rel: np.ndarray) -> bytes:
    """Minimum labeled code of an edge-bicoloured graph over the leaves of
    an individualization-refinement search with automorphism pruning."""
    n = rel.shape[0]
    if n == 0:
        return b""
    rel1 = (rel == 1).astype(np.int32)
    rel2 = (rel == 2).astype(np.int32)
    combined = rel.astype(np.int8)
    triu = np.triu_indices(n, 1)

    best: dict = {"code": None, "perm": None}
    autos: list[np.ndarray] = []

    def leaf(colors: np.ndarray) -> None:
        perm = np.argsort(colors, kind="stable")
        code = combined[np.ix_(perm, perm)][triu].tobytes()
        if best["code"] is None or code < best["code"]:
            best["code"] = code
            best["perm"] = perm
        elif code == best["code"]:
            gamma = np.empty(n, dtype=np.int64)
            gamma[best["perm"]] = perm
            if not np.array_equal(gamma, np.arange(n)):
                autos.append(gamma)

    def node(colors: np.ndarray, path: tuple[int, ...]) -> None:
        colors = _refine(rel1, rel2, colors)
        if int(colors.max()) == n - 1:
            leaf(colors)
            return
        counts = np.bincount(colors)
        target = int(np.argmax(counts > 1))
        cell = np.nonzero(colors == target)[0]
        tried: set[int] = set()
        for v in cell:
            v = int(v)
            if v in tried:
                continue
            child = colors.astype(np.int32) * 2
            child[v] -= 1
            node(child, path + (v,))
            tried.add(v)
            # close the tried set under automorphisms that fix the path
            fixers = [a for a in autos if all(a[p] == p for p in path)]
            frontier = list(tried)
            while frontier:
                u = frontier.pop()
                for a in fixers:
                    w = int(a[u])
                    if w not in tried:
                        tried.add(w)
                        frontier.append(w)

    node(np.zeros(n, dtype=np.int32), ())
    return best["code"]


def _matrix_components(sign: np.ndarray) -> list[list[int]]:
    n = sign.shape[0]
    seen = [False] * n
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in np.nonzero(sign[v])[0]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(int(w))
        comps.append(sorted(comp))
    return comps


def code_for_sign_matrix(sign: np.ndarray) -> bytes:
    """Canonical code of a raw sign matrix (componentwise, then sorted)."""
    n = sign.shape[0]
    blocks = []
    for comp in _matrix_components(sign):
        sub = sign[np.ix_(comp, comp)]
        blocks.append((len(comp), _canonical_cover_code(_cover_rel(sub))))
    blocks.sort()
    out = bytearray()
    out += n.to_bytes(2, "big")
    for size, blob in blocks:
        out += size.to_bytes(2, "big")
        out += len(blob).to_bytes(4, "big")
        out += blob
    return bytes(out)


@lru_cache(maxsize=1 << 16)
def _cached_code(n: int, payload: bytes) -> bytes:
    sign = np.frombuffer(payload, dtype=np.int8).reshape(n, n)
    return code_for_sign_matrix(sign)


def canonical_code(g: SignedGraph) -> bytes:
    """Byte string equal for two signed graphs iff one can be switched and
    relabeled into the other."""
    return _cached_code(g.n, g.sign.tobytes())


def canonical_hex(g: SignedGraph) -> str:
    return canonical_code(g).hex()


def switching_isomorphic(g: SignedGraph, h: SignedGraph) -> bool:
    if g.n != h.n:
        return False
    return canonical_code(g) == canonical_code(h)


def is_sign_symmetric(g: SignedGraph) -> bool:
    """True iff g is switching isomorphic with its negative."""
    return switching_isomorphic(g, negate(g))
