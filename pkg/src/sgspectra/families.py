"""Constructors and closed-form spectrum oracles for the catalogued
families of signed graphs whose spectrum has all but at most two
eigenvalues equal to +1 or -1, plus the recognizer for the class of
unsigned graphs that are a clique with isolated vertices or the complement
(complete split graphs) and its order-4 forbidden-subgraph test.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import poly
from .core import SignedGraph, UnsignedGraph, complement

FAMILY_TAGS = ("s-ml", "bip-a", "bip-b", "bip-c",
               "a1", "a2", "a3", "a4", "sporadic-1", "sporadic-2")

_PARAMETRIC_ML = {"s-ml", "a1", "a2", "a3", "a4"}
_PARAMETRIC_M = {"bip-c"}


@dataclass(frozen=True)
class FamilySpec:
    tag: str
    m: int | None = None
    l: int | None = None

    def __post_init__(self):
        if self.tag not in FAMILY_TAGS:
            raise ValueError(f"unknown family tag {self.tag!r}")
        if self.tag in _PARAMETRIC_ML:
            if self.m is None or self.l is None or self.m < 1 or self.l < 1:
                raise ValueError(f"family {self.tag} requires m >= 1 and l >= 1")
        elif self.tag in _PARAMETRIC_M:
            if self.m is None or self.m < 3:
                raise ValueError("family bip-c requires m >= 3")
            if self.l is not None:
                raise ValueError("family bip-c takes no l parameter")
        else:
            if self.m is not None or self.l is not None:
                raise ValueError(f"family {self.tag} takes no parameters")


@dataclass(frozen=True)
class ClosedFormSpectrum:
    """Multiplicities of -1 and +1 plus the residual eigenvalues, either a
    quadratic-surd pair (s, d) with roots (s +- sqrt(d))/2 or an explicit
    integer pair."""

    mult_minus: int
    mult_plus: int
    residual: tuple | None  # ("surd", s, d) | ("pair", r1, r2) | None


def _reverse_identity(k: int) -> np.ndarray:
    return np.eye(k, dtype=np.int8)[::-1].copy()


def _jmi(k: int) -> np.ndarray:
    """J - I: the all-positive clique block."""
    a = np.ones((k, k), dtype=np.int8)
    np.fill_diagonal(a, 0)
    return a


def _block(rows) -> SignedGraph:
    return SignedGraph(np.block(rows).astype(np.int8))


def _build_s_ml(m: int, l: int) -> SignedGraph:
    # Diagonal blocks J-I_m and I_l-J with all-ones off blocks: the unique
    # representative in this block layout whose spectrum matches the
    # closed form (the clique-vs-coclique roles fix the signs).
    j_ml = np.ones((m, l), dtype=np.int8)
    return _block([[_jmi(m), j_ml], [j_ml.T, -_jmi(l)]])


def _build_a1(m: int, l: int) -> SignedGraph:
    j = np.ones((m, 2 * l), dtype=np.int8)
    return _block([[_jmi(m), j], [j.T, -_reverse_identity(2 * l)]])


def _build_a2(m: int, l: int) -> SignedGraph:
    j = np.ones((2 * m, 2 * l), dtype=np.int8)
    return _block([[_reverse_identity(2 * m), j],
                   [j.T, -_reverse_identity(2 * l)]])


def _build_a3(m: int, l: int) -> SignedGraph:
    ones_m = np.ones((m, 1), dtype=np.int8)
    ones_l = np.ones((l, 1), dtype=np.int8)
    zeros_ml = np.zeros((m, l), dtype=np.int8)
    return _block([
        [_jmi(m), ones_m, ones_m, zeros_ml],
        [ones_m.T, np.zeros((1, 1), np.int8), np.ones((1, 1), np.int8), -ones_l.T],
        [ones_m.T, np.ones((1, 1), np.int8), np.zeros((1, 1), np.int8), ones_l.T],
        [zeros_ml.T, -ones_l, ones_l, -_jmi(l)],
    ])


def _build_a4(m: int, l: int) -> SignedGraph:
    j_m2 = np.ones((m, 2), dtype=np.int8)
    j_ml = np.ones((m, l), dtype=np.int8)
    j_2l = np.ones((2, l), dtype=np.int8)
    z_m2 = np.zeros((m, 2), dtype=np.int8)
    z_22 = np.zeros((2, 2), dtype=np.int8)
    z_2l = np.zeros((2, l), dtype=np.int8)
    r2 = _reverse_identity(2)
    return _block([
        [_jmi(m), j_m2, z_m2, j_ml],
        [j_m2.T, r2, z_22, z_2l],
        [z_m2.T, z_22, -r2, -j_2l],
        [j_ml.T, z_2l.T, -j_2l.T, -_jmi(l)],
    ])


def _bipartite_from_n(nmat: np.ndarray) -> SignedGraph:
    r, c = nmat.shape
    top = np.concatenate([np.zeros((r, r), np.int8), nmat.astype(np.int8)], axis=1)
    bot = np.concatenate([nmat.T.astype(np.int8), np.zeros((c, c), np.int8)], axis=1)
    return SignedGraph(np.concatenate([top, bot], axis=0))


def bip_n_matrix(tag: str, m: int | None = None) -> np.ndarray:
    """The biadjacency block N of the three bipartite families."""
    if tag == "bip-a":
        a = _jmi(3)
        top = np.concatenate([a, np.ones((3, 3), np.int8)], axis=1)
        bot = np.concatenate([np.zeros((3, 3), np.int8), a], axis=1)
        return np.concatenate([top, bot], axis=0)
    if tag == "bip-b":
        n = np.ones((5, 5), dtype=np.int8)
        n[1:, 1:] = np.eye(4, dtype=np.int8)
        return n
    if tag == "bip-c":
        return _jmi(m)
    raise ValueError(f"not a bipartite family: {tag}")


_SPORADIC_1_EDGES = [
    (0, 1, -1), (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1),
    (2, 4, 1), (2, 5, 1), (3, 4, 1), (3, 5, 1), (4, 5, 1), (4, 6, 1),
    (5, 6, 1),
]

_SPORADIC_2_EDGES = [
    (0, 1, -1), (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1), (3, 4, 1),
    (3, 5, 1), (3, 6, 1), (3, 7, 1), (4, 6, 1), (5, 7, 1),
]


def build(spec: FamilySpec) -> SignedGraph:
    tag, m, l = spec.tag, spec.m, spec.l
    if tag == "s-ml":
        return _build_s_ml(m, l)
    if tag == "a1":
        return _build_a1(m, l)
    if tag == "a2":
        return _build_a2(m, l)
    if tag == "a3":
        return _build_a3(m, l)
    if tag == "a4":
        return _build_a4(m, l)
    if tag in ("bip-a", "bip-b", "bip-c"):
        return _bipartite_from_n(bip_n_matrix(tag, m))
    if tag == "sporadic-1":
        return SignedGraph.from_edges(7, _SPORADIC_1_EDGES)
    if tag == "sporadic-2":
        return SignedGraph.from_edges(8, _SPORADIC_2_EDGES)
    raise ValueError(f"unknown family tag {tag!r}")


def closed_form_spectrum(spec: FamilySpec) -> ClosedFormSpectrum:
    tag, m, l = spec.tag, spec.m, spec.l
    if tag == "s-ml":
        return ClosedFormSpectrum(
            m - 1, l - 1,
            ("surd", m - l, m * m + l * l + 6 * m * l - 4 * m - 4 * l + 4))
    if tag == "a1":
        return ClosedFormSpectrum(l + m - 2, l, ("surd", m - 2, m * (m + 8 * l)))
    if tag == "a2":
        return ClosedFormSpectrum(m + l - 1, m + l - 1,
                                  ("surd", 0, 4 * (1 + 4 * m * l)))
    if tag == "a3":
        return ClosedFormSpectrum(m, l, ("pair", -l - 1, m + 1))
    if tag == "a4":
        return ClosedFormSpectrum(
            m + 1, l + 1,
            ("surd", m - l, m * m + l * l + 6 * m * l + 4 * m + 4 * l + 4))
    if tag == "bip-a":
        return ClosedFormSpectrum(5, 5, ("pair", -4, 4))
    if tag == "bip-b":
        return ClosedFormSpectrum(4, 4, ("pair", -3, 3))
    if tag == "bip-c":
        return ClosedFormSpectrum(m - 1, m - 1, ("pair", -(m - 1), m - 1))
    if tag == "sporadic-1":
        return ClosedFormSpectrum(3, 2, ("surd", 1, 41))
    if tag == "sporadic-2":
        return ClosedFormSpectrum(3, 3, ("surd", 0, 32))
    raise ValueError(f"unknown family tag {tag!r}")


def predicted_char_poly(cfs: ClosedFormSpectrum) -> list[int]:
    """Expand the closed form into a monic integer polynomial: the
    comparison against the exact characteristic polynomial is then a
    coefficient identity, immune to residual roots colliding with +-1."""
    p = poly.poly_mul(poly.poly_pow([-1, 1], cfs.mult_plus),
                      poly.poly_pow([1, 1], cfs.mult_minus))
    if cfs.residual is None:
        return p
    if cfs.residual[0] == "surd":
        _, s, d = cfs.residual
        if (s * s - d) % 4:
            raise ValueError(f"surd ({s}, {d}) does not expand over the integers")
        q = [(s * s - d) // 4, -s, 1]
    else:
        _, r1, r2 = cfs.residual
        q = poly.poly_mul([-r1, 1], [-r2, 1])
    return poly.poly_mul(p, q)


def family_order(spec: FamilySpec) -> int:
    tag, m, l = spec.tag, spec.m, spec.l
    return {"s-ml": lambda: m + l, "a1": lambda: m + 2 * l,
            "a2": lambda: 2 * m + 2 * l, "a3": lambda: m + l + 2,
            "a4": lambda: m + l + 4, "bip-a": lambda: 12,
            "bip-b": lambda: 10, "bip-c": lambda: 2 * m,
            "sporadic-1": lambda: 7, "sporadic-2": lambda: 8}[tag]()


# ---------------------------------------------------------------------------
# The clique-plus-isolated-vertices class and its forbidden subgraphs
# ---------------------------------------------------------------------------

def _is_clique_plus_isolated(h: UnsignedGraph) -> bool:
    deg = h.adj.sum(axis=0)
    support = np.nonzero(deg > 0)[0]
    k = len(support)
    return int(h.adj[np.ix_(support, support)].sum()) == k * (k - 1)


def in_F(h: UnsignedGraph) -> bool:
    """True iff h is a clique extended with isolated vertices, or the
    complement of one (a complete split graph)."""
    return _is_clique_plus_isolated(h) or _is_clique_plus_isolated(complement(h))


# On 4 vertices, (edge count, sorted degrees) pins each forbidden graph:
# any 2-edge graph (2K2 or path-plus-isolated), the 4-path, the paw, and
# the 4-cycle.
_FORBIDDEN_3 = (1, 1, 2, 2)
_FORBIDDEN_4 = {(2, 2, 2, 2), (1, 2, 2, 3)}


def forbidden_subgraph_free(h: UnsignedGraph) -> bool:
    """True iff no 4 vertices induce one of the five forbidden graphs."""
    a = h.adj
    for quad in combinations(range(h.n), 4):
        sub = a[np.ix_(quad, quad)]
        e2 = int(sub.sum())
        if e2 == 4:
            return False
        if e2 == 6 and tuple(sorted(sub.sum(axis=0))) == _FORBIDDEN_3:
            return False
        if e2 == 8 and tuple(sorted(sub.sum(axis=0))) in _FORBIDDEN_4:
            return False
    return True


def equitable_quotient(g: SignedGraph, partition) -> list[list[int]] | None:
    """Quotient matrix of signed row sums when the partition is equitable,
    else None."""
    blocks = [sorted(set(int(v) for v in b)) for b in partition]
    flat = [v for b in blocks for v in b]
    if sorted(flat) != list(range(g.n)) or len(flat) != g.n:
        raise ValueError("partition must cover all vertices exactly once")
    k = len(blocks)
    q = [[0] * k for _ in range(k)]
    for i, bi in enumerate(blocks):
        for j, bj in enumerate(blocks):
            sums = g.sign[np.ix_(bi, bj)].sum(axis=1)
            if len(set(int(s) for s in sums)) > 1:
                return None
            q[i][j] = int(sums[0]) if len(sums) else 0
    return q
