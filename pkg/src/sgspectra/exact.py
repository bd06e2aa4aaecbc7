"""Exact spectral computations on signed graphs.

Membership in the class of interest (all but at most two adjacency
eigenvalues equal to +1 or -1) is decided with integer arithmetic only:
characteristic polynomials come from the Faddeev-LeVerrier recurrence and
root counts from Sturm chains, so a verdict is an identity, not a
tolerance.  Batched int64 variants of the same computations back the
enumeration engine; they are bound-checked so no intermediate value can
overflow for the orders they accept.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from . import poly
from .core import SignedGraph, is_complete

# Faddeev-LeVerrier intermediates for a {-1,0,1} matrix of order n stay
# below C(n,k)*k^(k/2)*n^2 in absolute value; for n <= 12 that is < 2^44,
# far inside int64 even after the batched matrix products.
INT64_SAFE_ORDER = 12


def char_poly_batch(mats: np.ndarray) -> np.ndarray:
    """Exact characteristic polynomials of a stack of integer matrices.

    mats: (B, n, n) integer array with entries in {-1, 0, 1}, n <= 12.
    Returns (B, n+1) int64 coefficients of det(xI - A), index = degree.
    """
    a = np.ascontiguousarray(mats, dtype=np.int64)
    b, n, _ = a.shape
    if n > INT64_SAFE_ORDER:
        raise ValueError(f"batched path is bound-checked for n <= {INT64_SAFE_ORDER}")
    coeffs = np.zeros((b, n + 1), dtype=np.int64)
    coeffs[:, n] = 1
    m = np.zeros_like(a)
    eye = np.eye(n, dtype=np.int64)
    for k in range(1, n + 1):
        m = a @ m + coeffs[:, n - k + 1, None, None] * eye
        tr = np.trace(a @ m, axis1=1, axis2=2)
        if np.any(tr % k):
            raise ArithmeticError("Faddeev-LeVerrier trace not divisible")
        coeffs[:, n - k] = -(tr // k)
    return coeffs


def _char_poly_bigint(rows: list[list[int]]) -> list[int]:
    """Faddeev-LeVerrier over Python ints; A @ M uses only additions since
    the entries are -1/0/1."""
    n = len(rows)
    pos = [[j for j, v in enumerate(r) if v == 1] for r in rows]
    neg = [[j for j, v in enumerate(r) if v == -1] for r in rows]

    def lmul(m):
        out = [[0] * n for _ in range(n)]
        for i in range(n):
            oi = out[i]
            for t in pos[i]:
                mt = m[t]
                for j in range(n):
                    oi[j] += mt[j]
            for t in neg[i]:
                mt = m[t]
                for j in range(n):
                    oi[j] -= mt[j]
        return out

    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        m = lmul(m)
        c = coeffs[n - k + 1]
        for i in range(n):
            m[i][i] += c
        am = lmul(m)
        tr = sum(am[i][i] for i in range(n))
        q, r = divmod(-tr, k)
        if r:
            raise ArithmeticError("Faddeev-LeVerrier trace not divisible")
        coeffs[n - k] = q
    return coeffs


def char_poly(g: SignedGraph) -> list[int]:
    """Monic integer characteristic polynomial det(xI - A), exactly."""
    if g.n == 0:
        return [1]
    if g.n <= INT64_SAFE_ORDER:
        return [int(c) for c in char_poly_batch(g.sign[None, :, :])[0]]
    return _char_poly_bigint(g.sign.astype(int).tolist())


def mult_at_pm1(p) -> tuple[int, int, list[int]]:
    """Maximal a, b with (x-1)^a (x+1)^b dividing p, plus the cofactor."""
    q = poly.normalize(p)
    a = 0
    while q:
        q2, rem = poly.synthetic_div(q, 1)
        if rem != 0:
            break
        q, a = q2, a + 1
    b = 0
    while q:
        q2, rem = poly.synthetic_div(q, -1)
        if rem != 0:
            break
        q, b = q2, b + 1
    return a, b, q


def count_roots_above(p, threshold) -> int:
    """Roots of p strictly above a rational threshold, with multiplicity
    (Sturm chains; p must have all-real roots)."""
    return poly.count_roots_above(p, Fraction(threshold))


def count_roots_below(p, threshold) -> int:
    return poly.count_roots_below(p, Fraction(threshold))


@dataclass(frozen=True)
class MembershipReport:
    """Exact factorization of a characteristic polynomial at +1/-1 and the
    resulting class verdict (member iff the residual has degree <= 2)."""

    n: int
    mult_plus: int
    mult_minus: int
    residual: tuple[int, ...]
    member: bool

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "mult_plus": self.mult_plus,
            "mult_minus": self.mult_minus,
            "residual_coeffs": [str(c) for c in self.residual],
            "member": self.member,
        }


def membership(g: SignedGraph) -> MembershipReport:
    p = char_poly(g)
    a, b, residual = mult_at_pm1(p)
    return MembershipReport(
        n=g.n,
        mult_plus=a,
        mult_minus=b,
        residual=tuple(residual),
        member=(g.n - a - b) <= 2,
    )


def seidel_interval_condition(g: SignedGraph) -> bool:
    """True iff at most two eigenvalues lie outside [-1, 1].

    Only defined for complete signed graphs (Seidel matrices).
    """
    if not is_complete(g):
        raise ValueError("seidel_interval_condition requires a complete signed graph")
    p = char_poly(g)
    return count_roots_above(p, 1) + count_roots_below(p, -1) <= 2


def spectrum_symmetric(p) -> bool:
    """Exact test for p(x) = (-1)^n p(-x), i.e. a spectrum closed under
    multiplication by -1."""
    q = poly.normalize(p)
    return q == poly.reflected(q)


# ---------------------------------------------------------------------------
# Batched int64 kernels (enumeration / brute-force back end)
# ---------------------------------------------------------------------------

def _pascal_shift_matrix(m: int) -> np.ndarray:
    t = np.zeros((m, m), dtype=np.int64)
    for i in range(m):
        for j in range(i + 1):
            t[i, j] = comb(i, j)
    return t


def _sign_change_counts(rows: np.ndarray) -> np.ndarray:
    s = np.sign(rows)
    changes = np.zeros(rows.shape[0], dtype=np.int64)
    prev = np.zeros(rows.shape[0], dtype=np.int64)
    for col in range(rows.shape[1]):
        cur = s[:, col]
        nz = cur != 0
        changes += nz & (prev != 0) & (cur != prev)
        prev = np.where(nz, cur, prev)
    return changes


def counts_outside_batch(coeffs: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Per row: (#roots > 1, #roots < -1) with multiplicity.

    Exact for real-rooted rows: Descartes' rule attains equality there, so
    the sign-change count of p(x+1) is the number of roots above 1, and of
    p(-x-1) the number below -1.
    """
    m = coeffs.shape[1]
    t = _pascal_shift_matrix(m)
    above = _sign_change_counts(coeffs @ t)
    flip = coeffs * ((-1) ** np.arange(m, dtype=np.int64))
    below = _sign_change_counts(flip @ t)
    return above, below


def _synthetic_div_batch(cur: np.ndarray, r: int) -> tuple[np.ndarray, np.ndarray]:
    b, m = cur.shape
    q = np.zeros_like(cur)
    acc = np.zeros(b, dtype=np.int64)
    for i in range(m - 1, 0, -1):
        acc = acc * r + cur[:, i]
        q[:, i - 1] = acc
    rem = acc * r + cur[:, 0]
    return q, rem


def pm1_multiplicities_batch(coeffs: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Per row: multiplicities of the roots +1 and -1."""
    cur = coeffs.astype(np.int64, copy=True)
    b, m = cur.shape
    mults = []
    for root in (1, -1):
        mult = np.zeros(b, dtype=np.int64)
        for _ in range(m - 1):
            q, rem = _synthetic_div_batch(cur, root)
            hit = (rem == 0) & (np.any(cur != 0, axis=1))
            if not np.any(hit):
                break
            mult += hit
            cur = np.where(hit[:, None], q, cur)
        mults.append(mult)
    return mults[0], mults[1]


def member_mask_batch(mats: np.ndarray) -> np.ndarray:
    """Boolean mask of matrices whose spectrum has all but at most two
    eigenvalues equal to +1 or -1."""
    coeffs = char_poly_batch(mats)
    a, b = pm1_multiplicities_batch(coeffs)
    n = mats.shape[1]
    return (n - a - b) <= 2
