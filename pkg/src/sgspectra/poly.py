"""Exact integer polynomial arithmetic and real-root counting.

A polynomial is a list of Python ints indexed by degree, with no trailing
zero coefficient; the zero polynomial is the empty list.  Everything here
is exact: Python ints never overflow, and root counts for thresholds are
decided by Sturm chains over the integers (pseudo-remainders with
primitive-part reduction, so coefficients stay small).
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, gcd


def normalize(coeffs) -> list[int]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return c


def degree(p) -> int:
    """Degree of p, with the zero polynomial mapped to -1."""
    return len(p) - 1


def poly_add(a, b) -> list[int]:
    n = max(len(a), len(b))
    return normalize([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                      for i in range(n)])


def poly_neg(a) -> list[int]:
    return [-c for c in a]


def poly_mul(a, b) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return normalize(out)


def poly_pow(a, k: int) -> list[int]:
    out = [1]
    for _ in range(k):
        out = poly_mul(out, a)
    return out


def poly_eval(p, x: int) -> int:
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_eval_sign_at(p, t: Fraction) -> int:
    """Sign of p(t) for rational t, via Horner on p(n/d) * d^deg."""
    num, den = t.numerator, t.denominator
    acc = 0
    for i, c in enumerate(reversed(p)):
        acc = acc * num + c * den ** i
    return (acc > 0) - (acc < 0)


def derivative(p) -> list[int]:
    return normalize([i * p[i] for i in range(1, len(p))])


def content(p) -> int:
    g = 0
    for c in p:
        g = gcd(g, abs(c))
    return g


def primitive(p) -> list[int]:
    """Divide out the (positive) content; sign of the leading coeff is kept."""
    g = content(p)
    if g <= 1:
        return list(p)
    return [c // g for c in p]


def pseudo_rem(f, g) -> list[int]:
    """Remainder of f by g after scaling f by positive powers of |lc(g)|.

    Scaling by a positive constant only, so the sign sequence semantics
    needed by Sturm chains are preserved exactly.
    """
    r = normalize(f)
    dg = degree(g)
    if dg < 0:
        raise ZeroDivisionError("pseudo_rem by zero polynomial")
    lg = g[-1]
    alg = abs(lg)
    slg = 1 if lg > 0 else -1
    while degree(r) >= dg:
        dr = degree(r)
        lead = r[-1]
        r = [alg * c for c in r]
        shift = dr - dg
        for i, gc in enumerate(g):
            r[shift + i] -= slg * lead * gc
        r = normalize(r)
    return r


def exact_div(a, b) -> list[int]:
    """Quotient a // b when b divides a exactly over the integers."""
    a = normalize(a)
    b = normalize(b)
    if not b:
        raise ZeroDivisionError("exact_div by zero polynomial")
    q = [0] * (len(a) - len(b) + 1) if len(a) >= len(b) else []
    r = list(a)
    while degree(r) >= degree(b):
        shift = degree(r) - degree(b)
        c, rem = divmod(r[-1], b[-1])
        if rem:
            raise ArithmeticError("inexact polynomial division")
        q[shift] = c
        for i, bc in enumerate(b):
            r[shift + i] -= c * bc
        r = normalize(r)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return normalize(q)


def poly_gcd(a, b) -> list[int]:
    """Primitive gcd with positive leading coefficient."""
    a = primitive(normalize(a))
    b = primitive(normalize(b))
    if degree(a) < degree(b):
        a, b = b, a
    while b:
        r = primitive(pseudo_rem(a, b))
        a, b = b, r
    if a and a[-1] < 0:
        a = poly_neg(a)
    return a


def squarefree_part(p) -> list[int]:
    if degree(p) <= 1:
        return primitive(p)
    return exact_div(primitive(p), poly_gcd(p, derivative(p)))


def synthetic_div(p, r: int) -> tuple[list[int], int]:
    """Divide p by (x - r): returns (quotient, remainder)."""
    q = [0] * (len(p) - 1)
    acc = 0
    for i in range(len(p) - 1, -1, -1):
        acc = acc * r + p[i]
        if i > 0:
            q[i - 1] = acc
    if q:
        acc = q[0] * r + p[0]
    else:
        acc = p[0] if p else 0
    return normalize(q), acc


def shifted(p, s: int) -> list[int]:
    """p(x + s) by the binomial transform."""
    n = degree(p)
    if n < 0:
        return []
    out = [0] * (n + 1)
    for i, c in enumerate(p):
        if not c:
            continue
        si = 1
        for j in range(i + 1):
            out[j] += c * comb(i, j) * si
            si *= s
    return normalize(out)


def reflected(p) -> list[int]:
    """(-1)^deg * p(-x): real-rooted polynomials keep integer coefficients
    and their roots are negated."""
    n = degree(p)
    return normalize([c if (n - i) % 2 == 0 else -c for i, c in enumerate(p)])


def sign_changes(seq) -> int:
    v = 0
    prev = 0
    for s in seq:
        if s == 0:
            continue
        s = 1 if s > 0 else -1
        if prev and s != prev:
            v += 1
        prev = s
    return v


def descartes_positive_roots(p) -> int:
    """Number of positive roots counted with multiplicity, exact whenever
    all roots of p are real (Descartes' bound is attained in that case)."""
    return sign_changes(p)


def sturm_chain(p) -> list[list[int]]:
    chain = [primitive(normalize(p))]
    d = derivative(chain[0])
    if d:
        chain.append(primitive(d))
        while degree(chain[-1]) > 0:
            r = pseudo_rem(chain[-2], chain[-1])
            if not r:
                break
            chain.append(primitive(poly_neg(r)))
    return chain


def _variations_at(chain, t: Fraction) -> int:
    num, den = t.numerator, t.denominator
    signs = []
    for s in chain:
        acc = 0
        d = degree(s)
        for i in range(d, -1, -1):
            acc = acc * num + s[i] * den ** (d - i)
        signs.append(acc)
    return sign_changes(signs)


def _variations_at_inf(chain, positive: bool) -> int:
    signs = []
    for s in chain:
        lc = s[-1]
        if positive:
            signs.append(lc)
        else:
            signs.append(lc if degree(s) % 2 == 0 else -lc)
    return sign_changes(signs)


def _sturm_distinct_above(q, t: Fraction) -> int:
    """Distinct roots of squarefree q in (t, +inf)."""
    if degree(q) <= 0:
        return 0
    chain = sturm_chain(q)
    return _variations_at(chain, t) - _variations_at_inf(chain, True)


def count_roots_above(p, t) -> int:
    """Roots of p strictly greater than the rational t, with multiplicity.

    Contract: all roots of p are real (true for characteristic polynomials
    of symmetric matrices); behaviour for other inputs is unspecified.
    """
    t = Fraction(t)
    p = primitive(normalize(p))
    total = 0
    d = p
    while degree(d) > 0:
        nxt = poly_gcd(d, derivative(d))
        total += _sturm_distinct_above(exact_div(d, nxt), t)
        d = nxt
    return total


def count_roots_below(p, t) -> int:
    """Roots strictly smaller than t, with multiplicity (mirror of above)."""
    return count_roots_above(reflected(p), -Fraction(t))


def root_multiplicity_at(p, t) -> int:
    t = Fraction(t)
    if t.denominator == 1:
        r = int(t)
        m = 0
        q = normalize(p)
        while q:
            q2, rem = synthetic_div(q, r)
            if rem != 0:
                break
            m += 1
            q = q2
        return m
    n = degree(p)
    return n - count_roots_above(p, t) - count_roots_below(p, t)


def format_poly(p, var: str = "x") -> str:
    """Human-readable form, highest degree first: 'x^3 - 2x'."""
    if not p:
        return "0"
    parts = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            xpow = var if i == 1 else f"{var}^{i}"
            body = xpow if mag == 1 else f"{mag}{xpow}"
        parts.append((sign, body))
    head_sign, head = parts[0]
    text = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text
