"""Exact characteristic polynomials and real root isolation.

This is an independent oracle for the Jacobi eigensolver on small matrices:
the polynomial is computed over the integers (Faddeev-LeVerrier), split into
square-free factors (Yun), and the real roots of each factor are isolated by
Sturm sequences and refined by exact rational bisection.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

# Polynomials are coefficient lists, highest degree first.
Poly = list


def charpoly(A: Sequence[Sequence[int]]) -> list[int]:
    """Coefficients of ``det(xI - A)``, monic, highest degree first."""
    n = len(A)
    M = [[0] * n for _ in range(n)]
    coeffs = [1]
    c = 1
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        M = [[sum(A[i][t] * M[t][j] for t in range(n)) + (c if i == j else 0) for j in range(n)] for i in range(n)]
        AM = [[sum(A[i][t] * M[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        tr = sum(AM[i][i] for i in range(n))
        assert tr % k == 0
        c = -tr // k
        coeffs.append(c)
    return coeffs


def _trim(p: Poly) -> Poly:
    i = 0
    while i < len(p) - 1 and p[i] == 0:
        i += 1
    return p[i:]


def peval(p: Poly, x) -> Fraction:
    acc = Fraction(0)
    for a in p:
        acc = acc * x + a
    return acc


def derivative(p: Poly) -> Poly:
    d = len(p) - 1
    return _trim([Fraction(a) * (d - i) for i, a in enumerate(p[:-1])]) or [Fraction(0)]


def poly_divmod(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    p = [Fraction(a) for a in _trim(p)]
    q = [Fraction(a) for a in _trim(q)]
    if len(p) < len(q):
        return [Fraction(0)], p
    quot = [Fraction(0)] * (len(p) - len(q) + 1)
    r = p[:]
    for i in range(len(quot)):
        f = r[i] / q[0]
        quot[i] = f
        for j, b in enumerate(q):
            r[i + j] -= f * b
    rem = _trim(r[len(quot):]) if len(q) > 1 else [Fraction(0)]
    return quot, rem


def _is_zero(p: Poly) -> bool:
    return all(a == 0 for a in p)


def poly_gcd(p: Poly, q: Poly) -> Poly:
    a, b = [Fraction(x) for x in _trim(p)], [Fraction(x) for x in _trim(q)]
    while not _is_zero(b):
        _, r = poly_divmod(a, b)
        a, b = b, r
    return [x / a[0] for x in a]


def squarefree_factors(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: ``p = prod f_i ** i`` with each ``f_i`` square-free."""
    p = [Fraction(a) for a in _trim(p)]
    if len(p) == 1:
        return []
    dp = derivative(p)
    a = poly_gcd(p, dp)
    b, _ = poly_divmod(p, a)
    c, _ = poly_divmod(dp, a)
    d = _sub(c, derivative(b))
    out = []
    i = 1
    while len(b) > 1:
        f = poly_gcd(b, d)
        b, _ = poly_divmod(b, f)
        c, _ = poly_divmod(d, f)
        d = _sub(c, derivative(b))
        if len(f) > 1:
            out.append((f, i))
        i += 1
    return out


def _sub(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    p = [Fraction(0)] * (n - len(p)) + list(p)
    q = [Fraction(0)] * (n - len(q)) + list(q)
    return _trim([a - b for a, b in zip(p, q)])


def sturm_sequence(p: Poly) -> list[Poly]:
    seq = [[Fraction(a) for a in p], derivative(p)]
    while not _is_zero(seq[-1]) and len(seq[-1]) > 1:
        _, r = poly_divmod(seq[-2], seq[-1])
        if _is_zero(r):
            break
        seq.append([-x for x in r])
    return seq


def _sign_changes(seq: list[Poly], x) -> int:
    signs = [s for s in (peval(p, x) for p in seq) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def isolate_real_roots(p: Poly, width: Fraction = Fraction(1, 10**13)) -> list[Fraction]:
    """Distinct real roots of a square-free polynomial, each to within ``width``."""
    p = [Fraction(a) for a in _trim(p)]
    if len(p) == 1:
        return []
    bound = 1 + max(abs(a / p[0]) for a in p[1:])
    seq = sturm_sequence(p)

    def count(a, b):  # roots in (a, b]
        return _sign_changes(seq, a) - _sign_changes(seq, b)

    roots = []
    stack = [(-bound, bound)]
    while stack:
        a, b = stack.pop()
        k = count(a, b)
        if k == 0:
            continue
        if k == 1:
            roots.append(_refine(p, a, b, width))
            continue
        mid = (a + b) / 2
        stack.extend([(mid, b), (a, mid)])
    return sorted(roots)


def _refine(p: Poly, a: Fraction, b: Fraction, width: Fraction) -> Fraction:
    """Bisection on (a, b] containing exactly one simple root."""
    fb = peval(p, b)
    if fb == 0:
        return b
    while b - a > width:
        mid = (a + b) / 2
        fm = peval(p, mid)
        if fm == 0:
            return mid
        if (fm > 0) == (fb > 0):
            b, fb = mid, fm
        else:
            a = mid
    return (a + b) / 2


def exact_eigenvalues(A: Sequence[Sequence[int]]) -> list[float]:
    """All eigenvalues (with multiplicity) of a symmetric integer matrix."""
    out = []
    for f, mult in squarefree_factors(charpoly(A)):
        for r in isolate_real_roots(f):
            out.extend([float(r)] * mult)
    return sorted(out)
