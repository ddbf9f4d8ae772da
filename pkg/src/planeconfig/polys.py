"""Dense univariate polynomials with exact coefficients.

Coefficient lists are ascending (coeffs[i] multiplies t**i) and integer
except where noted.  Includes Sturm-chain root counting and isolation of
all real roots in an interval, used to certify wall crossings of paths.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def normalize(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def add(p, q):
    n = max(len(p), len(q))
    return normalize([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def sub(p, q):
    n = max(len(p), len(q))
    return normalize([(p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n)])


def mul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return normalize(out)


def scale(p, s):
    return normalize([c * s for c in p])


def derivative(p):
    return [i * c for i, c in enumerate(p)][1:]


def eval_fraction(p, t: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * t + c
    return acc


def sign_at(p, t: Fraction) -> int:
    """Sign of an integer polynomial at a rational point, in integers only.

    Evaluates the homogenization p(u/v) * v^deg with Horner's rule, which
    has the same sign as p(t) because v > 0.
    """
    if not p:
        return 0
    u, v = t.numerator, t.denominator
    total = 0
    vp = 1
    for c in reversed(p):
        total = total * u + c * vp
        vp *= v
    return (total > 0) - (total < 0)


def _primitive(p_fracs):
    """Scale a rational polynomial by a positive rational into primitive ints."""
    den = 1
    for c in p_fracs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in p_fracs]
    g = 0
    for c in ints:
        g = gcd(g, c)
    if g == 0:
        return []
    return [c // g for c in ints]


def _frac_rem(f, g):
    """Remainder of f by g over the rationals (both ascending coeff lists)."""
    f = [Fraction(c) for c in f]
    g = [Fraction(c) for c in g]
    while len(f) >= len(g) and any(f):
        if f[-1] == 0:
            f.pop()
            continue
        factor = f[-1] / g[-1]
        shift = len(f) - len(g)
        for i, c in enumerate(g):
            f[i + shift] -= factor * c
        f.pop()
    while f and f[-1] == 0:
        f.pop()
    return f


def sturm_chain(p):
    """Sturm chain of an integer polynomial, each member primitive integer."""
    p = normalize(p)
    if not p:
        raise ValueError("zero polynomial has no Sturm chain")
    chain = [p]
    d = derivative(p)
    if d:
        chain.append(_primitive([Fraction(c) for c in d]))
    while len(chain[-1]) > 1:
        rem = _frac_rem(chain[-2], chain[-1])
        if not rem:
            break
        chain.append(_primitive([-c for c in rem]))
    return chain


def variations(chain, t: Fraction) -> int:
    signs = []
    for p in chain:
        s = sign_at(p, t)
        if s:
            signs.append(s)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(chain, a: Fraction, b: Fraction) -> int:
    """Distinct real roots in (a, b]; endpoints must not be roots of chain[0]."""
    return variations(chain, a) - variations(chain, b)


def isolate_roots(p, lo=Fraction(0), hi=Fraction(1), width=Fraction(1, 2**20)):
    """Disjoint intervals (a, b), each containing exactly one distinct real
    root of p in (lo, hi), refined to width <= the given width.

    p must be a nonzero integer polynomial with p(lo) != 0 and p(hi) != 0.
    """
    p = normalize(p)
    if not p:
        raise ValueError("cannot isolate roots of the zero polynomial")
    chain = sturm_chain(p)
    if sign_at(p, lo) == 0 or sign_at(p, hi) == 0:
        raise ValueError("isolation endpoints must not be roots")
    out = []

    def split_point(a, b):
        # midpoint, nudged off any root of p
        m = (a + b) / 2
        k = 4
        while sign_at(p, m) == 0:
            m = a + (b - a) * Fraction(2 ** (k - 1) + 1, 2**k)
            k += 1
        return m

    def go(a, b, va, vb):
        roots = va - vb
        if roots == 0:
            return
        if roots == 1 and b - a <= width:
            out.append((a, b))
            return
        m = split_point(a, b)
        vm = variations(chain, m)
        go(a, m, va, vm)
        go(m, b, vm, vb)

    go(lo, hi, variations(chain, lo), variations(chain, hi))
    return sorted(out)


def interpolate_integer(values):
    """The unique integer polynomial of degree < len(values) taking the given
    values at t = 0, 1, ..., len(values)-1 (Newton divided differences)."""
    n = len(values)
    table = [Fraction(v) for v in values]
    coeffs_newton = [table[0]]
    for level in range(1, n):
        for i in range(n - level):
            table[i] = (table[i + 1] - table[i]) / level
        coeffs_newton.append(table[0])
    # expand Newton form: sum c_k * t(t-1)...(t-k+1)
    poly = []
    basis = [Fraction(1)]
    for k, ck in enumerate(coeffs_newton):
        poly = add(poly, [ck * b for b in basis])
        basis = mul(basis, [Fraction(-k), Fraction(1)])
    assert all(c.denominator == 1 for c in poly), "interpolation must be integral"
    return [int(c) for c in poly]
