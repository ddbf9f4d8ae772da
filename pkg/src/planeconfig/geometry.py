"""Exact projective primitives over the rationals.

Points, lines and conics carry canonical integer representatives:
denominators cleared, coordinate gcd 1, and a fixed sign rule (first
nonzero coordinate positive; for conics, matrix determinant negative).
Every predicate reduces to the sign of an integer determinant, so nothing
here ever rounds.  Floats are rejected outright.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from math import gcd

from .errors import (
    DegenerateInput,
    IdenticalLines,
    IdenticalPoints,
    PointNotOnLine,
    ZeroVector,
)


class Sign(enum.IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1


class Side(enum.Enum):
    INSIDE = "inside"
    ON = "on"
    OUTSIDE = "outside"


def sign_of(value) -> Sign:
    return Sign((value > 0) - (value < 0))


def _to_fraction(c) -> Fraction:
    if isinstance(c, float):
        raise TypeError("float coordinates are not exact; pass int, Fraction or str")
    return Fraction(c)


def _clear_denominators(values) -> list[int]:
    fracs = [_to_fraction(v) for v in values]
    mult = 1
    for f in fracs:
        mult = mult * f.denominator // gcd(mult, f.denominator)
    ints = [int(f * mult) for f in fracs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g == 0:
        raise ZeroVector("all coordinates vanish")
    return [v // g for v in ints]


def _canonical_triple(coords) -> tuple[int, int, int]:
    ints = _clear_denominators(coords)
    for v in ints:
        if v:
            if v < 0:
                ints = [-u for u in ints]
            break
    return tuple(ints)


class _ProjTriple:
    """Shared storage/equality for points and lines of the projective plane."""

    __slots__ = ("coords",)

    def __init__(self, x, y, z):
        self.coords = _canonical_triple((x, y, z))

    def __eq__(self, other):
        return type(other) is type(self) and other.coords == self.coords

    def __hash__(self):
        return hash((type(self).__name__, self.coords))

    def __repr__(self):
        return "%s%r" % (type(self).__name__, self.coords)

    def __iter__(self):
        return iter(self.coords)


class HomPoint(_ProjTriple):
    """A projective point (x : y : z), canonically normalized."""


class ProjLine(_ProjTriple):
    """A projective line by its coefficient triple, canonically normalized."""


def _cross(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _dot(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def _det3(a, b, c):
    return (
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
    )


def det_int(rows) -> int:
    """Exact determinant of a square integer matrix (Bareiss elimination)."""
    m = [list(r) for r in rows]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            row_k = m[k]
            lead = row_i[k]
            for j in range(k + 1, n):
                # Bareiss: the division by the previous pivot is exact.
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def orient3(p: HomPoint, q: HomPoint, r: HomPoint) -> Sign:
    """Sign of the 3x3 determinant of the canonical representatives."""
    return sign_of(_det3(p.coords, q.coords, r.coords))


def collinear(p: HomPoint, q: HomPoint, r: HomPoint) -> bool:
    return orient3(p, q, r) is Sign.ZERO


def join(p: HomPoint, q: HomPoint) -> ProjLine:
    """The line through two distinct points."""
    c = _cross(p.coords, q.coords)
    if c == (0, 0, 0):
        raise IdenticalPoints("join of a point with itself")
    return ProjLine(*c)


def meet(l: ProjLine, m: ProjLine) -> HomPoint:
    """The intersection point of two distinct lines."""
    c = _cross(l.coords, m.coords)
    if c == (0, 0, 0):
        raise IdenticalLines("meet of a line with itself")
    return HomPoint(*c)


def incident(p: HomPoint, l: ProjLine) -> bool:
    return _dot(p.coords, l.coords) == 0


# Monomial order used for all conic work: x^2, xy, y^2, xz, yz, z^2.
def _conic_row(v):
    x, y, z = v
    return (x * x, x * y, y * y, x * z, y * z, z * z)


def coconic6(points) -> Sign:
    """Sign of the 6x6 coconic determinant.

    Zero iff the six points lie on a common conic.  The sign itself is only
    well-defined relative to the canonical representatives and the given
    point order (odd permutations flip it).
    """
    pts = list(points)
    if len(pts) != 6:
        raise ValueError("coconic6 expects exactly six points")
    return sign_of(det_int([_conic_row(p.coords) for p in pts]))


class Conic:
    """A nondegenerate conic as a symmetric integer matrix with det < 0.

    With that sign rule an indefinite form has signature (2,1) and the set
    {q < 0} is the disc component of the complement, so Side.INSIDE means a
    strictly negative value.  Conics built by conic_through5 always pass
    through real points, hence are indefinite.
    """

    __slots__ = ("matrix",)

    def __init__(self, matrix):
        rows = [tuple(r) for r in matrix]
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise ValueError("conic matrix must be 3x3")
        if rows[0][1] != rows[1][0] or rows[0][2] != rows[2][0] or rows[1][2] != rows[2][1]:
            raise ValueError("conic matrix must be symmetric")
        flat = _clear_denominators([rows[i][j] for i in range(3) for j in range(3)])
        m = [flat[0:3], flat[3:6], flat[6:9]]
        d = _det3(*m)
        if d == 0:
            raise DegenerateInput("conic matrix is singular")
        if d > 0:
            m = [[-v for v in row] for row in m]
        self.matrix = tuple(tuple(row) for row in m)

    def __eq__(self, other):
        return isinstance(other, Conic) and other.matrix == self.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return "Conic(%r)" % (self.matrix,)

    def evaluate(self, p: HomPoint) -> int:
        v = p.coords
        m = self.matrix
        total = 0
        for i in range(3):
            row = m[i]
            total += v[i] * (row[0] * v[0] + row[1] * v[1] + row[2] * v[2])
        return total

    def coefficients(self) -> tuple[int, int, int, int, int, int]:
        """(a, b, c, d, e, f) with q = a x^2 + b xy + c y^2 + d xz + e yz + f z^2."""
        m = self.matrix
        return (m[0][0], 2 * m[0][1], m[1][1], 2 * m[0][2], 2 * m[1][2], m[2][2])


def conic_through5(points) -> Conic:
    """The unique nondegenerate conic through five points.

    Raises DegenerateInput when three of the five are collinear (the locus
    degenerates to a line pair) or when the points fail to span.
    """
    pts = list(points)
    if len(pts) != 5:
        raise ValueError("conic_through5 expects exactly five points")
    rows = [_conic_row(p.coords) for p in pts]
    cof = []
    for j in range(6):
        minor = [[row[c] for c in range(6) if c != j] for row in rows]
        cof.append((-1 if j % 2 else 1) * det_int(minor))
    if not any(cof):
        raise DegenerateInput("five points do not span a unique conic")
    a, b, c, d, e, f = cof
    return Conic(((2 * a, b, d), (b, 2 * c, e), (d, e, 2 * f)))


def side_of_conic(conic: Conic, p: HomPoint) -> Side:
    s = sign_of(conic.evaluate(p))
    if s is Sign.NEGATIVE:
        return Side.INSIDE
    if s is Sign.ZERO:
        return Side.ON
    return Side.OUTSIDE


def _line_chart(line: ProjLine):
    """Coordinate pair (i, j) giving an injective chart of the line onto RP^1."""
    coords = line.coords
    for k in (2, 1, 0):
        if coords[k]:
            i, j = [t for t in range(3) if t != k]
            return i, j
    raise ZeroVector("line has no nonzero coefficient")  # unreachable


def _rp1_param(v, i, j):
    """Normalized RP^1 parameter (alpha, beta): beta > 0, or (1, 0)-style infinity."""
    a, b = v[i], v[j]
    if b < 0 or (b == 0 and a < 0):
        a, b = -a, -b
    return a, b


def cyclic_order_on_line(line: ProjLine, points) -> list[int]:
    """Cyclic order of pairwise distinct points on a line.

    Returns input indices in a cyclic sequence, canonicalized so the
    smallest index comes first and its smaller-indexed neighbor second.
    """
    pts = list(points)
    for p in pts:
        if not incident(p, line):
            raise PointNotOnLine("%r is not on %r" % (p, line))
    if len(set(pts)) != len(pts):
        raise IdenticalPoints("points on the line must be pairwise distinct")
    i, j = _line_chart(line)
    params = [_rp1_param(p.coords, i, j) for p in pts]

    finite = [(a, b, idx) for idx, (a, b) in enumerate(params) if b]
    infinite = [idx for idx, (a, b) in enumerate(params) if not b]
    # Affine order on the chart, then the chart's point at infinity.
    import functools

    def cmp(u, v):
        d = u[0] * v[1] - v[0] * u[1]
        return (d > 0) - (d < 0)

    finite.sort(key=functools.cmp_to_key(cmp))
    order = [idx for _, _, idx in finite] + infinite
    return _canonical_cycle(order)


def _canonical_cycle(order):
    """Rotate/reflect a cyclic index sequence into a deterministic form."""
    n = len(order)
    if n <= 2:
        return sorted(order)
    k = order.index(min(order))
    rotated = order[k:] + order[:k]
    if rotated[1] > rotated[-1]:
        rotated = [rotated[0]] + rotated[1:][::-1]
    return rotated
