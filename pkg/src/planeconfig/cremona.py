"""Quadratic plane transformations based at a triple of configuration points.

The transform fixes a projective frame: the three base points go to the
coordinate triangle (in base order) and the lowest non-base label goes to
(1:1:1).  In that frame the standard quadratic involution
(x:y:z) -> (yz:xz:xy) is applied; each base point is blown up and replaced
by the image of the contracted opposite triangle side, which lands back on
the corresponding coordinate vertex.  Applying the same transform twice
reproduces the input up to a projective change of coordinates.
"""

from __future__ import annotations

from itertools import combinations

from .configuration import Configuration, check_typicality
from .errors import ImageDegenerate, InvalidSize, NotSimple, NotTypical
from .geometry import HomPoint, _det3


def _adjugate(m):
    def cof(i, j):
        r = [x for x in range(3) if x != i]
        c = [x for x in range(3) if x != j]
        minor = m[r[0]][c[0]] * m[r[1]][c[1]] - m[r[0]][c[1]] * m[r[1]][c[0]]
        return -minor if (i + j) % 2 else minor

    # transpose of the cofactor matrix
    return tuple(tuple(cof(j, i) for j in range(3)) for i in range(3))


def _apply(m, v):
    return tuple(m[r][0] * v[0] + m[r][1] * v[1] + m[r][2] * v[2] for r in range(3))


def cremona(c: Configuration, base) -> Configuration:
    """Image of a typical 7-point configuration under the quadratic map
    based at three of its points (labels keep their positions)."""
    if len(c) != 7:
        raise InvalidSize("cremona transforms 7-point configurations")
    base = tuple(sorted(base))
    if len(set(base)) != 3 or not all(0 <= b < 7 for b in base):
        raise ValueError("base must be three distinct labels in 0..6")
    if not check_typicality(c).typical:
        raise NotTypical("cremona requires a typical configuration")

    anchor = min(m for m in range(7) if m not in base)
    cols = [c[b].coords for b in base]
    target = c[anchor].coords
    # Cramer: solve cols * lam = target; lam_m != 0 because the anchor is
    # off the three base lines (simplicity).
    dets = []
    for m in range(3):
        mod = list(cols)
        mod[m] = target
        dets.append(_det3(*[tuple(mod[k][r] for k in range(3)) for r in range(3)]))
    if any(d == 0 for d in dets):
        raise NotSimple("anchor point lies on a base line")
    frame_cols = [tuple(cols[m][r] * dets[m] for r in range(3)) for m in range(3)]
    frame = tuple(tuple(frame_cols[m][r] for m in range(3)) for r in range(3))
    to_std = _adjugate(frame)

    images = {}
    for m, b in enumerate(base):
        images[b] = (int(m == 0), int(m == 1), int(m == 2))
    for m in range(7):
        if m in base:
            continue
        w = _apply(to_std, c[m].coords)
        if sum(1 for t in w if t == 0) >= 2:
            raise NotSimple("point %d collides with the coordinate triangle" % m)
        images[m] = (w[1] * w[2], w[0] * w[2], w[0] * w[1])

    out = Configuration([HomPoint(*images[m]) for m in range(7)])
    rep = check_typicality(out)
    if not rep.typical:
        raise ImageDegenerate(
            "image of base %r is not typical: collinear %r coconic %r"
            % (base, rep.collinear_triples, rep.coconic_sextuples)
        )
    return out


def all_bases():
    return list(combinations(range(7), 3))


# One base per non-heptagonal class: transforming the stored heptagonal seed
# at the listed base lands in the named class.  Derived once from the full
# 35-base orbit and frozen; pairwise distinct by construction.
HEPT7_CLASS_BASES = {
    "(3,4,0,0)₁": (0, 5, 6),
    "(3,4,0,0)₂": (0, 1, 2),
    "(2,2,3,0)₁": (1, 2, 6),
    "(2,2,3,0)₂": (0, 4, 6),
    "(2,2,3,0)₃": (2, 3, 4),
    "(1,2,2,2)": (1, 3, 6),
    "(1,0,6,0)": (2, 3, 6),
    "(1,6,0,0)": (0, 2, 3),
    "(1,4,2,0)": (0, 2, 5),
    "(1,2,4,0)": (0, 2, 4),
    "(0,4,3,0)": (2, 4, 5),
    "(0,6,1,0)": (1, 2, 5),
    "(0,3,3,1)": (1, 3, 5),
}


def cremona_orbit(c: Configuration, table=None) -> dict:
    """Deformation class of the image at every one of the 35 bases."""
    from .classifier import q_class

    return {base: q_class(cremona(c, base), table=table) for base in all_bases()}
