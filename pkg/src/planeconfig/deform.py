"""Straight-line deformations and their wall crossings.

A path interpolates the canonical integer representatives pointwise:
P(t)_m = (1-t) * start_m + t * end_m.  Walls are parameter values where a
triple turns collinear (a cubic vanishing) or a sextuple turns coconic (a
degree-12 vanishing).  Every root in (0,1) is isolated by Sturm bisection,
so an empty event list is an exact certificate that start and end lie in
the same deformation class.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import combinations

from . import polys
from .configuration import Configuration, check_typicality
from .errors import ClassMismatch, InvalidSize, NotFound, NotTypical, RepDegenerate
from .geometry import HomPoint, det_int, _conic_row

ISOLATION_WIDTH = Fraction(1, 2**20)


@dataclass(frozen=True)
class WallEvent:
    kind: str  # "collinear" or "coconic"
    labels: tuple
    interval: tuple  # (Fraction, Fraction), contains exactly one root
    clustered: bool = False


class LinearPath:
    """Pointwise straight-line interpolation between two configurations."""

    def __init__(self, start: Configuration, end: Configuration):
        if len(start) != len(end):
            raise InvalidSize("path endpoints must have the same size")
        self.start = start
        self.end = end
        self.n = len(start)
        # one (constant, slope) pair per coordinate per label
        self.coord_polys = []
        for a, b in zip(start.points, end.points):
            self.coord_polys.append(
                tuple(
                    polys.normalize([a.coords[t], b.coords[t] - a.coords[t]])
                    for t in range(3)
                )
            )
        self._check_representatives()

    def _check_representatives(self):
        for label, triple in enumerate(self.coord_polys):
            root = None
            degenerate = True
            for p in triple:
                if len(p) == 0:
                    continue  # identically zero coordinate
                if len(p) == 1:
                    degenerate = False  # nonzero constant never vanishes
                    break
                r = Fraction(-p[0], p[1])
                if root is None:
                    root = r
                elif r != root:
                    degenerate = False
                    break
            else:
                if root is None or not (0 <= root <= 1):
                    degenerate = False
            if degenerate:
                raise RepDegenerate(
                    "representative of label %d vanishes along the path" % label
                )

    def coords_at_integer(self, t: int, label: int):
        return tuple(
            (p[0] if p else 0) + (p[1] if len(p) > 1 else 0) * t
            for p in self.coord_polys[label]
        )

    def at(self, t) -> Configuration:
        t = Fraction(t)
        pts = []
        for triple in self.coord_polys:
            coords = [polys.eval_fraction(list(p), t) for p in triple]
            pts.append(HomPoint(*coords))
        return Configuration(pts)


def _collinearity_poly(path: LinearPath, triple) -> list:
    """Cubic (or lower) polynomial: determinant of the moving triple."""
    rows = [path.coord_polys[m] for m in triple]

    def minor(r1, r2, c1, c2):
        return polys.sub(polys.mul(list(rows[r1][c1]), list(rows[r2][c2])),
                         polys.mul(list(rows[r1][c2]), list(rows[r2][c1])))

    out = []
    for c, s in ((0, 1), (1, -1), (2, 1)):
        cols = [x for x in range(3) if x != c]
        term = polys.mul(list(rows[0][c]), minor(1, 2, cols[0], cols[1]))
        out = polys.add(out, polys.scale(term, s))
    return out


def _coconic_poly(path: LinearPath, sextuple) -> list:
    """Degree <= 12 polynomial: coconic determinant of the moving sextuple,
    recovered exactly from 13 integer-parameter samples."""
    values = []
    for t in range(13):
        rows = [_conic_row(path.coords_at_integer(t, m)) for m in sextuple]
        values.append(det_int(rows))
    return polys.interpolate_integer(values)


def wall_events(path: LinearPath) -> list:
    """All wall crossings in (0,1), each isolated to one Sturm-certified root."""
    for cfg, which in ((path.start, "start"), (path.end, "end")):
        rep = check_typicality(cfg)
        if not rep.typical:
            raise NotTypical("%s endpoint is not typical: %r" % (which, rep))

    events = []
    n = path.n
    for triple in combinations(range(n), 3):
        p = _collinearity_poly(path, triple)
        assert p, "collinearity polynomial cannot vanish identically"
        if len(p) == 1:
            continue  # nonzero constant: never collinear
        for interval in polys.isolate_roots(p, Fraction(0), Fraction(1), ISOLATION_WIDTH):
            events.append(WallEvent("collinear", triple, interval))
    if n >= 6:
        for sextuple in combinations(range(n), 6):
            p = _coconic_poly(path, sextuple)
            assert p, "coconic polynomial cannot vanish identically"
            if len(p) == 1:
                continue
            for interval in polys.isolate_roots(p, Fraction(0), Fraction(1), ISOLATION_WIDTH):
                events.append(WallEvent("coconic", sextuple, interval))

    events.sort(key=lambda e: e.interval)
    flagged = []
    for i, e in enumerate(events):
        lo, hi = e.interval
        overlap = False
        if i > 0 and events[i - 1].interval[1] > lo:
            overlap = True
        if i + 1 < len(events) and events[i + 1].interval[0] < hi:
            overlap = True
        flagged.append(replace(e, clustered=overlap) if overlap else e)
    return flagged


def _same_class(a: Configuration, b: Configuration) -> bool:
    from .classifier import class_fingerprint, six_class

    if len(a) == 7:
        return class_fingerprint(a) == class_fingerprint(b)
    if len(a) == 6:
        return six_class(a) == six_class(b)
    return True  # five typical points form a single class


def is_q_isotopy(path: LinearPath):
    """(certificate, events): certificate is True iff no wall is crossed.

    An empty event list proves the endpoints share a deformation class, so
    that is re-checked through the classifier as a guard against bugs.
    """
    events = wall_events(path)
    if not events:
        assert _same_class(path.start, path.end), \
            "event-free path with mismatched endpoint classes"
        return True, events
    return False, events


def _jitter_config(mid_coords, rng, spread):
    pts = []
    for coords in mid_coords:
        scale = max(1, max(abs(c) for c in coords) // spread)
        pts.append(tuple(c + rng.randint(-scale, scale) for c in coords))
    return pts


def find_q_path(start: Configuration, end: Configuration, seed: int = 0,
                budget: int = 64) -> list:
    """A piecewise-linear path of typical configurations from start to end
    with every segment certified event-free.  Raises NotFound when the
    random waypoint search exhausts its segment budget.
    """
    for cfg, which in ((start, "start"), (end, "end")):
        if not check_typicality(cfg).typical:
            raise NotTypical("%s endpoint is not typical" % which)
    if not _same_class(start, end):
        raise ClassMismatch("endpoints lie in different deformation classes")
    if start == end:
        return [start]
    rng = random.Random(seed)
    spent = [0]

    def certify(a: Configuration, b: Configuration, depth: int):
        if spent[0] >= budget:
            raise NotFound("segment budget exhausted")
        spent[0] += 1
        if not wall_events(LinearPath(a, b)):
            return [a, b]
        if depth == 0:
            return None
        mids = [
            tuple(pa.coords[t] + pb.coords[t] for t in range(3))
            for pa, pb in zip(a.points, b.points)
        ]
        for _ in range(4):
            jitter = _jitter_config(mids, rng, spread=4)
            try:
                w = Configuration(jitter)
            except Exception:
                continue
            if not check_typicality(w).typical:
                continue
            left = certify(a, w, depth - 1)
            if left is None:
                continue
            right = certify(w, b, depth - 1)
            if right is None:
                continue
            return left[:-1] + right
        return None

    found = certify(start, end, depth=4)
    if found is None:
        raise NotFound("no certified path within budget")
    return found
