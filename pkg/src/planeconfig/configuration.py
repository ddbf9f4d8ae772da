"""Labelled configurations of 5..7 points and their adjacency graphs.

The adjacency graph joins two points p, q when at least one of the two arcs
of the line through them (taking the line as a circle, with p and q as arc
endpoints) meets none of the lines spanned by pairs of the remaining points.
That test only depends on orientation signs: a line m through remaining
points r, s crosses the arc containing direction epsilon iff
sign(det(r,s,p) * det(r,s,q)) is fixed, so the edge exists iff that product
has the same sign for every such pair.  All graphs are therefore computed
from the cached chirotope (the C(n,3) orientation signs).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import IdenticalPoints, InvalidSize, NotSimple
from .geometry import HomPoint, _det3, det_int, _conic_row


class Configuration:
    """An ordered tuple of pairwise distinct points; labels are positions."""

    __slots__ = ("points",)

    def __init__(self, points):
        pts = []
        for p in points:
            pts.append(p if isinstance(p, HomPoint) else HomPoint(*p))
        if len(pts) not in (5, 6, 7):
            raise InvalidSize("configurations have 5, 6 or 7 points, got %d" % len(pts))
        if len(set(pts)) != len(pts):
            raise IdenticalPoints("configuration points must be pairwise distinct")
        self.points = tuple(pts)

    @classmethod
    def affine(cls, pairs) -> "Configuration":
        return cls([HomPoint(x, y, 1) for x, y in pairs])

    def __len__(self):
        return len(self.points)

    def __getitem__(self, label) -> HomPoint:
        return self.points[label]

    def __iter__(self):
        return iter(self.points)

    def __eq__(self, other):
        return isinstance(other, Configuration) and other.points == self.points

    def __hash__(self):
        return hash(self.points)

    def __repr__(self):
        return "Configuration(%r)" % (self.points,)

    def drop(self, label) -> "Configuration":
        """The configuration with one point removed (labels shift down)."""
        if len(self.points) <= 5:
            raise InvalidSize("cannot drop below five points")
        return Configuration(self.points[:label] + self.points[label + 1 :])


def chirotope(c: Configuration) -> dict:
    """Orientation sign for every ascending label triple."""
    coords = [p.coords for p in c.points]
    out = {}
    for i, j, k in combinations(range(len(coords)), 3):
        d = _det3(coords[i], coords[j], coords[k])
        out[(i, j, k)] = (d > 0) - (d < 0)
    return out


def orient_lookup(ch: dict, a: int, b: int, c: int) -> int:
    """Orientation sign for an arbitrary label order, from the ascending table."""
    if a < b:
        if b < c:
            return ch[(a, b, c)]
        if a < c:
            return -ch[(a, c, b)]
        return ch[(c, a, b)]
    if a < c:
        return -ch[(b, a, c)]
    if b < c:
        return ch[(b, c, a)]
    return -ch[(c, b, a)]


@dataclass(frozen=True)
class TypicalityReport:
    simple: bool
    typical: bool
    collinear_triples: tuple
    coconic_sextuples: tuple


def check_typicality(c: Configuration, ch: dict | None = None) -> TypicalityReport:
    """List every collinear triple and coconic sextuple of the configuration."""
    ch = ch or chirotope(c)
    triples = tuple(sorted(t for t, s in ch.items() if s == 0))
    sextuples = []
    n = len(c)
    coords = [p.coords for p in c.points]
    for sub in combinations(range(n), 6):
        if det_int([_conic_row(coords[i]) for i in sub]) == 0:
            sextuples.append(sub)
    simple = not triples
    return TypicalityReport(
        simple=simple,
        typical=simple and not sextuples,
        collinear_triples=triples,
        coconic_sextuples=tuple(sextuples),
    )


@dataclass(frozen=True)
class AdjacencyGraph:
    n: int
    labels: tuple
    edges: frozenset

    def neighbors(self, label):
        return sorted(
            (b if a == label else a) for a, b in self.edges if label in (a, b)
        )

    def degree(self, label) -> int:
        return len(self.neighbors(label))

    def components(self) -> tuple:
        comp = []
        seen = set()
        for start in self.labels:
            if start in seen:
                continue
            queue, block = [start], {start}
            while queue:
                v = queue.pop()
                for w in self.neighbors(v):
                    if w not in block:
                        block.add(w)
                        queue.append(w)
            seen |= block
            comp.append(tuple(sorted(block)))
        return tuple(sorted(comp))


def components(graph: AdjacencyGraph) -> tuple:
    return graph.components()


def _edge_present(ch: dict, labels, p: int, q: int) -> bool:
    rest = [r for r in labels if r != p and r != q]
    first = 0
    for r, s in combinations(rest, 2):
        prod = orient_lookup(ch, r, s, p) * orient_lookup(ch, r, s, q)
        if prod == 0:
            raise NotSimple("collinear triple involving (%d,%d) and (%d,%d)" % (r, s, p, q))
        if first == 0:
            first = prod
        elif prod != first:
            return False
    return True


def graph_on(ch: dict, labels) -> AdjacencyGraph:
    """Adjacency graph of a label subset, using a precomputed chirotope."""
    labels = tuple(sorted(labels))
    edges = frozenset(
        (p, q) for p, q in combinations(labels, 2) if _edge_present(ch, labels, p, q)
    )
    return AdjacencyGraph(n=len(labels), labels=labels, edges=edges)


def adjacency_graph(c: Configuration, ch: dict | None = None) -> AdjacencyGraph:
    """Adjacency graph of a simple configuration."""
    ch = ch or chirotope(c)
    return graph_on(ch, range(len(c)))
