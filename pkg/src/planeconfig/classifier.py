"""Invariants of typical configurations and the deformation-class fingerprint.

The classification pipeline for seven points:

  deletion classes  ->  derivative code sigma = (s1, s2, s3, s6)
  dual line arrangement  ->  polygonal spectrum (f3..f7), convexity type
  conics through five points  ->  dominance matrix / indices
  marked point + decorated adjacency graph  ->  canonical fingerprint

Everything is derived from exact integer signs; results are memoized on a
ConfigAnalysis so the census can classify thousands of samples cheaply.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, permutations, product

from .arrangement import face_size_counts, face_census
from .configuration import (
    Configuration,
    check_typicality,
    chirotope,
    graph_on,
    orient_lookup,
)
from .errors import (
    Ambiguous,
    CanonicalizationFailed,
    InvalidComponentCount,
    InvalidSize,
    NotApplicable,
    NotCyclic,
    NotHeptagonal,
    NotSimple,
    NotTypical,
    UnknownCode,
)
from .geometry import Side, conic_through5, side_of_conic

ADMISSIBLE_SIX_CLASSES = (1, 2, 3, 6)

SIX_CLASS_NAMES = {1: "cyclic", 2: "bicomponent", 3: "tricomponent", 6: "icosahedral"}

# Realizable derivative codes with their polygonal spectra (f3, f4, f5, f6, f7).
CODE_SPECTRA = {
    (7, 0, 0, 0): (7, 14, 0, 0, 1),
    (3, 4, 0, 0): (7, 13, 1, 1, 0),
    (2, 2, 3, 0): (8, 11, 2, 1, 0),
    (1, 2, 2, 2): (11, 5, 5, 1, 0),
    (1, 0, 6, 0): (9, 9, 3, 1, 0),
    (1, 6, 0, 0): (7, 12, 3, 0, 0),
    (1, 4, 2, 0): (8, 10, 4, 0, 0),
    (1, 2, 4, 0): (9, 8, 5, 0, 0),
    (0, 4, 3, 0): (8, 10, 4, 0, 0),
    (0, 6, 1, 0): (7, 12, 3, 0, 0),
    (0, 3, 3, 1): (10, 6, 6, 0, 0),
}

# Codes realized by a single deformation class; the other two split.
SPLIT_CODES = {(3, 4, 0, 0): 2, (2, 2, 3, 0): 3}

# Dominance indices read along the adjacency heptagon, starting at the
# d = 6 point and moving toward its d = 1 neighbor.
CANONICAL_D_SEQUENCE = (6, 1, 4, 3, 2, 5, 0)


class ConvexityType(enum.Enum):
    HEPTAGONAL = "heptagonal"
    HEXAGONAL = "hexagonal"
    PENTAGONAL = "pentagonal"


class DominanceColor(enum.Enum):
    DOMINANT = "dominant"
    SUBDOMINANT = "subdominant"


class EdgeKind(enum.Enum):
    INTERNAL = "internal"
    EXTERNAL = "external"
    SPECIAL = "special"


@dataclass(frozen=True)
class EdgeDecoration:
    kind: EdgeKind
    direction: tuple | None = None  # (inside endpoint, outside endpoint)


@dataclass(frozen=True)
class QClass:
    name: str
    sigma: tuple
    fingerprint: str


def sigma_name(sigma) -> str:
    return "(%d,%d,%d,%d)" % tuple(sigma)


class ConfigAnalysis:
    """Memoized invariants of one configuration."""

    def __init__(self, config: Configuration):
        self.config = config
        self.n = len(config)

    @cached_property
    def chirotope(self):
        return chirotope(self.config)

    @cached_property
    def typicality(self):
        return check_typicality(self.config, self.chirotope)

    def require_simple(self):
        if not self.typicality.simple:
            raise NotSimple(
                "collinear triples: %r" % (self.typicality.collinear_triples,)
            )

    def require_typical(self):
        if not self.typicality.typical:
            raise NotTypical(
                "collinear triples: %r, coconic sextuples: %r"
                % (
                    self.typicality.collinear_triples,
                    self.typicality.coconic_sextuples,
                )
            )

    def require_size(self, n, what):
        if self.n != n:
            raise InvalidSize("%s needs %d points, got %d" % (what, n, self.n))

    @cached_property
    def graph(self):
        self.require_simple()
        return graph_on(self.chirotope, range(self.n))

    @cached_property
    def deletion_component_counts(self):
        """Component count of the adjacency graph after deleting each label."""
        self.require_size(7, "deletion classes")
        self.require_simple()
        counts = []
        for m in range(7):
            g = graph_on(self.chirotope, [i for i in range(7) if i != m])
            counts.append(len(g.components()))
        return tuple(counts)

    @cached_property
    def deltas(self):
        counts = self.deletion_component_counts
        for m, k in enumerate(counts):
            if k not in ADMISSIBLE_SIX_CLASSES:
                raise InvalidComponentCount(
                    "deleting label %d leaves %d components" % (m, k)
                )
        return counts

    @cached_property
    def sigma(self):
        code = tuple(self.deltas.count(k) for k in ADMISSIBLE_SIX_CLASSES)
        if code not in CODE_SPECTRA:
            raise UnknownCode("derivative code %r is not realizable" % (code,))
        return code

    @cached_property
    def faces(self):
        self.require_simple()
        return face_census([p.coords for p in self.config.points])

    @cached_property
    def spectrum(self):
        counts = {k: len(v) // 2 for k, v in self.faces.items()}
        return tuple(counts.get(k, 0) for k in range(3, self.n + 1))

    @cached_property
    def convexity(self):
        self.require_size(7, "convexity type")
        f = self.spectrum
        if f[4]:
            return ConvexityType.HEPTAGONAL
        if f[3]:
            return ConvexityType.HEXAGONAL
        return ConvexityType.PENTAGONAL

    @cached_property
    def conics(self):
        """Conic through the five points omitting each unordered label pair."""
        self.require_size(7, "dominance conics")
        pts = self.config.points
        out = {}
        for i, j in combinations(range(7), 2):
            five = [pts[k] for k in range(7) if k != i and k != j]
            out[(i, j)] = conic_through5(five)
        return out

    @cached_property
    def dominance_matrix(self):
        self.require_typical()
        pts = self.config.points
        rows = [[None] * 7 for _ in range(7)]
        for (i, j), conic in self.conics.items():
            for a, b in ((i, j), (j, i)):
                side = side_of_conic(conic, pts[a])
                if side is Side.ON:
                    raise NotTypical(
                        "point %d lies on the conic omitting %r" % (a, (i, j))
                    )
                rows[a][b] = 1 if side is Side.OUTSIDE else 0
        return tuple(tuple(r) for r in rows)

    @cached_property
    def dominance_indices(self):
        return tuple(sum(v for v in row if v is not None) for row in self.dominance_matrix)

    @cached_property
    def marked_point(self):
        self.require_size(7, "marked point")
        self.require_typical()
        conv = self.convexity
        if conv is ConvexityType.HEPTAGONAL:
            raise NotApplicable("heptagonal configurations have no marked point")
        if conv is ConvexityType.PENTAGONAL:
            if self.sigma[0] == 0:
                return None
            ones = [m for m, d in enumerate(self.deltas) if d == 1]
            if len(ones) != 1:
                raise Ambiguous("sigma1 = 1 expected a unique cyclic deletion")
            return ones[0]
        # Hexagonal: the unique label lying inside the hull of the other six
        # in a chart taken from the hexagonal face of the dual arrangement.
        inner = [m for m in range(7) if self._inside_hull_of_rest(m)]
        if len(inner) != 1:
            raise Ambiguous("expected one hull-interior point, found %r" % (inner,))
        m = inner[0]
        if self.deltas[m] != 1:
            raise Ambiguous("hull-interior point %d is not a cyclic deletion" % m)
        return m

    @cached_property
    def _hexagonal_chart_flips(self):
        six_faces = self.faces.get(6)
        if not six_faces:
            raise NotApplicable("no hexagonal face in the dual arrangement")
        x = [0, 0, 0]
        for ray in six_faces[0]:
            x = [x[t] + ray[t] for t in range(3)]
        flips = []
        for p in self.config.points:
            d = sum(x[t] * p.coords[t] for t in range(3))
            assert d != 0, "chart vector touches a dual line"
            flips.append(1 if d > 0 else -1)
        return tuple(flips)

    def _inside_hull_of_rest(self, m) -> bool:
        flips = self._hexagonal_chart_flips
        ch = self.chirotope

        def aff(a, b, c):
            return orient_lookup(ch, a, b, c) * flips[a] * flips[b] * flips[c]

        rest = [i for i in range(7) if i != m]
        for a, b, c in combinations(rest, 3):
            s = aff(a, b, c)
            if aff(a, b, m) == s and aff(b, c, m) == s and aff(c, a, m) == s:
                return True
        return False

    @cached_property
    def dominance_colors(self):
        """Colors of the six unmarked labels inside the deleted subconfiguration."""
        m = self.marked_point
        if m is None:
            return None
        colors = {}
        for i in range(7):
            if i == m:
                continue
            colors[i] = (
                DominanceColor.DOMINANT
                if self.dominance_matrix[i][m]
                else DominanceColor.SUBDOMINANT
            )
        return colors

    @cached_property
    def edge_decorations(self):
        self.require_typical()
        deco = {}
        mat = self.dominance_matrix
        for i, j in sorted(self.graph.edges):
            if self.deltas[i] != 1 or self.deltas[j] != 1:
                continue
            bij, bji = mat[i][j], mat[j][i]
            if bij == 0 and bji == 0:
                deco[(i, j)] = EdgeDecoration(EdgeKind.INTERNAL)
            elif bij == 1 and bji == 1:
                deco[(i, j)] = EdgeDecoration(EdgeKind.EXTERNAL)
            else:
                inside, outside = (i, j) if bij == 0 else (j, i)
                deco[(i, j)] = EdgeDecoration(EdgeKind.SPECIAL, (inside, outside))
        return deco

    @cached_property
    def fingerprint(self):
        return _fingerprint(self)

    @cached_property
    def heptagon_order(self):
        """Labels around the adjacency heptagon (heptagonal inputs only)."""
        if self.convexity is not ConvexityType.HEPTAGONAL:
            raise NotHeptagonal("polygonal spectrum has f7 = 0")
        g = self.graph
        if len(g.components()) != 1 or any(g.degree(v) != 2 for v in range(7)):
            raise CanonicalizationFailed("adjacency graph is not a single 7-cycle")
        order = [0]
        prev = None
        while len(order) < 7:
            nbrs = g.neighbors(order[-1])
            nxt = nbrs[0] if nbrs[0] != prev else nbrs[1]
            prev = order[-1]
            order.append(nxt)
        return tuple(order)

    @cached_property
    def canonical_numeration(self):
        self.require_typical()
        order = self.heptagon_order
        d = self.dominance_indices
        hits = []
        for seq in (order, order[::-1]):
            for r in range(7):
                rotated = seq[r:] + seq[:r]
                if tuple(d[v] for v in rotated) == CANONICAL_D_SEQUENCE:
                    hits.append(rotated)
        if len(hits) != 1:
            raise CanonicalizationFailed(
                "found %d rotations matching the canonical pattern" % len(hits)
            )
        return hits[0]


def _analysis(c) -> ConfigAnalysis:
    return c if isinstance(c, ConfigAnalysis) else ConfigAnalysis(c)


# ---------------------------------------------------------------------------
# fingerprint


_COLOR_CHARS = {None: "-", DominanceColor.DOMINANT: "B", DominanceColor.SUBDOMINANT: "W"}


def _fingerprint(a: ConfigAnalysis) -> str:
    a.require_size(7, "class fingerprint")
    a.require_typical()
    sigma = a.sigma
    deltas = a.deltas
    dom = a.dominance_indices
    marked = None
    if a.convexity is not ConvexityType.HEPTAGONAL:
        marked = a.marked_point
    colors = a.dominance_colors if marked is not None else None

    def color_char(v):
        if marked is None:
            return "-"
        if v == marked:
            return "M"
        return _COLOR_CHARS[colors[v]]

    attrs = ["%d%d%s" % (deltas[v], dom[v], color_char(v)) for v in range(7)]

    deco = a.edge_decorations
    edges = a.graph.edges

    def edge_char(u, v):
        key = (u, v) if u < v else (v, u)
        if key not in edges:
            return "."
        d = deco.get(key)
        if d is None:
            return "-"
        if d.kind is EdgeKind.INTERNAL:
            return "i"
        if d.kind is EdgeKind.EXTERNAL:
            return "e"
        return "s" if d.direction == (u, v) else "S"

    groups = {}
    for v in range(7):
        groups.setdefault(attrs[v], []).append(v)
    keys = sorted(groups)

    best = None
    for perm_parts in product(*(permutations(groups[k]) for k in keys)):
        perm = [v for part in perm_parts for v in part]
        chars = []
        for x in range(7):
            for y in range(x + 1, 7):
                chars.append(edge_char(perm[x], perm[y]))
        cand = "".join(chars)
        if best is None or cand < best:
            best = cand

    head = "%d%d%d%d" % sigma
    return head + "|" + "".join(sorted(attrs)) + "|" + best


# ---------------------------------------------------------------------------
# public operations


def six_class(c) -> int:
    """Deformation class of a simple six-point configuration: the component
    count of its adjacency graph (1 cyclic, 2, 3, or 6 edgeless)."""
    a = _analysis(c)
    a.require_size(6, "six_class")
    a.require_simple()
    k = len(a.graph.components())
    if k not in ADMISSIBLE_SIX_CLASSES:
        raise InvalidComponentCount("six-point graph has %d components" % k)
    return k


def derivative_code(c) -> tuple:
    """(s1, s2, s3, s6): how many deletions leave 1/2/3/6 components."""
    a = _analysis(c)
    a.require_size(7, "derivative_code")
    a.require_simple()
    return a.sigma


def polygonal_spectrum(c) -> tuple:
    """(f3, ..., fn): face-size counts of the dual line arrangement."""
    a = _analysis(c)
    a.require_simple()
    return a.spectrum


def convexity_type(c) -> ConvexityType:
    a = _analysis(c)
    return a.convexity


def dominance_coloring(c) -> tuple:
    """Dominant/subdominant color per label of a typical cyclic six-configuration."""
    a = _analysis(c)
    a.require_size(6, "dominance_coloring")
    a.require_typical()
    if len(a.graph.components()) != 1:
        raise NotCyclic("dominance coloring needs a connected adjacency graph")
    pts = a.config.points
    colors = []
    for i in range(6):
        conic = conic_through5([pts[k] for k in range(6) if k != i])
        side = side_of_conic(conic, pts[i])
        if side is Side.ON:
            raise NotTypical("point %d lies on the conic through the others" % i)
        colors.append(
            DominanceColor.DOMINANT if side is Side.OUTSIDE else DominanceColor.SUBDOMINANT
        )
    return tuple(colors)


def dominance_matrix(c) -> tuple:
    """7x7 matrix: entry (i, j) is 1 iff point i lies outside the conic
    through the five points other than i and j; diagonal entries are None."""
    a = _analysis(c)
    a.require_size(7, "dominance_matrix")
    return a.dominance_matrix


def dominance_indices(c) -> tuple:
    return _analysis(c).dominance_indices


def canonical_cyclic_numeration(c) -> tuple:
    """Labels around the adjacency heptagon so dominance indices read
    (6, 1, 4, 3, 2, 5, 0).  Unique for typical heptagonal configurations."""
    return _analysis(c).canonical_numeration


def heptagonal_region(c, marked: int) -> int:
    """Index of the conic-bounded region (0..6) that the marked point
    occupies relative to the deleted hexagon; determined by the marked
    point's dominance index (region k holds the points of index 6 - k)."""
    a = _analysis(c)
    a.require_size(7, "heptagonal_region")
    if a.convexity is not ConvexityType.HEPTAGONAL:
        raise NotHeptagonal("heptagonal_region needs f7 > 0")
    if not 0 <= marked < 7:
        raise ValueError("marked label out of range")
    if a.deltas[marked] != 1:
        raise NotCyclic("deleting the marked point must leave a cyclic hexagon")
    return 6 - a.dominance_indices[marked]


def marked_point(c):
    """The unique label whose deletion leaves a cyclic hexagon containing it
    (hexagonal case), or the unique cyclic deletion (pentagonal, sigma1 = 1);
    None when sigma1 = 0.  Heptagonal inputs have no marked point."""
    return _analysis(c).marked_point


def edge_decorations(c) -> dict:
    """Decorations of adjacency edges whose endpoints both have deletion
    class 1: internal (both endpoints inside the paired conics), external
    (both outside), or special (mixed; directed inside -> outside)."""
    return _analysis(c).edge_decorations


def class_fingerprint(c) -> str:
    """Canonical ASCII encoding of (sigma; decorated, colored adjacency
    graph), minimized over label permutations.  Constant on deformation
    classes; takes exactly 14 values over typical 7-point configurations."""
    return _analysis(c).fingerprint


def q_class(c, table=None) -> QClass:
    """The deformation class of a typical seven-point configuration."""
    from . import calibration

    a = _analysis(c)
    a.require_size(7, "q_class")
    a.require_typical()
    sigma = a.sigma
    fp = a.fingerprint
    expected = CODE_SPECTRA[sigma]
    if a.spectrum != expected:
        raise UnknownCode(
            "spectrum %r does not match %r for code %r" % (a.spectrum, expected, sigma)
        )
    if sigma in SPLIT_CODES:
        if table is None:
            table = calibration.default_table()
        name = table.get(fp)
        if name is None:
            from .errors import UnknownFingerprint

            raise UnknownFingerprint("fingerprint %s not in calibration table" % fp)
    else:
        name = sigma_name(sigma)
    return QClass(name=name, sigma=sigma, fingerprint=fp)
