"""Exact classification toolkit for small point configurations in the projective plane."""

from .atlas import CensusReport, Seed, builtin_seeds, census, seed_by_name, verify_seeds
from .classifier import (
    QClass,
    canonical_cyclic_numeration,
    class_fingerprint,
    convexity_type,
    derivative_code,
    dominance_coloring,
    dominance_indices,
    dominance_matrix,
    edge_decorations,
    heptagonal_region,
    marked_point,
    polygonal_spectrum,
    q_class,
    six_class,
)
from .configuration import (
    AdjacencyGraph,
    Configuration,
    TypicalityReport,
    adjacency_graph,
    check_typicality,
    components,
)
from .cremona import all_bases, cremona, cremona_orbit
from .deform import LinearPath, WallEvent, find_q_path, is_q_isotopy, wall_events
from .errors import (
    ClassMismatch,
    ImageDegenerate,
    InvalidSize,
    NotApplicable,
    NotCyclic,
    NotFound,
    NotHeptagonal,
    NotSimple,
    NotTypical,
    ParseError,
    PlaneConfigError,
    SeedCorrupt,
    UnknownFingerprint,
)
from .fileio import ConfigFile, parse_config, serialize_config
from .geometry import (
    Conic,
    HomPoint,
    ProjLine,
    Side,
    Sign,
    coconic6,
    collinear,
    conic_through5,
    cyclic_order_on_line,
    incident,
    join,
    meet,
    orient3,
    side_of_conic,
)
from .report import build_class_report, canonical_json

__all__ = [
    "AdjacencyGraph",
    "CensusReport",
    "ClassMismatch",
    "ConfigFile",
    "Configuration",
    "Conic",
    "HomPoint",
    "ImageDegenerate",
    "InvalidSize",
    "LinearPath",
    "NotApplicable",
    "NotCyclic",
    "NotFound",
    "NotHeptagonal",
    "NotSimple",
    "NotTypical",
    "ParseError",
    "PlaneConfigError",
    "ProjLine",
    "QClass",
    "Seed",
    "SeedCorrupt",
    "Side",
    "Sign",
    "TypicalityReport",
    "UnknownFingerprint",
    "WallEvent",
    "adjacency_graph",
    "all_bases",
    "builtin_seeds",
    "build_class_report",
    "canonical_cyclic_numeration",
    "canonical_json",
    "census",
    "check_typicality",
    "class_fingerprint",
    "coconic6",
    "collinear",
    "components",
    "conic_through5",
    "convexity_type",
    "cremona",
    "cremona_orbit",
    "cyclic_order_on_line",
    "derivative_code",
    "dominance_coloring",
    "dominance_indices",
    "dominance_matrix",
    "edge_decorations",
    "find_q_path",
    "heptagonal_region",
    "incident",
    "is_q_isotopy",
    "join",
    "marked_point",
    "meet",
    "orient3",
    "parse_config",
    "polygonal_spectrum",
    "q_class",
    "seed_by_name",
    "serialize_config",
    "side_of_conic",
    "six_class",
    "verify_seeds",
    "wall_events",
]

__version__ = "0.1.0"
