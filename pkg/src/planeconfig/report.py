"""Classification reports shared by the CLI and the HTTP service.

The report is a plain JSON-ready dict.  canonical_json fixes key order and
spacing so both front ends emit byte-identical documents for the same
input.  Exact values (coordinates, conic coefficients) are strings.
"""

from __future__ import annotations

import json

from .classifier import (
    ConfigAnalysis,
    ConvexityType,
    EdgeKind,
    SIX_CLASS_NAMES,
    q_class,
    six_class,
)
from .configuration import Configuration, check_typicality
from .errors import NotApplicable
from .geometry import conic_through5


def _typicality_block(c: Configuration) -> dict:
    rep = check_typicality(c)
    return {
        "simple": rep.simple,
        "typical": rep.typical,
        "collinear_triples": [list(t) for t in rep.collinear_triples],
        "coconic_sextuples": [list(s) for s in rep.coconic_sextuples],
    }


def _conic_entries(a: ConfigAnalysis) -> list:
    out = []
    for (i, j), conic in sorted(a.conics.items()):
        out.append({
            "omitted": [i, j],
            "coefficients": [str(v) for v in conic.coefficients()],
        })
    return out


def _decoration_entries(a: ConfigAnalysis) -> list:
    kinds = {EdgeKind.INTERNAL: "internal", EdgeKind.EXTERNAL: "external",
             EdgeKind.SPECIAL: "special"}
    out = []
    for (i, j), deco in sorted(a.edge_decorations.items()):
        entry = {"edge": [i, j], "kind": kinds[deco.kind]}
        entry["direction"] = list(deco.direction) if deco.direction else None
        out.append(entry)
    return out


def build_class_report(c: Configuration, labels=None) -> dict:
    """Everything the classifier can say about one configuration."""
    report = {
        "size": len(c),
        "points": [[str(x) for x in p.coords] for p in c],
        "typicality": _typicality_block(c),
    }
    if labels is not None:
        report["labels"] = list(labels)
    if not report["typicality"]["typical"]:
        return report

    if len(c) == 5:
        conic = conic_through5(c.points)
        report["conic"] = [str(v) for v in conic.coefficients()]
        return report

    if len(c) == 6:
        k = six_class(c)
        report["six_class"] = k
        report["six_class_name"] = SIX_CLASS_NAMES[k]
        return report

    a = ConfigAnalysis(c)
    qc = q_class(c)
    convexity = {
        ConvexityType.HEPTAGONAL: "heptagonal",
        ConvexityType.HEXAGONAL: "hexagonal",
        ConvexityType.PENTAGONAL: "pentagonal",
    }[a.convexity]
    try:
        marked = a.marked_point
    except NotApplicable:
        marked = None
    heptagonal = a.convexity is ConvexityType.HEPTAGONAL
    report.update({
        "sigma": list(a.sigma),
        "spectrum": list(a.spectrum),
        "convexity": convexity,
        "deltas": list(a.deltas),
        "dominance_matrix": [[v for v in row] for row in a.dominance_matrix],
        "dominance_indices": list(a.dominance_indices),
        "canonical_numeration": list(a.canonical_numeration) if heptagonal else None,
        "marked_point": marked,
        "edge_decorations": _decoration_entries(a),
        "adjacency_edges": sorted([i, j] for i, j in a.graph.edges),
        "conics": _conic_entries(a),
        "fingerprint": a.fingerprint,
        "class_name": qc.name,
    })
    return report


def canonical_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"),
                      ensure_ascii=False) + "\n"
