"""Configuration files: a small JSON schema with exact rationals.

Schema: {"points": [[x, y, z], ...], "labels": ["A", ...]?} where each
coordinate is an integer, or a string holding an integer, a fraction
"num/den", or a finite decimal.  Strings keep arbitrary precision intact
in JSON consumers; floats are rejected rather than rounded.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .configuration import Configuration
from .errors import ParseError, PlaneConfigError
from .geometry import HomPoint


@dataclass(frozen=True)
class ConfigFile:
    configuration: Configuration
    labels: tuple | None = None


def _coord(value, where: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise ParseError("%s: write rationals as strings, got %r" % (where, value))
    if not isinstance(value, (int, str)):
        raise ParseError("%s: expected integer or string, got %r" % (where, value))
    try:
        return Fraction(str(value).strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError("%s: not a rational: %r" % (where, value))


def parse_config(text: str) -> ConfigFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("invalid JSON: %s" % exc)
    if not isinstance(doc, dict) or "points" not in doc:
        raise ParseError('expected an object with a "points" field')
    raw = doc["points"]
    if not isinstance(raw, list):
        raise ParseError('"points" must be a list')
    pts = []
    for i, row in enumerate(raw):
        if not isinstance(row, list) or len(row) != 3:
            raise ParseError("point %d: expected [x, y, z]" % i)
        coords = [_coord(v, "point %d" % i) for v in row]
        try:
            pts.append(HomPoint(*coords))
        except PlaneConfigError as exc:
            raise ParseError("point %d: %s" % (i, exc))
    labels = None
    if "labels" in doc and doc["labels"] is not None:
        labels = doc["labels"]
        if (not isinstance(labels, list)
                or len(labels) != len(pts)
                or not all(isinstance(s, str) for s in labels)):
            raise ParseError('"labels" must list one string per point')
        labels = tuple(labels)
    try:
        cfg = Configuration(pts)
    except PlaneConfigError as exc:
        raise ParseError(str(exc))
    return ConfigFile(cfg, labels)


def config_document(c: Configuration, labels=None) -> dict:
    doc = {"points": [[str(x) for x in p.coords] for p in c]}
    if labels is not None:
        doc["labels"] = list(labels)
    return doc


def serialize_config(c: Configuration, labels=None) -> str:
    return json.dumps(config_document(c, labels), indent=2) + "\n"
