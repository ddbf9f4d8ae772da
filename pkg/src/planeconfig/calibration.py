"""Golden table mapping class fingerprints to deformation class names.

The table ships as a plain text file (one "fingerprint<tab>name" row per
class) so it can be regenerated and diffed.  Names follow the derivative
code, with letter subscripts distinguishing classes that share a code;
subscripts are assigned in lexicographic fingerprint order.
"""

from __future__ import annotations

import importlib.resources
from functools import lru_cache

from .errors import ParseError


def parse_table(text: str) -> dict[str, str]:
    table = {}
    for ln, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise ParseError("line %d: expected fingerprint<TAB>name" % ln)
        fp, name = parts[0].strip(), parts[1].strip()
        if not fp or not name:
            raise ParseError("line %d: empty field" % ln)
        if fp in table:
            raise ParseError("line %d: duplicate fingerprint" % ln)
        table[fp] = name
    return table


def format_table(table: dict[str, str]) -> str:
    lines = ["# fingerprint\tclass name"]
    for fp in sorted(table):
        lines.append("%s\t%s" % (fp, table[fp]))
    return "\n".join(lines) + "\n"


@lru_cache(maxsize=1)
def default_table() -> dict[str, str]:
    ref = importlib.resources.files("planeconfig").joinpath("data/fingerprints.txt")
    return parse_table(ref.read_text())
