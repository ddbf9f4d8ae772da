"""Command-line front end.

Exit codes: 0 success; 2 unreadable or malformed input; 3 input fails the
typicality precondition (a report is still printed); 4 degenerate result
(quadratic image or path representative); 5 nothing found (unknown seed,
exhausted path search, endpoint class mismatch); 1 anything else.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import __version__
from .atlas import builtin_seeds, census, seed_by_name
from .classifier import q_class
from .cremona import cremona
from .deform import LinearPath, wall_events
from .errors import (
    ClassMismatch,
    ImageDegenerate,
    NotFound,
    NotTypical,
    ParseError,
    PlaneConfigError,
    RepDegenerate,
)
from .fileio import parse_config, serialize_config
from .report import build_class_report, canonical_json

DEFAULT_PORT = int(os.environ.get("PLANECONFIG_PORT", "8642"))


def _load(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError("cannot read %s: %s" % (path, exc))
    return parse_config(text)


def _cmd_classify(args) -> int:
    cf = _load(args.file)
    report = build_class_report(cf.configuration, cf.labels)
    if args.json:
        sys.stdout.write(canonical_json(report))
    elif report["typicality"]["typical"] and "class_name" in report:
        print(report["class_name"])
        print(report["fingerprint"])
    elif report["typicality"]["typical"]:
        if "six_class_name" in report:
            print("six-point class: %s (delta=%d)"
                  % (report["six_class_name"], report["six_class"]))
        else:
            print("typical five-point configuration")
    if not report["typicality"]["typical"]:
        if not args.json:
            t = report["typicality"]
            print("not typical")
            for tri in t["collinear_triples"]:
                print("  collinear: %r" % (tri,))
            for six in t["coconic_sextuples"]:
                print("  coconic: %r" % (six,))
        return 3
    return 0


def _cmd_path(args) -> int:
    a = _load(args.a).configuration
    b = _load(args.b).configuration
    events = wall_events(LinearPath(a, b))
    if args.json:
        doc = {"certified": not events, "events": [
            {"kind": e.kind, "labels": list(e.labels),
             "interval": [str(e.interval[0]), str(e.interval[1])],
             "clustered": e.clustered} for e in events]}
        sys.stdout.write(canonical_json(doc))
        return 0
    if not events:
        print("Q-isotopy certified (0 events)")
        return 0
    print("%d wall events" % len(events))
    for e in events:
        flag = " (clustered)" if e.clustered else ""
        print("  %s %r in [%s, %s]%s"
              % (e.kind, e.labels, e.interval[0], e.interval[1], flag))
    return 0


def _cmd_cremona(args) -> int:
    cf = _load(args.file)
    image = cremona(cf.configuration, (args.i, args.j, args.k))
    text = serialize_config(image, cf.labels)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print("wrote %s (%s)" % (args.out, q_class(image).name))
    else:
        sys.stdout.write(text)
    return 0


def _cmd_seeds(args) -> int:
    if args.action == "list":
        for s in builtin_seeds():
            print("%-12s %-16s %s" % (s.name, s.class_name, s.provenance))
        return 0
    seed = seed_by_name(args.name)
    sys.stdout.write(serialize_config(seed.configuration))
    return 0


def _cmd_census(args) -> int:
    rep = census(args.samples, args.bound, args.seed)
    print("samples=%d typical=%d degenerate=%d"
          % (rep.samples, rep.typical, rep.degenerate))
    for name in sorted(rep.class_counts, key=lambda n: -rep.class_counts[n]):
        print("  %6d  %s" % (rep.class_counts[name], name))
    if rep.unseen:
        print("unseen: %s" % ", ".join(rep.unseen))
    return 0


def _cmd_serve(args) -> int:
    from .service import serve

    serve(port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="planeconfig",
        description="Classify 5/6/7-point plane configurations exactly.",
    )
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="deformation class of a configuration file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true", help="emit the full report")
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("path", help="wall events of the straight-line path")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_path)

    p = sub.add_parser("cremona", help="quadratic transform based at three labels")
    p.add_argument("file")
    p.add_argument("i", type=int)
    p.add_argument("j", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--out", help="write the image here instead of stdout")
    p.set_defaults(fn=_cmd_cremona)

    p = sub.add_parser("seeds", help="list stored seeds or emit one")
    ps = p.add_subparsers(dest="action", required=True)
    pl = ps.add_parser("list")
    pl.set_defaults(fn=_cmd_seeds, action="list")
    pe = ps.add_parser("emit")
    pe.add_argument("name")
    pe.set_defaults(fn=_cmd_seeds, action="emit")

    p = sub.add_parser("census", help="sample and classify random configurations")
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--bound", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=_cmd_census)

    p = sub.add_parser("serve", help="start the local JSON service")
    p.add_argument("--port", type=int, default=DEFAULT_PORT)
    p.set_defaults(fn=_cmd_serve)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return 2
    except NotTypical as exc:
        print("not typical: %s" % exc, file=sys.stderr)
        return 3
    except (ImageDegenerate, RepDegenerate) as exc:
        print("degenerate: %s" % exc, file=sys.stderr)
        return 4
    except (NotFound, ClassMismatch) as exc:
        print("%s" % exc, file=sys.stderr)
        return 5
    except PlaneConfigError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
