"""Wall detection along straight-line deformations.

The planted-wall fixtures are built so that exactly one predicate changes
sign along the segment and every other predicate keeps a constant sign,
which pins down the expected event list completely.
"""

from fractions import Fraction

import pytest

from planeconfig import (
    ClassMismatch,
    Configuration,
    InvalidSize,
    LinearPath,
    NotFound,
    NotTypical,
    find_q_path,
    is_q_isotopy,
    wall_events,
)
from planeconfig.atlas import seed_by_name
from planeconfig.classifier import class_fingerprint, six_class


def seed_config(name):
    return seed_by_name(name).configuration


def scaled(pairs, k):
    return Configuration.affine([(x * k, y * k) for x, y in pairs])


HEX = [(5, 0), (2, 3), (-2, 3), (-4, 0), (-2, -3), (2, -3)]


class TestLinearPath:
    def test_endpoint_evaluation(self):
        start = seed_config("HEX6")
        end = scaled(HEX, 2)
        path = LinearPath(start, end)
        assert path.at(0) == start
        assert path.at(1) == end

    def test_midpoint_is_coordinatewise_sum(self):
        from planeconfig.geometry import HomPoint

        a = Configuration.affine([(0, 0), (1, 0), (0, 1), (2, 3), (5, 1)])
        b = Configuration.affine([(0, 2), (1, 4), (6, 1), (2, 5), (5, 3)])
        mid = LinearPath(a, b).at(Fraction(1, 2))
        for pa, pb, pm in zip(a.points, b.points, mid.points):
            summed = tuple(x + y for x, y in zip(pa.coords, pb.coords))
            assert pm == HomPoint(*summed)

    def test_size_mismatch(self):
        with pytest.raises(InvalidSize):
            LinearPath(seed_config("HEX6"), seed_config("HEPT7"))

    def test_integer_samples_match_at(self):
        path = LinearPath(seed_config("HEX6"), scaled(HEX, 3))
        for t in (0, 1, 5):
            cfg = path.at(t)
            for m in range(6):
                from planeconfig.geometry import HomPoint

                assert HomPoint(*path.coords_at_integer(t, m)) == cfg[m]


class TestWallEvents:
    def test_requires_typical_endpoints(self):
        bad = Configuration.affine([(0, 0), (1, 0), (2, 0), (0, 1), (1, 2)])
        good = Configuration.affine([(0, 0), (1, 0), (2, 1), (0, 1), (1, 2)])
        with pytest.raises(NotTypical):
            wall_events(LinearPath(bad, good))
        with pytest.raises(NotTypical):
            wall_events(LinearPath(good, bad))

    def test_small_nudge_is_event_free(self):
        start = scaled(HEX, 100)
        nudged = [(501, 1)] + [(x * 100, y * 100) for x, y in HEX[1:]]
        ok, events = is_q_isotopy(LinearPath(start, Configuration.affine(nudged)))
        assert ok and events == []

    def test_planted_collinear_wall(self):
        # p4 slides from (5,1) to (5,-1), crossing the line p0p1 (y == 0)
        # at t = 1/2; every other triple keeps a fixed orientation.
        frame = [(0, 0), (10, 0), (0, 10), (9, 8)]
        start = Configuration.affine(frame + [(5, 1)])
        end = Configuration.affine(frame + [(5, -1)])
        events = wall_events(LinearPath(start, end))
        assert len(events) == 1
        e = events[0]
        assert e.kind == "collinear"
        assert e.labels == (0, 1, 4)
        assert not e.clustered
        a, b = e.interval
        assert a < Fraction(1, 2) < b
        assert b - a <= Fraction(1, 2**20)

    def test_planted_coconic_wall(self):
        # five static points on a circle of radius 5; the sixth moves from
        # inside (2,-4) to outside (4,-4), meeting the circle at t = 1/2.
        circle = [(5, 0), (4, 3), (0, 5), (-3, 4), (-5, 0)]
        start = Configuration.affine(circle + [(2, -4)])
        end = Configuration.affine(circle + [(4, -4)])
        events = wall_events(LinearPath(start, end))
        assert [e.kind for e in events] == ["coconic"]
        e = events[0]
        assert e.labels == (0, 1, 2, 3, 4, 5)
        a, b = e.interval
        assert a < Fraction(1, 2) < b
        assert not e.clustered

    def test_simultaneous_walls_flagged_clustered(self):
        # p4 passes through the meet of lines p0p1 and p2p3 at t = 1/2, so
        # two collinearity walls share the parameter and must both be
        # flagged as a cluster.
        frame = [(0, 0), (10, 0), (1, 5), (3, -5)]
        start = Configuration.affine(frame + [(2, 3)])
        end = Configuration.affine(frame + [(2, -3)])
        events = wall_events(LinearPath(start, end))
        assert len(events) == 2
        assert {e.labels for e in events} == {(0, 1, 4), (2, 3, 4)}
        assert all(e.kind == "collinear" for e in events)
        assert all(e.clustered for e in events)
        for a, b in (e.interval for e in events):
            assert a < Fraction(1, 2) < b

    def test_events_sorted_by_interval(self):
        start = seed_config("(1,2,2,2)")
        end = seed_config("(0,3,3,1)")
        events = wall_events(LinearPath(start, end))
        assert events == sorted(events, key=lambda e: e.interval)
        assert len(events) >= 1  # distinct classes cannot join event-free

    def test_cross_class_path_not_certified(self):
        path = LinearPath(seed_config("HEX6"), seed_config("TRI6"))
        ok, events = is_q_isotopy(path)
        assert not ok
        assert events


class TestFindQPath:
    def test_identical_endpoints(self):
        c = seed_config("HEX6")
        assert find_q_path(c, c) == [c]

    def test_direct_segment(self):
        start = scaled(HEX, 100)
        end = Configuration.affine([(501, 1)] + [(x * 100, y * 100) for x, y in HEX[1:]])
        found = find_q_path(start, end)
        assert found[0] == start and found[-1] == end
        assert six_class(start) == six_class(end)
        for a, b in zip(found, found[1:]):
            assert wall_events(LinearPath(a, b)) == []

    def test_class_mismatch_rejected(self):
        with pytest.raises(ClassMismatch):
            find_q_path(seed_config("HEX6"), seed_config("BI6"))
        with pytest.raises(ClassMismatch):
            find_q_path(seed_config("HEPT7"), seed_config("(1,6,0,0)"))

    def test_budget_exhaustion(self):
        # same unordered point set, labels rotated one step: same class,
        # but the straight segment crosses walls, so one certify call
        # cannot finish and the unit budget runs out.
        start = seed_config("HEX6")
        end = Configuration.affine(HEX[1:] + HEX[:1])
        assert six_class(start) == six_class(end)
        with pytest.raises(NotFound):
            find_q_path(start, end, budget=1)

    def test_requires_typical_endpoints(self):
        bad = Configuration.affine([(0, 0), (1, 0), (2, 0), (0, 1), (1, 2), (3, 5)])
        with pytest.raises(NotTypical):
            find_q_path(bad, seed_config("HEX6"))


class TestSevenPointPaths:
    def test_nudged_heptagon_certifies(self):
        hept = seed_config("HEPT7")
        pts = [p.coords for p in hept.points]
        moved = [tuple(c * 50 for c in pts[0])] + pts[1:]
        moved[0] = (moved[0][0] + 1, moved[0][1], moved[0][2])
        end = Configuration(moved)
        ok, events = is_q_isotopy(LinearPath(hept, end))
        assert ok and events == []
        assert class_fingerprint(end) == class_fingerprint(hept)
