import dataclasses

import pytest

from planeconfig import NotFound, SeedCorrupt, builtin_seeds, census, seed_by_name, verify_seeds
from planeconfig.atlas import Seed, seed_slug, verify_seed


def test_builtin_inventory():
    seeds = builtin_seeds()
    assert len(seeds) == 18
    names = [s.name for s in seeds]
    assert len(set(names)) == 18
    assert sum(1 for s in seeds if len(s.points) == 6) == 4
    assert sum(1 for s in seeds if len(s.points) == 7) == 14


def test_verify_seeds_passes():
    assert verify_seeds() == 18


def test_seed_lookup_by_name_and_slug():
    s = seed_by_name("HEPT7")
    assert seed_by_name("hept7") is s
    split = seed_by_name("(2,2,3,0)₂")
    assert seed_by_name("2230-2") is split


def test_seed_lookup_missing():
    with pytest.raises(NotFound):
        seed_by_name("OCT8")


def test_slug_examples():
    assert seed_slug("HEPT7") == "hept7"
    assert seed_slug("(3,4,0,0)₁") == "3400-1"
    assert seed_slug("(1,2,2,2)") == "1222"
    assert seed_slug("2230-3") == "2230-3"


def test_tampered_seed_detected():
    s = seed_by_name("HEX6")
    other = seed_by_name("ICO6")
    with pytest.raises(SeedCorrupt):
        verify_seed(dataclasses.replace(s, points=other.points))
    with pytest.raises(SeedCorrupt):
        verify_seed(dataclasses.replace(s, fingerprint="6|other"))
    with pytest.raises(SeedCorrupt):
        verify_seed(dataclasses.replace(s, class_name="icosahedral"))


def test_tampered_seed_collinear_detected():
    s = seed_by_name("HEPT7")
    # put point 2 on the line through points 0 and 1
    collinear = s.points[:2] + (tuple(a + b for a, b in zip(s.points[0], s.points[1])),) + s.points[3:]
    with pytest.raises(SeedCorrupt):
        verify_seed(dataclasses.replace(s, points=collinear))


def test_seed_points_are_primitive_triples():
    from math import gcd

    for s in builtin_seeds():
        for t in s.points:
            assert len(t) == 3
            g = 0
            for c in t:
                g = gcd(g, c)
            assert g == 1


class TestCensus:
    def test_empty(self):
        rep = census(0)
        assert rep.samples == 0 and rep.typical == 0 and rep.degenerate == 0
        assert rep.class_counts == {}
        assert len(rep.unseen) == 14

    def test_deterministic(self):
        a = census(40, coordinate_bound=30, random_seed=5)
        b = census(40, coordinate_bound=30, random_seed=5)
        assert a == b

    def test_counts_are_consistent(self):
        rep = census(60, coordinate_bound=25, random_seed=1)
        assert rep.typical + rep.degenerate == rep.samples == 60
        assert sum(rep.class_counts.values()) == rep.typical
        assert set(rep.unseen).isdisjoint(rep.class_counts)
        assert len(rep.unseen) + len(rep.class_counts) == 14

    def test_seed_changes_outcome(self):
        assert census(25, random_seed=0) != census(25, random_seed=1)

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            census(-1)
        with pytest.raises(ValueError):
            census(5, coordinate_bound=0)

    def test_tiny_grid_mostly_degenerate(self):
        # bound 1 gives only 9 grid points for 7 choices; collinear triples
        # are unavoidable, so every draw must be rejected, never mislabeled
        rep = census(10, coordinate_bound=1, random_seed=3)
        assert rep.degenerate == 10 and rep.typical == 0


def test_seed_provenance_nonempty():
    for s in builtin_seeds():
        assert isinstance(s, Seed)
        assert s.provenance.strip()
