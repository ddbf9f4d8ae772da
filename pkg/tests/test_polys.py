import random
from fractions import Fraction

import pytest

from planeconfig import polys


def test_normalize_strips_trailing_zeros():
    assert polys.normalize([1, 2, 0, 0]) == [1, 2]
    assert polys.normalize([0, 0]) == []
    assert polys.normalize([]) == []


def test_ring_identities():
    p = [1, 1]   # 1 + t
    q = [1, -1]  # 1 - t
    assert polys.mul(p, q) == [1, 0, -1]
    assert polys.add(p, q) == [2]
    assert polys.sub(p, p) == []
    assert polys.mul(p, []) == []
    assert polys.scale([2, 4], 3) == [6, 12]


def test_derivative():
    assert polys.derivative([5, 3, 0, 7]) == [3, 0, 21]
    assert polys.derivative([4]) == []


def test_eval_and_sign_agree():
    rng = random.Random(0)
    for _ in range(200):
        p = [rng.randint(-9, 9) for _ in range(rng.randint(1, 6))]
        t = Fraction(rng.randint(-20, 20), rng.randint(1, 20))
        v = polys.eval_fraction(p, t)
        s = (v > 0) - (v < 0)
        assert polys.sign_at(p, t) == s


def test_sturm_counts_distinct_roots():
    # (3t-1)(3t-2)(5t-4): roots 1/3, 2/3, 4/5
    p = polys.mul(polys.mul([-1, 3], [-2, 3]), [-4, 5])
    chain = polys.sturm_chain(p)
    assert polys.count_roots(chain, Fraction(0), Fraction(1)) == 3
    assert polys.count_roots(chain, Fraction(0), Fraction(1, 2)) == 1
    assert polys.count_roots(chain, Fraction(1, 2), Fraction(1)) == 2


def test_sturm_handles_multiple_roots():
    # (2t-1)^2 (5t-1): two distinct roots in (0,1)
    p = polys.mul(polys.mul([-1, 2], [-1, 2]), [-1, 5])
    chain = polys.sturm_chain(p)
    assert polys.count_roots(chain, Fraction(0), Fraction(1)) == 2


def test_isolate_roots_basic():
    p = polys.mul(polys.mul([-1, 3], [-2, 3]), [-4, 5])
    roots = [Fraction(1, 3), Fraction(2, 3), Fraction(4, 5)]
    intervals = polys.isolate_roots(p)
    assert len(intervals) == 3
    for (a, b), r in zip(intervals, roots):
        assert a < r < b
        assert b - a <= Fraction(1, 2**20)
    # disjoint and sorted
    for (_, b), (a2, _) in zip(intervals, intervals[1:]):
        assert b <= a2


def test_isolate_roots_near_dyadic_midpoints():
    # root exactly at 1/2 forces the split-point nudge
    p = polys.mul([-1, 2], [-3, 4])  # roots 1/2 and 3/4
    intervals = polys.isolate_roots(p)
    assert len(intervals) == 2
    a, b = intervals[0]
    assert a < Fraction(1, 2) < b


def test_isolate_roots_rejects_bad_input():
    with pytest.raises(ValueError):
        polys.isolate_roots([])
    with pytest.raises(ValueError):
        polys.isolate_roots([0, 1])   # p(0) == 0
    with pytest.raises(ValueError):
        polys.isolate_roots([-1, 1])  # p(1) == 0


def test_isolate_roots_empty_when_no_roots():
    assert polys.isolate_roots([1, 0, 1]) == []


def test_interpolate_recovers_integer_polynomial():
    rng = random.Random(1)
    for _ in range(30):
        p = [rng.randint(-50, 50) for _ in range(rng.randint(1, 13))]
        p = polys.normalize(p)
        values = [int(polys.eval_fraction(p, Fraction(t))) for t in range(13)]
        assert polys.interpolate_integer(values) == p


def test_interpolate_constant():
    assert polys.interpolate_integer([7] * 13) == [7]
    assert polys.interpolate_integer([0] * 13) == []
