"""Certified facts of the named constructions."""

import itertools

import pytest

from flatkit.catalog import (
    ENTRIES,
    ag23,
    ag23_power,
    build_ref,
    motzkin,
    random_instance,
    uniform,
)
from flatkit.errors import GenerationError, UsageError
from flatkit.matroid import Matroid
from flatkit.search import find_elementary_flat, find_two_point_line, is_ordinary


def test_ag23_incidence_profile():
    M = Matroid(ag23())
    assert M.rank() == 3
    assert M.is_simple()
    assert len(M.ground) == 9
    lines = M.flats_of_rank(2)
    assert len(lines) == 12
    assert all(len(l.elements) == 3 for l in lines)
    assert find_two_point_line(M) is None


def test_ag23_kelly_sharpness():
    # simple, rank 3, no two-point line: the rank bound cannot drop to 3
    M = Matroid(ag23())
    assert M.is_simple() and M.rank() == 3
    for a, b in itertools.combinations(M.ground, 2):
        assert len(M.closure([a, b]).elements) == 3


def test_uniform_is_uniform():
    for r, n in [(2, 3), (2, 2), (3, 5)]:
        M = Matroid(uniform(r, n))
        assert M.rank() == r
        for sub in itertools.combinations(M.ground, r):
            assert M.rank(sub) == r


def test_uniform_bad_params():
    with pytest.raises(UsageError):
        uniform(3, 2)


def test_motzkin_certificates():
    M = Matroid(motzkin())
    assert M.rank() == 4 and len(M.ground) == 6
    planes = M.flats_of_rank(3)
    assert all(len(p.elements) == 4 for p in planes)
    assert any(is_ordinary(M, p) is not None for p in planes)


def test_ag23_power():
    assert ag23_power(1) == ag23().__class__(
        ag23().conductor, ag23().entries, ag23().labels)
    M = Matroid(ag23_power(2))
    assert M.rank() == 6 and len(M.ground) == 18
    assert find_elementary_flat(M, 3) is None


def test_random_instance_deterministic():
    a = random_instance(4, 8, 4, seed=1)
    b = random_instance(4, 8, 4, seed=1)
    assert a == b
    c = random_instance(4, 8, 4, seed=2)
    assert c != a


def test_random_instance_simple_full_rank():
    for seed in range(5):
        M = Matroid(random_instance(4, 8, 3, seed=seed))
        assert M.rank() == 4 and M.is_simple()


def test_random_instance_param_checks():
    with pytest.raises(UsageError):
        random_instance(5, 4)
    with pytest.raises(UsageError):
        random_instance(2, 4, conductor=7)


def test_random_instance_rejection_limit():
    with pytest.raises(GenerationError):
        # three elements in rank 1 are always parallel, never simple
        random_instance(1, 3, seed=0, max_tries=5)


def test_build_ref():
    assert Matroid(build_ref("ag23")).rank() == 3
    assert Matroid(build_ref("uniform:2,3")).rank() == 2
    assert Matroid(build_ref("random:4,8,4,1")).rank() == 4
    with pytest.raises(UsageError):
        build_ref("nope")
    with pytest.raises(UsageError):
        build_ref("uniform:2")
    with pytest.raises(UsageError):
        build_ref("uniform:a,b")


def test_entry_listing():
    for name in ("ag23", "uniform", "motzkin", "ag23_power", "random"):
        assert name in ENTRIES
