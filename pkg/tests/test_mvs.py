import itertools
import random
from fractions import Fraction

import numpy as np
import pytest

from helpers import brute_mvs, float_points, rational_points
from simplexcover.errors import DegeneratePointSetError, EnumerationCapError
from simplexcover.geometry import (
    PointSet,
    Simplex,
    halfspace_form,
    make_simplex,
    reflect_vertex,
    simplex_volume,
    slab_bounds,
)
from simplexcover.linalg import det
from simplexcover.mvs import (
    _batch_dets,
    _int64_safe,
    mvs_exact,
    mvs_local_search,
    verify_local_maximality,
)

F = Fraction


def test_square_corners_volume_and_tiebreak():
    # all four triangles have volume 1/2; lex-smallest index tuple wins
    x = PointSet(2, ((F(0), F(0)), (F(1), F(0)), (F(0), F(1)), (F(1), F(1))))
    res = mvs_exact(x)
    assert res.volume == F(1, 2)
    assert res.simplex.vertex_indices == (0, 1, 2)
    assert res.method == "exact"


@pytest.mark.parametrize("d", [2, 3, 4, 5, 6])
def test_batched_dets_match_plain_determinants(d):
    """The split-Laplace minor expansion must reproduce det exactly."""
    rng = np.random.default_rng(d)
    D = rng.integers(-9, 10, size=(40, d, d)).astype(np.int64)
    got = _batch_dets(D)
    for k in range(D.shape[0]):
        expect = det([[int(v) for v in row] for row in D[k]])
        assert int(got[k]) == expect


def test_int64_guard_thresholds():
    assert _int64_safe(2, 64)
    assert _int64_safe(5, 128)
    assert not _int64_safe(6, 10**9)


def test_exact_matches_brute_oracle():
    for trial in range(25):
        d = 2 + trial % 2
        n = 6 + trial % 5
        x = rational_points(n, d, seed=900 + trial)
        res = mvs_exact(x)
        vol, idx = brute_mvs(x)
        assert res.volume == vol
        assert simplex_volume(res.simplex) == vol
        # the lex tie-break: no earlier subset attains the same volume
        for cand in itertools.combinations(range(n), d + 1):
            if cand >= res.simplex.vertex_indices:
                break
            s = Simplex(d, tuple(x.points[i] for i in cand))
            assert simplex_volume(s) < vol


def test_huge_coordinates_fall_back_to_bigint_path():
    # numerators around 10^14 blow the int64 minor bound for d = 3
    rng = random.Random(4)
    pts = tuple(
        tuple(F(rng.randint(-10**14, 10**14)) for _ in range(3)) for _ in range(8)
    )
    x = PointSet(3, pts)
    res = mvs_exact(x)
    vol, idx = brute_mvs(x)
    assert res.volume == vol and res.simplex.vertex_indices == idx


def test_float_mode_matches_brute():
    x = float_points(10, 2, seed=31)
    res = mvs_exact(x)
    best = max(
        abs(det([
            [x.points[j][k] - x.points[i0][k] for k in range(2)]
            for j in (i1, i2)
        ])) / 2
        for i0, i1, i2 in itertools.combinations(range(10), 3)
    )
    assert res.volume == pytest.approx(best, rel=1e-12)


def test_enumeration_cap():
    x = rational_points(40, 3, seed=1)
    with pytest.raises(EnumerationCapError):
        mvs_exact(x, enum_cap=1000)


def test_degenerate_point_set():
    line = PointSet(2, tuple((F(i), F(3 * i)) for i in range(6)))
    with pytest.raises(DegeneratePointSetError):
        mvs_exact(line)
    with pytest.raises(DegeneratePointSetError):
        mvs_exact(PointSet(2, ((F(0), F(0)), (F(1), F(1)))))


def test_reflected_vertex_tie():
    """Appending v_hat_0 creates a second optimum; slab max hits d + 2."""
    t = make_simplex(
        [(F(1), F(1), F(1)), (F(1), F(-1), F(-1)), (F(-1), F(1), F(-1)),
         (F(-1), F(-1), F(1))]
    )
    vh = reflect_vertex(t, 0)
    x = PointSet(3, t.vertices + (vh,))
    res = mvs_exact(x)
    # both (0,1,2,3) and (1,2,3,4) attain the max; lex order keeps the original
    assert res.simplex.vertex_indices == (0, 1, 2, 3)
    alt = Simplex(3, tuple(x.points[i] for i in (1, 2, 3, 4)))
    assert simplex_volume(alt) == res.volume
    hi = max(h for _, h in slab_bounds(res.simplex, x))
    assert hi == 5  # exactly d + 2


def test_local_search_is_swap_locally_maximal():
    for seed in range(30):
        x = rational_points(30, 2, seed=2000 + seed)
        res = mvs_local_search(x, seed=seed)
        assert res.method == "local-search"
        rep = verify_local_maximality(res.simplex, x)
        assert rep.ok, f"seed {seed}: facet {rep.worst_facet} point {rep.worst_point}"


def test_local_search_volume_quality():
    # Swap-local optima carry no approximation guarantee, but on this
    # family they stay close; the floor and the bulk are frozen behavior.
    ratios = []
    for seed in range(40):
        x = rational_points(30, 2, seed=5000 + seed)
        local = mvs_local_search(x, seed=seed)
        exact = mvs_exact(x)
        ratio = local.volume / exact.volume
        assert ratio <= 1
        ratios.append(ratio)
    assert min(ratios) >= F(4, 5)
    assert sum(1 for r in ratios if r >= F(19, 20)) >= 35


def test_local_search_trace_is_strictly_increasing():
    x = rational_points(25, 3, seed=77)
    trace = []
    res = mvs_local_search(x, seed=1, _trace=trace)
    assert all(b > a for a, b in zip(trace, trace[1:]))
    assert trace[-1] == res.volume
    assert res.swap_count == len(trace) - 1


def test_local_search_float_mode():
    x = float_points(25, 2, seed=8)
    res = mvs_local_search(x, seed=0)
    rep = verify_local_maximality(res.simplex, x, tol=1e-9)
    assert rep.ok


def test_scale_equivariance():
    x = rational_points(12, 2, seed=55)
    scaled = PointSet(2, tuple(tuple(7 * c for c in p) for p in x.points))
    a = mvs_exact(x)
    b = mvs_exact(scaled)
    assert a.simplex.vertex_indices == b.simplex.vertex_indices
    assert b.volume == 49 * a.volume


def test_translation_equivariance():
    x = rational_points(12, 3, seed=56)
    shift = (F(3), F(-5), F(11, 2))
    moved = PointSet(3, tuple(tuple(c + s for c, s in zip(p, shift)) for p in x.points))
    a = mvs_exact(x)
    b = mvs_exact(moved)
    assert a.simplex.vertex_indices == b.simplex.vertex_indices
    assert a.volume == b.volume


def test_local_maximality_counterexample_reported():
    # a deliberately small inner triangle inside a big square
    x = PointSet(
        2,
        (
            (F(0), F(0)), (F(1, 8), F(0)), (F(0), F(1, 8)),
            (F(4), F(0)), (F(0), F(4)), (F(4), F(4)),
        ),
    )
    t = Simplex(2, (x.points[0], x.points[1], x.points[2]), (0, 1, 2))
    rep = verify_local_maximality(t, x)
    assert not rep.ok
    assert rep.excess > 0
    assert rep.worst_point in (3, 4, 5)
    h = halfspace_form(t)
    assert h.value(rep.worst_facet, x.points[rep.worst_point]) > t.dim + 2
