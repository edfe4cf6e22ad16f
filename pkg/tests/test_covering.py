"""Minimal-dilation covers and the two-sided covering guarantee."""
import random
from fractions import Fraction

import pytest

from helpers import point_in_simplex, rational_points
from simplexcover import (
    CoverReport,
    DilationResult,
    DilationSign,
    LPSolution,
    LPStatus,
    PointSet,
    ScalarMode,
    Simplex,
    TheoremViolationError,
    check_certificate,
    contains,
    dilation_lp,
    halfspace_form,
    john_negative_cover,
    john_positive_cover,
    make_simplex,
    min_dilation,
    mvs_exact,
    reflect_vertex,
    sample_body,
    simplex_volume,
    verify_sandwich,
)
from simplexcover.covering import _john_cover_with_escalation  # noqa: F401
from simplexcover.mvs import MvsResult

F = Fraction

RIGHT = make_simplex([(F(0), F(0)), (F(1), F(0)), (F(0), F(1))])
TETRA = make_simplex(
    [
        (F(1), F(1), F(1)),
        (F(1), F(-1), F(-1)),
        (F(-1), F(1), F(-1)),
        (F(-1), F(-1), F(1)),
    ]
)


def covering_body(res: DilationResult, t: Simplex) -> Simplex:
    """Materialize translate + lam * (+/-T) as an explicit simplex."""
    s = 1 if res.sign is DilationSign.POSITIVE else -1
    return make_simplex(
        [
            tuple(tv + res.lam * s * v for tv, v in zip(res.translate, vert))
            for vert in t.vertices
        ]
    )


def assert_covers(res: DilationResult, t: Simplex, x: PointSet) -> None:
    body = covering_body(res, t)
    for p in x.points:
        assert point_in_simplex(body, p)


# ---------------------------------------------------------------------------
# hand-checked instances
# ---------------------------------------------------------------------------

def test_square_corners_both_signs():
    corners = PointSet(2, ((F(0), F(0)), (F(1), F(0)), (F(1), F(1)), (F(0), F(1))))
    t = mvs_exact(corners).simplex
    # lex tie-break among the four half-square triangles
    assert t.vertex_indices == (0, 1, 2)

    pos = min_dilation(t, corners, DilationSign.POSITIVE)
    neg = min_dilation(t, corners, DilationSign.NEGATIVE)
    assert pos.lam == 2 and pos.translate == (F(-1), F(0))
    assert neg.lam == 2 and neg.translate == (F(2), F(1))
    assert pos.status is LPStatus.OPTIMAL and neg.status is LPStatus.OPTIMAL
    assert_covers(pos, t, corners)
    assert_covers(neg, t, corners)


@pytest.mark.parametrize("t", [RIGHT, TETRA], ids=["d2", "d3"])
def test_own_vertices_positive_one_negative_d(t):
    # Covering conv(T) by a positive translate needs lam = 1; by a negative
    # translate exactly lam = d, the tight case of the negative bound.
    x = PointSet(t.dim, t.vertices)
    assert min_dilation(t, x, DilationSign.POSITIVE).lam == 1
    assert min_dilation(t, x, DilationSign.NEGATIVE).lam == t.dim


def test_unit_interval_d1():
    t = make_simplex([(F(0),), (F(1),)])
    x = PointSet(1, ((F(0),), (F(1),)))
    for sign in DilationSign:
        res = min_dilation(t, x, sign)
        assert res.lam == 1
        assert_covers(res, t, x)


def test_reflected_vertex_needs_positive_two():
    # Appending the facet reflection of one vertex forces lam+ = 2 for the
    # regular tetrahedron: the only dual combination averaging the facet
    # normals to zero is uniform, giving (d+2 + d) / (d+1) = 2.
    vhat = reflect_vertex(TETRA, 0)
    x = PointSet(3, TETRA.vertices + (vhat,))
    res = min_dilation(TETRA, x, DilationSign.POSITIVE)
    assert res.lam == 2
    assert_covers(res, TETRA, x)


def test_dilation_lp_shape():
    x = PointSet(2, ((F(0), F(0)), (F(2), F(1)), (F(1), F(3))))
    lp = dilation_lp(RIGHT, x, DilationSign.POSITIVE)
    assert lp.num_vars == 3
    assert len(lp.rows) == 3 * 3
    assert lp.objective == (0, 0, 1)
    assert all(r[-1] == -1 for r in lp.rows)


# ---------------------------------------------------------------------------
# randomized semantic checks
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("sign", list(DilationSign), ids=lambda s: s.value)
def test_random_instances_cover_and_certify(sign):
    for seed in range(12):
        d = 2 + seed % 3
        x = PointSet(d, rational_points(d + 5, d, seed=seed))
        t = mvs_exact(x).simplex
        res = min_dilation(t, x, sign)
        assert_covers(res, t, x)
        # Dual from the reduced LP must certify the full one row for row.
        full = dilation_lp(t, x, sign)
        sol = LPSolution(
            status=LPStatus.OPTIMAL,
            z=res.lp_translate + (res.lam,),
            value=res.lam,
            dual=res.dual,
        )
        assert check_certificate(full, sol, tol=0)


def test_optimum_is_a_true_minimum():
    # Shrinking lam below the optimum must lose at least one point.
    for seed in range(6):
        x = PointSet(2, rational_points(8, 2, seed=40 + seed))
        t = mvs_exact(x).simplex
        for sign in DilationSign:
            res = min_dilation(t, x, sign)
            shrunk = DilationResult(
                lam=res.lam * F(99, 100),
                sign=sign,
                translate=res.translate,
                status=res.status,
                dual=res.dual,
                lp_translate=res.lp_translate,
            )
            body = covering_body(shrunk, t)
            assert not all(point_in_simplex(body, p) for p in x.points)


def test_translation_equivariance():
    shift = (F(7, 3), F(-2, 5))
    x = PointSet(2, rational_points(9, 2, seed=77))
    t = mvs_exact(x).simplex
    moved_x = PointSet(2, tuple(tuple(v + s for v, s in zip(p, shift)) for p in x.points))
    moved_t = make_simplex([tuple(v + s for v, s in zip(p, shift)) for p in t.vertices])
    for sign in DilationSign:
        res = min_dilation(t, x, sign)
        moved = min_dilation(moved_t, moved_x, sign)
        assert moved.lam == res.lam
        # covering body shifts with the data: translate picks up (1 -+ lam) s
        k = 1 - res.lam if sign is DilationSign.POSITIVE else 1 + res.lam
        assert moved.translate == tuple(tv + k * s for tv, s in zip(res.translate, shift))


def test_scale_equivariance():
    k = F(7, 2)
    x = PointSet(3, rational_points(10, 3, seed=5))
    t = mvs_exact(x).simplex
    big_x = PointSet(3, tuple(tuple(k * v for v in p) for p in x.points))
    big_t = make_simplex([tuple(k * v for v in p) for p in t.vertices])
    for sign in DilationSign:
        assert min_dilation(big_t, big_x, sign).lam == min_dilation(t, x, sign).lam


# ---------------------------------------------------------------------------
# sandwich reports
# ---------------------------------------------------------------------------

def test_sandwich_slacks_on_own_vertices():
    for t in (RIGHT, TETRA):
        d = t.dim
        rep = verify_sandwich(t, PointSet(d, t.vertices))
        assert rep.ok
        assert rep.slab == [(-d, 1)] * (d + 1)
        assert rep.facet_slacks == [(0, d + 1)] * (d + 1)


def test_sandwich_flags_non_maximal_simplex():
    small = make_simplex([(F(0), F(0)), (F(1, 8), F(0)), (F(0), F(1, 8))])
    x = PointSet(2, small.vertices + ((F(5), F(5)),))
    rep = verify_sandwich(small, x)
    assert not rep.ok
    assert rep.local_maximality.worst_facet is not None
    assert rep.local_maximality.excess > 0
    assert min(outer for _, outer in rep.facet_slacks) < 0


# ---------------------------------------------------------------------------
# the covering guarantee end to end
# ---------------------------------------------------------------------------

def contains_all(body: Simplex, x: PointSet, tol=0) -> bool:
    h = halfspace_form(body)
    return all(contains(h, p, tol=tol) for p in x.points)


def test_john_cover_exact_instances():
    for seed in range(8):
        d = 2 + seed % 3
        x = PointSet(d, rational_points(d + 6, d, seed=100 + seed))
        rep = john_positive_cover(x)
        assert isinstance(rep, CoverReport)
        assert rep.sandwich.ok and rep.centered_containment_ok and rep.bounds_ok
        assert rep.negative.lam <= d
        assert rep.positive.lam <= d + 2
        # the constructive cover: centered (d+2)-dilation, no translate
        cons = rep.d_plus_2_construction
        assert simplex_volume(cons) == (d + 2) ** d * rep.mvs.volume
        assert contains_all(cons, x)
        assert_covers(rep.negative, rep.mvs.simplex, x)


def test_john_negative_cover_shortcut():
    x = PointSet(2, rational_points(9, 2, seed=3))
    res = john_negative_cover(x)
    assert res.sign is DilationSign.NEGATIVE
    assert res.lam <= 2


def test_john_cover_float_mode():
    for body, seed in (("disk", 1), ("annulus", 2), ("square", 3)):
        x = sample_body(body, 12, 2, seed=seed, mode=ScalarMode.FLOAT)
        rep = john_positive_cover(x, mode=ScalarMode.FLOAT)
        assert rep.sandwich.ok and rep.centered_containment_ok and rep.bounds_ok
        assert rep.negative.lam <= 2 + 1e-9
        assert rep.positive.lam <= 4 + 1e-9


def test_escalation_from_bad_local_simplex(monkeypatch):
    import simplexcover.covering as covering

    corners = PointSet(2, ((F(0), F(0)), (F(1), F(0)), (F(1), F(1)), (F(0), F(1))))
    small = make_simplex([(F(0), F(0)), (F(1, 4), F(0)), (F(0), F(1, 4))])
    bad = MvsResult(simplex=small, volume=simplex_volume(small), method="local-search")
    monkeypatch.setattr(covering, "_auto_mvs", lambda x, cap, seed: bad)
    with pytest.warns(RuntimeWarning, match="escalating to exact"):
        rep = john_positive_cover(corners)
    assert rep.mvs.method == "exact"
    assert rep.sandwich.ok and rep.bounds_ok


def test_exactly_maximal_failure_is_a_theorem_violation(monkeypatch):
    # A covering failure for a certified-exact maximum cannot be escalated
    # away; it has to surface as a theorem violation.
    import simplexcover.covering as covering

    corners = PointSet(2, ((F(0), F(0)), (F(1), F(0)), (F(1), F(1)), (F(0), F(1))))
    small = make_simplex([(F(0), F(0)), (F(1, 4), F(0)), (F(0), F(1, 4))])
    bad = MvsResult(simplex=small, volume=simplex_volume(small), method="exact")
    monkeypatch.setattr(covering, "_auto_mvs", lambda x, cap, seed: bad)
    with pytest.raises(TheoremViolationError):
        john_positive_cover(corners)


def test_boundary_point_on_outer_shell():
    # A point sitting exactly on the d+2 shell keeps the guarantee tight:
    # centered containment holds with zero slack.
    vhat = reflect_vertex(RIGHT, 0)
    x = PointSet(2, RIGHT.vertices + (vhat,))
    rep = verify_sandwich(RIGHT, x)
    assert rep.ok
    assert max(hi for _, hi in rep.slab) == 4
    assert min(outer for _, outer in rep.facet_slacks) == 0
    res = min_dilation(RIGHT, x, DilationSign.POSITIVE)
    assert res.lam <= 4
    assert_covers(res, RIGHT, x)


def test_random_float_matches_exact():
    rng = random.Random(9)
    for _ in range(6):
        pts = rational_points(8, 2, seed=rng.randrange(10**6))
        x = PointSet(2, pts)
        xf = PointSet(2, tuple(tuple(float(v) for v in p) for p in pts))
        t = mvs_exact(x).simplex
        tf = make_simplex([tuple(float(v) for v in p) for p in t.vertices])
        for sign in DilationSign:
            exact = min_dilation(t, x, sign, mode=ScalarMode.EXACT)
            approx = min_dilation(tf, xf, sign, mode=ScalarMode.FLOAT)
            assert approx.lam == pytest.approx(float(exact.lam), abs=1e-9)
