"""Minimal dilation covers of a point set by translates of a simplex.

``min_dilation`` solves, exactly in Fractions when asked,

    minimize lambda  over translates t and scale lambda
    subject to a_i . (x_j - t) <= lambda          (all facets i, points j)

where (a_i) is the centered unit-offset halfspace form of the covering
simplex.  NEGATIVE sign first reflects the simplex through its centroid.
The constraint block for a fixed facet is dominated by the point maximizing
a_i . x_j, so the LP handed to the solver has only d+1 rows; the returned
dual certificate is re-expanded over the full (d+1) * n row set and can be
re-verified against ``dilation_lp`` by plain substitution.

The two covering guarantees for a swap-locally-maximal simplex T follow
from the slab property of its facet functionals:

* negative cover: X fits in a translate of d * (-T), so lambda- <= d;
* positive cover: X fits in the centered (d+2)-dilation of T (no translate
  at all), so lambda+ <= d + 2.
"""
from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import List, Optional, Tuple

from .errors import LPInternalError, NumericalBreakdownError, TheoremViolationError
from .geometry import (
    Point,
    PointSet,
    Simplex,
    centroid,
    dilate_about_center,
    halfspace_form,
    reflect_through_centroid,
    vec_add,
    vec_scale,
)
from .linprog import LinearProgram, LPStatus, solve_lp
from .mvs import (
    DEFAULT_ENUM_CAP,
    LocalMaximalityReport,
    MvsResult,
    mvs_exact,
    mvs_local_search,
    verify_local_maximality,
)
from .scalars import Scalar, ScalarMode, default_tol, infer_mode


class DilationSign(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"


@dataclass
class DilationResult:
    """Minimal covering dilation of a point set by translates of +/-T.

    ``lam`` is the dilation magnitude; the covering body is
    translate + lam * T (POSITIVE) or translate + lam * (-T) (NEGATIVE).
    ``dual`` holds multipliers for the full LP from ``dilation_lp`` in row
    order facet-major (row i * n + j for facet i, point j).
    """

    lam: Scalar
    sign: DilationSign
    translate: Point  # covering body = translate + lam * (+/-T), T untranslated
    status: LPStatus
    dual: Tuple[Scalar, ...]
    lp_translate: Point  # raw LP point: covering-body centroid minus centroid(t)


@dataclass
class SandwichReport:
    ok: bool
    local_maximality: LocalMaximalityReport
    facet_slacks: List[Tuple[Scalar, Scalar]]  # (inner slack at -d, outer slack at d+2)
    slab: List[Tuple[Scalar, Scalar]]  # raw per-facet (min, max) functional values


@dataclass
class CoverReport:
    mvs: MvsResult
    positive: DilationResult
    negative: DilationResult
    d_plus_2_construction: Simplex
    sandwich: SandwichReport
    centered_containment_ok: bool  # X inside (d+2) T with no translate
    bounds_ok: bool  # lambda+ <= d+2 and lambda- <= d


def dilation_lp(t: Simplex, x: PointSet, sign: DilationSign) -> LinearProgram:
    """The full (d+1)*n row LP over variables (t_1..t_d, lambda)."""
    body = t if sign is DilationSign.POSITIVE else reflect_through_centroid(t)
    h = halfspace_form(body)
    d = t.dim
    rows = []
    rhs = []
    for a in h.normals:
        for p in x.points:
            rows.append(tuple(-c for c in a) + (-1,))
            rhs.append(-sum(c * (pv - cv) for c, pv, cv in zip(a, p, h.center)))
    objective = (0,) * d + (1,)
    return LinearProgram(d + 1, objective, tuple(rows), tuple(rhs))


def min_dilation(
    t: Simplex,
    x: PointSet,
    sign: DilationSign,
    mode: Optional[ScalarMode] = None,
) -> DilationResult:
    """Minimal lambda and translate covering x by a dilate of +/-t."""
    if mode is None:
        mode = infer_mode(
            [v for p in x.points for v in p] + [v for p in t.vertices for v in p]
        )
    d = t.dim
    n = len(x)
    body = t if sign is DilationSign.POSITIVE else reflect_through_centroid(t)
    h = halfspace_form(body)

    # Per facet only the extreme point can bind: the t and lambda terms are
    # shared by the whole block, so the LP shrinks to d+1 rows.
    maxima: List[Scalar] = []
    argmax: List[int] = []
    for a in h.normals:
        best = None
        best_j = 0
        for j, p in enumerate(x.points):
            val = sum(c * (pv - cv) for c, pv, cv in zip(a, p, h.center))
            if best is None or val > best:
                best, best_j = val, j
        maxima.append(best)
        argmax.append(best_j)

    reduced = LinearProgram(
        d + 1,
        (0,) * d + (1,),
        tuple(tuple(-c for c in a) + (-1,) for a in h.normals),
        tuple(-m for m in maxima),
    )
    sol = solve_lp(reduced, mode)
    if sol.status is LPStatus.NUMERICAL_BREAKDOWN:
        raise NumericalBreakdownError(
            "dilation LP broke down in float mode; rerun in exact mode"
        )
    if sol.status is not LPStatus.OPTIMAL:
        raise LPInternalError(
            f"dilation LP returned {sol.status.value}; it is feasible and bounded by construction"
        )
    lam = sol.value
    # LP variable: offset of the covering body's centroid from centroid(t),
    # so the covering body is (c + z) + lam * (body - c).
    t_body = sol.z[:d]

    zero: Scalar = Fraction(0) if mode is ScalarMode.EXACT else 0.0
    dual = [zero] * ((d + 1) * n)
    for i in range(d + 1):
        dual[i * n + argmax[i]] = sol.dual[i]

    # (c + z) + lam (T - c) = (z + (1 - lam) c) + lam T, and with the
    # reflected body (c + z) - lam (T - c) = (z + (1 + lam) c) + lam (-T).
    c = centroid(t)
    offset = vec_scale(c, 1 - lam if sign is DilationSign.POSITIVE else 1 + lam)
    translate = vec_add(t_body, offset)

    tol = default_tol(mode)
    for p in x.points:
        for a in h.normals:
            val = sum(
                av * (pv - cv - tv)
                for av, pv, cv, tv in zip(a, p, h.center, t_body)
            )
            if val > lam + tol:
                raise LPInternalError("optimal dilation fails to contain its own input")
    return DilationResult(
        lam=lam,
        sign=sign,
        translate=tuple(translate),
        status=sol.status,
        dual=tuple(dual),
        lp_translate=tuple(t_body),
    )


def _auto_mvs(x: PointSet, enum_cap: int, seed: int) -> MvsResult:
    if comb(len(x), x.dim + 1) <= enum_cap:
        return mvs_exact(x, enum_cap=enum_cap)
    return mvs_local_search(x, seed=seed)


def john_negative_cover(
    x: PointSet,
    mode: Optional[ScalarMode] = None,
    *,
    enum_cap: int = DEFAULT_ENUM_CAP,
    seed: int = 0,
) -> DilationResult:
    """Cover x by a translate of lambda * (-T), T a maximum-volume simplex.

    The dilation factor always satisfies lambda <= d.
    """
    if mode is None:
        mode = infer_mode(v for p in x.points for v in p)
    result = _john_cover_with_escalation(x, mode, enum_cap, seed)[1]
    return result


def john_positive_cover(
    x: PointSet,
    mode: Optional[ScalarMode] = None,
    *,
    enum_cap: int = DEFAULT_ENUM_CAP,
    seed: int = 0,
) -> CoverReport:
    """Full covering report: constructive (d+2)-dilation plus both LP optima."""
    if mode is None:
        mode = infer_mode(v for p in x.points for v in p)
    report, _ = _john_cover_with_escalation(x, mode, enum_cap, seed, want_report=True)
    return report


def _john_cover_with_escalation(
    x: PointSet,
    mode: ScalarMode,
    enum_cap: int,
    seed: int,
    want_report: bool = False,
) -> Tuple[Optional[CoverReport], DilationResult]:
    d = x.dim
    tol = default_tol(mode)
    m = _auto_mvs(x, enum_cap, seed)
    for attempt in (0, 1):
        t = m.simplex
        sandwich = verify_sandwich(t, x, tol=tol)
        centered_ok = all(hi <= d + 2 + tol for _, hi in sandwich.slab)
        negative = min_dilation(t, x, DilationSign.NEGATIVE, mode)
        positive = min_dilation(t, x, DilationSign.POSITIVE, mode)
        bounds_ok = negative.lam <= d + tol and positive.lam <= d + 2 + tol
        if sandwich.ok and centered_ok and bounds_ok:
            break
        if m.method == "exact":
            raise TheoremViolationError(
                "covering guarantee failed for an exactly maximal simplex: "
                f"sandwich={sandwich.ok} centered={centered_ok} bounds={bounds_ok}"
            )
        if attempt == 0 and comb(len(x), d + 1) <= enum_cap:
            warnings.warn(
                "local-search simplex failed a covering check; escalating to exact MVS",
                RuntimeWarning,
                stacklevel=2,
            )
            m = mvs_exact(x, enum_cap=enum_cap)
            continue
        break
    report = None
    if want_report:
        report = CoverReport(
            mvs=m,
            positive=positive,
            negative=negative,
            d_plus_2_construction=dilate_about_center(m.simplex, d + 2),
            sandwich=sandwich,
            centered_containment_ok=centered_ok,
            bounds_ok=bounds_ok,
        )
    return report, negative


def verify_sandwich(t: Simplex, x: PointSet, tol: Scalar = 0) -> SandwichReport:
    """Slab slacks of x against the inner (-d) and outer (d+2) bounds of t.

    When t is not swap-locally maximal the report carries the offending
    swap instead of asserting anything about the covering chain.
    """
    d = t.dim
    lm = verify_local_maximality(t, x, tol=tol)
    slacks = [(lo - (-d), (d + 2) - hi) for lo, hi in lm.slab]
    return SandwichReport(
        ok=lm.ok, local_maximality=lm, facet_slacks=slacks, slab=lm.slab
    )
