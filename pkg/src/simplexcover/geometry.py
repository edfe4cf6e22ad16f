"""Simplices, halfspace forms, and the slab computations built on them.

Conventions used throughout:

* A point is a plain tuple of scalars (Fraction/int in exact mode, float
  otherwise).  All operations preserve the scalar family of their inputs.
* The halfspace form of a d-simplex is *centered*: the centroid sits at the
  origin of the local frame and every facet offset is normalized to 1, so

      x in S  <=>  a_i . (x - center) <= 1   for all d+1 facets i.

  Facet i is the one opposite vertex i, hence a_i . (v_i - center) = -d.
* ``dilate_about_center(S, lam)`` scales about the centroid; lam < 0 gives
  the point-reflected copy scaled by |lam|.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import List, Optional, Sequence, Tuple, Union

from . import linalg
from .errors import (
    DegeneratePointSetError,
    DegenerateSimplexError,
    DimensionMismatchError,
    SingularMatrixError,
)
from .scalars import Scalar

Point = Tuple[Scalar, ...]


def vec_sub(a: Sequence[Scalar], b: Sequence[Scalar]) -> Point:
    return tuple(x - y for x, y in zip(a, b))


def vec_add(a: Sequence[Scalar], b: Sequence[Scalar]) -> Point:
    return tuple(x + y for x, y in zip(a, b))


def vec_scale(a: Sequence[Scalar], s: Scalar) -> Point:
    return tuple(s * x for x in a)


def dot(a: Sequence[Scalar], b: Sequence[Scalar]) -> Scalar:
    return sum(x * y for x, y in zip(a, b))


@dataclass(frozen=True)
class PointSet:
    """A finite list of points in a fixed ambient dimension."""

    dim: int
    points: Tuple[Point, ...]

    def __init__(self, dim: int, points: Sequence[Sequence[Scalar]]):
        if dim < 1:
            raise DimensionMismatchError(f"dimension must be >= 1, got {dim}")
        pts = tuple(tuple(p) for p in points)
        if not pts:
            raise ValueError("a PointSet needs at least one point")
        for k, p in enumerate(pts):
            if len(p) != dim:
                raise DimensionMismatchError(
                    f"point {k} has {len(p)} coordinates, expected {dim}"
                )
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


@dataclass(frozen=True)
class Simplex:
    """d+1 vertices spanning (possibly degenerately) R^d.

    ``vertex_indices`` records, when known, which members of an originating
    PointSet the vertices are.  Use ``make_simplex`` for the validated path;
    the raw constructor admits degenerate vertex lists so their volume (zero)
    can still be queried.
    """

    dim: int
    vertices: Tuple[Point, ...]
    vertex_indices: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if self.dim < 1:
            raise DimensionMismatchError(f"dimension must be >= 1, got {self.dim}")
        verts = tuple(tuple(v) for v in self.vertices)
        if len(verts) != self.dim + 1:
            raise DimensionMismatchError(
                f"a {self.dim}-simplex needs {self.dim + 1} vertices, got {len(verts)}"
            )
        for k, v in enumerate(verts):
            if len(v) != self.dim:
                raise DimensionMismatchError(
                    f"vertex {k} has {len(v)} coordinates, expected {self.dim}"
                )
        object.__setattr__(self, "vertices", verts)
        if self.vertex_indices is not None:
            idx = tuple(int(i) for i in self.vertex_indices)
            if len(idx) != self.dim + 1:
                raise DimensionMismatchError("vertex_indices length must be dim + 1")
            object.__setattr__(self, "vertex_indices", idx)


def make_simplex(
    vertices: Sequence[Sequence[Scalar]],
    vertex_indices: Optional[Sequence[int]] = None,
) -> Simplex:
    """Validated constructor: rejects affinely dependent vertex lists."""
    dim = len(vertices[0]) if vertices else 0
    s = Simplex(dim, tuple(tuple(v) for v in vertices),
                tuple(vertex_indices) if vertex_indices is not None else None)
    if simplex_volume(s) == 0:
        raise DegenerateSimplexError("vertices are affinely dependent (volume 0)")
    return s


def simplex_volume(s: Simplex) -> Scalar:
    """Unsigned d-volume, |det(v_1-v_0, ..., v_d-v_0)| / d!.

    Exact inputs give an exact Fraction; degenerate vertex lists give 0.
    """
    d = s.dim
    rows = [vec_sub(v, s.vertices[0]) for v in s.vertices[1:]]
    value = linalg.det(rows)
    if value < 0:
        value = -value
    if isinstance(value, float):
        return value / factorial(d)
    return Fraction(value, factorial(d))


def centroid(s: Simplex) -> Point:
    d = s.dim
    n = d + 1
    sums = [sum(v[k] for v in s.vertices) for k in range(d)]
    return tuple(Fraction(1, n) * x for x in sums)


@dataclass(frozen=True)
class HalfspaceForm:
    """Centered unit-offset facet description of a non-degenerate simplex.

    normals[i] is the outward functional of the facet opposite vertex i, with
    a_i . (v_j - center) = 1 for j != i and a_i . (v_i - center) = -dim.
    Offsets are kept explicitly even though normalization makes them all 1.
    """

    dim: int
    center: Point
    normals: Tuple[Point, ...]
    offsets: Tuple[Scalar, ...]

    def value(self, i: int, x: Sequence[Scalar]) -> Scalar:
        """The functional a_i . (x - center)."""
        return dot(self.normals[i], vec_sub(x, self.center))


def halfspace_form(s: Simplex) -> HalfspaceForm:
    """Compute the centered unit-offset form; raises on degenerate input."""
    d = s.dim
    c = centroid(s)
    centered = [vec_sub(v, c) for v in s.vertices]
    exact = all(isinstance(x, (int, Fraction)) for v in centered for x in v)
    one: Scalar = Fraction(1) if exact else 1.0
    normals: List[Point] = []
    for i in range(d + 1):
        rows = [centered[j] for j in range(d + 1) if j != i]
        try:
            a = linalg.solve(rows, [one] * d)
        except SingularMatrixError:
            raise DegenerateSimplexError(
                f"cannot form facet {i}: vertices are affinely dependent"
            ) from None
        normals.append(tuple(a))
    return HalfspaceForm(dim=d, center=c, normals=tuple(normals), offsets=(one,) * (d + 1))


def reflect_vertex(s: Simplex, i: int) -> Point:
    """Reflection of vertex i through the opposite facet along the centroid line.

    In centered coordinates the image is -((d+2)/d) * (v_i - center).
    """
    d = s.dim
    _require_nondegenerate(s)
    c = centroid(s)
    u = vec_sub(s.vertices[i], c)
    return vec_add(c, vec_scale(u, -Fraction(d + 2, d)))


def line_facet_intersection(s: Simplex, i: int) -> Point:
    """Where the line through vertex i and the centroid meets the opposite facet.

    This is the opposite facet's centroid, -(v_i - center)/d in centered
    coordinates.
    """
    d = s.dim
    _require_nondegenerate(s)
    c = centroid(s)
    u = vec_sub(s.vertices[i], c)
    return vec_add(c, vec_scale(u, -Fraction(1, d)))


def _require_nondegenerate(s: Simplex) -> None:
    if simplex_volume(s) == 0:
        raise DegenerateSimplexError("operation requires a non-degenerate simplex")


def dilate_about_center(s: Simplex, lam: Scalar) -> Simplex:
    """Scale about the centroid by lam (lam < 0 reflects through the centroid)."""
    if lam == 0:
        raise ValueError("dilation factor must be nonzero")
    c = centroid(s)
    verts = [vec_add(c, vec_scale(vec_sub(v, c), lam)) for v in s.vertices]
    return Simplex(s.dim, tuple(verts), None)


def translate_simplex(s: Simplex, t: Sequence[Scalar]) -> Simplex:
    return Simplex(s.dim, tuple(vec_add(v, t) for v in s.vertices), s.vertex_indices)


def reflect_through_centroid(s: Simplex) -> Simplex:
    """Point reflection through the centroid (the -1 dilation)."""
    return dilate_about_center(s, -1)


def contains(h: HalfspaceForm, x: Sequence[Scalar], tol: Scalar = 0) -> bool:
    """Membership test a_i . (x - center) <= b_i + tol for every facet.

    Use tol = 0 in exact mode.
    """
    if len(x) != h.dim:
        raise DimensionMismatchError(f"point has {len(x)} coordinates, expected {h.dim}")
    diff = vec_sub(x, h.center)
    return all(dot(a, diff) <= b + tol for a, b in zip(h.normals, h.offsets))


def slab_bounds(
    shape: Union[Simplex, HalfspaceForm], x: PointSet
) -> List[Tuple[Scalar, Scalar]]:
    """Per-facet (min, max) of a_i . (p - center) over all points p of x.

    For an exactly maximum-volume (or swap-locally-maximal) simplex these
    ranges land inside [-d, d+2].
    """
    h = shape if isinstance(shape, HalfspaceForm) else halfspace_form(shape)
    if x.dim != h.dim:
        raise DimensionMismatchError(f"point set is {x.dim}-dimensional, simplex is {h.dim}")
    out: List[Tuple[Scalar, Scalar]] = []
    centered = [vec_sub(p, h.center) for p in x.points]
    for a in h.normals:
        vals = [dot(a, u) for u in centered]
        out.append((min(vals), max(vals)))
    return out


def barycentric_coordinates(s: Simplex, x: Sequence[Scalar]) -> List[Scalar]:
    """Barycentric coordinates of x with respect to s (they sum to 1)."""
    _require_nondegenerate(s)
    d = s.dim
    cols = [vec_sub(v, s.vertices[0]) for v in s.vertices[1:]]
    rows = [[cols[j][k] for j in range(d)] for k in range(d)]
    mu = linalg.solve(rows, list(vec_sub(x, s.vertices[0])))
    return [1 - sum(mu)] + list(mu)


def affinely_spans(x: PointSet) -> bool:
    """True when some d+1 points of x form a non-degenerate simplex."""
    d = x.dim
    base = x.points[0]
    rows: List[Point] = []
    for p in x.points[1:]:
        cand = rows + [vec_sub(p, base)]
        if len(cand) <= d and linalg.gram_det(cand) != 0:
            rows = cand
            if len(rows) == d:
                return True
    return False


def require_spanning(x: PointSet) -> None:
    if len(x) < x.dim + 1:
        raise DegeneratePointSetError(
            f"need at least {x.dim + 1} points in dimension {x.dim}, got {len(x)}"
        )
    if not affinely_spans(x):
        raise DegeneratePointSetError("points do not affinely span the ambient space")
