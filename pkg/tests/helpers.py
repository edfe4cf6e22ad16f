"""Shared generators and brute-force oracles for the test suite.

The oracles deliberately avoid the code paths they are checking:
``brute_mvs`` walks subsets with the plain Fraction determinant volume,
``lp_vertex_minimum`` enumerates basic points of boxed LPs by solving
square systems, and neither touches the simplex tableau or the batched
minor expansion.
"""
from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import List, Optional, Tuple

from simplexcover.errors import SingularMatrixError
from simplexcover.geometry import PointSet, Simplex, simplex_volume
from simplexcover.linalg import solve as linear_solve
from simplexcover.linprog import LinearProgram


def rational_points(n: int, d: int, seed: int, denom: int = 64) -> PointSet:
    rng = random.Random(seed)
    return PointSet(
        d,
        tuple(
            tuple(Fraction(rng.randint(-denom, denom), denom) for _ in range(d))
            for _ in range(n)
        ),
    )


def float_points(n: int, d: int, seed: int) -> PointSet:
    rng = random.Random(seed)
    return PointSet(
        d, tuple(tuple(rng.uniform(-1.0, 1.0) for _ in range(d)) for _ in range(n))
    )


def brute_mvs(x: PointSet) -> Tuple[Fraction, Tuple[int, ...]]:
    """Best (volume, index tuple) by direct subset enumeration."""
    best_vol = None
    best_idx = None
    for idx in itertools.combinations(range(len(x)), x.dim + 1):
        vol = simplex_volume(Simplex(x.dim, tuple(x.points[i] for i in idx)))
        if best_vol is None or vol > best_vol:
            best_vol, best_idx = vol, idx
    return best_vol, best_idx


def lp_vertex_minimum(lp: LinearProgram) -> Optional[Fraction]:
    """Exact minimum over the vertices of {G z <= h}, or None when empty.

    Sound only for LPs whose feasible region is bounded (our generators
    always include box rows), since then the optimum sits at a vertex.
    """
    m, K = lp.num_vars, len(lp.rows)
    best = None
    for idx in itertools.combinations(range(K), m):
        rows = [[Fraction(g) for g in lp.rows[k]] for k in idx]
        rhs = [Fraction(lp.rhs[k]) for k in idx]
        try:
            v = linear_solve(rows, rhs)
        except SingularMatrixError:
            continue
        feasible = all(
            sum(Fraction(g) * vi for g, vi in zip(lp.rows[k], v)) <= Fraction(lp.rhs[k])
            for k in range(K)
        )
        if not feasible:
            continue
        val = sum(Fraction(c) * vi for c, vi in zip(lp.objective, v))
        if best is None or val < best:
            best = val
    return best


def random_boxed_lp(rng: random.Random, exact: bool = True) -> LinearProgram:
    """Random LP whose rows always include a bounding box (so: never unbounded)."""
    m = rng.randint(1, 4)
    box = rng.randint(2, 6)
    rows: List[tuple] = []
    rhs: List = []
    for i in range(m):
        e = tuple(1 if j == i else 0 for j in range(m))
        rows.append(e)
        rhs.append(box)
        rows.append(tuple(-v for v in e))
        rhs.append(box)
    for _ in range(rng.randint(0, 12 - 2 * m)):
        rows.append(tuple(rng.randint(-4, 4) for _ in range(m)))
        rhs.append(rng.randint(-6, 6))
    objective = tuple(rng.randint(-5, 5) for _ in range(m))
    conv = Fraction if exact else float
    return LinearProgram(
        m,
        tuple(conv(c) for c in objective),
        tuple(tuple(conv(g) for g in r) for r in rows),
        tuple(conv(h) for h in rhs),
    )


def point_in_simplex(s: Simplex, p) -> bool:
    """Exact membership via barycentric coordinates (no halfspace code)."""
    from simplexcover.geometry import barycentric_coordinates

    return all(b >= 0 for b in barycentric_coordinates(s, p))
