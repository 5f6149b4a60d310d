"""Exact convex geometry on finite point sets in Q^b.

Everything runs on a small dense two-phase simplex over Fractions with
Bland's rule, so it always terminates and every certificate is exact:

* a point outside a hull comes with a functional ``xi`` such that
  ``<xi, p>`` is strictly larger than ``<xi, q>`` for every listed point q;
* a point inside comes with convex weights reproducing it exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch, EmptySet

Vector = tuple[Fraction, ...]


@dataclass(frozen=True)
class PointSet:
    dimension: int
    points: tuple[Vector, ...]

    def __post_init__(self):
        for p in self.points:
            if len(p) != self.dimension:
                raise DimensionMismatch(f"point of length {len(p)} in a {self.dimension}-dimensional set")

    @classmethod
    def of(cls, points, dimension: int | None = None) -> "PointSet":
        pts = tuple(tuple(Fraction(x) for x in p) for p in points)
        if dimension is None:
            if not pts:
                raise DimensionMismatch("dimension needed for an empty point set")
            dimension = len(pts[0])
        return cls(dimension, pts)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


def dot(a: Sequence, b: Sequence) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


# ---------------------------------------------------------------------------
# exact simplex

@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal", "infeasible" or "unbounded"
    x: tuple[Fraction, ...] | None = None
    value: Fraction | None = None
    # for infeasible problems: y with y.A <= 0 componentwise and y.b > 0
    farkas: tuple[Fraction, ...] | None = None


def solve_lp(c: Sequence, A: Sequence[Sequence], b: Sequence) -> LPResult:
    """Minimize ``c.x`` subject to ``A x = b``, ``x >= 0``, exactly."""
    m, n = len(A), len(c)
    for row in A:
        if len(row) != n:
            raise DimensionMismatch("constraint row length differs from cost length")
    if len(b) != m:
        raise DimensionMismatch("right-hand side length differs from row count")

    flip = [-1 if Fraction(bi) < 0 else 1 for bi in b]
    # columns: n structural, m artificial, rhs
    T = []
    for i in range(m):
        s = flip[i]
        row = [s * Fraction(a) for a in A[i]]
        row += [Fraction(1 if j == i else 0) for j in range(m)]
        row.append(s * Fraction(b[i]))
        T.append(row)
    basis = [n + i for i in range(m)]
    width = n + m

    # phase 1: minimize the sum of artificials
    obj = [Fraction(0)] * (width + 1)
    for j in range(width + 1):
        if n <= j < width:
            continue
        obj[j] = -sum((T[i][j] for i in range(m)), Fraction(0))
    if _run_simplex(T, obj, basis, width) == "unbounded":  # pragma: no cover
        raise AssertionError("phase 1 cannot be unbounded")
    if -obj[width] > 0:
        # reduced cost of artificial i is 1 - y_i
        y = tuple(flip[i] * (1 - obj[n + i]) for i in range(m))
        return LPResult("infeasible", farkas=y)

    # drive artificials out of the basis; drop redundant rows
    i = 0
    while i < len(T):
        if basis[i] >= n:
            j = next((j for j in range(n) if T[i][j] != 0), None)
            if j is None:
                del T[i]
                del basis[i]
                continue
            _pivot(T, None, basis, i, j)
        i += 1

    cost = [Fraction(x) for x in c] + [Fraction(0)] * m
    obj = [Fraction(0)] * (width + 1)
    for j in range(width + 1):
        cj = cost[j] if j < width else Fraction(0)
        obj[j] = cj - sum((cost[basis[i]] * T[i][j] for i in range(len(T))), Fraction(0))
    if _run_simplex(T, obj, basis, n) == "unbounded":
        return LPResult("unbounded")
    x = [Fraction(0)] * n
    for i, bv in enumerate(basis):
        x[bv] = T[i][width]
    return LPResult("optimal", x=tuple(x), value=-obj[width])


def _pivot(T, obj, basis, r, j):
    prow = T[r]
    piv = prow[j]
    if piv != 1:
        prow[:] = [a / piv for a in prow]
    for i, row in enumerate(T):
        if i != r and row[j] != 0:
            f = row[j]
            row[:] = [a - f * p for a, p in zip(row, prow)]
    if obj is not None and obj[j] != 0:
        f = obj[j]
        obj[:] = [a - f * p for a, p in zip(obj, prow)]
    basis[r] = j


def _run_simplex(T, obj, basis, allowed):
    """Pivot with Bland's rule; only columns < ``allowed`` may enter."""
    rhs = len(obj) - 1
    while True:
        j = next((j for j in range(allowed) if obj[j] < 0), None)
        if j is None:
            return "optimal"
        best = None
        for i, row in enumerate(T):
            if row[j] > 0:
                ratio = row[rhs] / row[j]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return "unbounded"
        _pivot(T, obj, basis, best[1], j)


# ---------------------------------------------------------------------------
# hull queries

@dataclass(frozen=True)
class HullCertificate:
    """Outcome of a convex-hull membership query.

    ``inside`` True: ``weights`` are convex coefficients over the vertex list.
    ``inside`` False: ``functional`` strictly separates the point.
    """

    inside: bool
    weights: tuple[Fraction, ...] | None = None
    functional: tuple[Fraction, ...] | None = None

    def __bool__(self) -> bool:
        return self.inside


def _as_vector(p) -> Vector:
    return tuple(Fraction(x) for x in p)


def hull_contains(p: Sequence, vertices: PointSet) -> HullCertificate:
    """Decide whether ``p`` is a convex combination of ``vertices``."""
    p = _as_vector(p)
    d = vertices.dimension
    if len(p) != d:
        raise DimensionMismatch(f"point has length {len(p)}, set has dimension {d}")
    pts = vertices.points
    if not pts:
        return HullCertificate(False, functional=(Fraction(0),) * d)
    # rows: coordinates, then sum of weights = 1
    A = [[q[r] for q in pts] for r in range(d)] + [[Fraction(1)] * len(pts)]
    rhs = list(p) + [Fraction(1)]
    res = solve_lp([Fraction(0)] * len(pts), A, rhs)
    if res.status == "optimal":
        cert = HullCertificate(True, weights=res.x)
    else:
        # y.(q, 1) <= 0 for all q and y.(p, 1) > 0: xi = y[:d] separates
        cert = HullCertificate(False, functional=res.farkas[:d])
    assert check_certificate(p, vertices, cert), "simplex produced an invalid certificate"
    return cert


def is_extreme(p: Sequence, others: PointSet) -> tuple[bool, HullCertificate]:
    """``(True, cert)`` when ``p`` is outside the hull of ``others``.

    On True the certificate carries a separating functional, on False the
    convex weights expressing ``p`` through ``others``.
    """
    cert = hull_contains(p, others)
    return not cert.inside, cert


def check_certificate(p: Sequence, vertices: PointSet, cert: HullCertificate) -> bool:
    """Re-verify a certificate from scratch."""
    p = _as_vector(p)
    if cert.inside:
        w = cert.weights
        if w is None or len(w) != len(vertices.points):
            return False
        if any(x < 0 for x in w) or sum(w) != 1:
            return False
        combo = [sum((wi * q[r] for wi, q in zip(w, vertices.points)), Fraction(0))
                 for r in range(vertices.dimension)]
        return tuple(combo) == p
    xi = cert.functional
    if xi is None:
        return False
    top = dot(xi, p)
    return all(dot(xi, q) < top for q in vertices.points)


def support_value(xi: Sequence, vertices: PointSet) -> Fraction:
    """max over the vertex list of <xi, v>."""
    if not vertices.points:
        raise EmptySet("support function of an empty set")
    if len(xi) != vertices.dimension:
        raise DimensionMismatch(f"functional has length {len(xi)}, set has dimension {vertices.dimension}")
    xi = _as_vector(xi)
    return max(dot(xi, v) for v in vertices.points)


def segment_is_edge(i: int, j: int, vertices: PointSet) -> bool:
    """Whether vertices i and j span an edge (1-face) of their hull.

    The segment is a face exactly when its midpoint admits no convex
    representation giving positive weight to any other vertex.
    """
    pts = vertices.points
    d = vertices.dimension
    mid = tuple((a + b) / 2 for a, b in zip(pts[i], pts[j]))
    A = [[q[r] for q in pts] for r in range(d)] + [[Fraction(1)] * len(pts)]
    cost = [Fraction(0) if t in (i, j) else Fraction(-1) for t in range(len(pts))]
    res = solve_lp(cost, A, list(mid) + [Fraction(1)])
    return res.status == "optimal" and res.value == 0
