"""Brute-force cross-checks that never look at circuits.

The unit ball is recomputed as the slice of the weighted l1 ball of chain
space by the cycle subspace. In cycle coordinates y it is the polytope

    { y : <a_s, y> <= 1 for every sign vector s },  a_s = sum_i s_i w_i B_i

where B_i is row i of the k x b fundamental-cycle matrix. Its vertices are
found either by solving every b x b system of facet equations (small cases)
or by an exact double-description pass (everything else). Both are
exponential in k and capped.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb, gcd, lcm
from typing import Sequence

from .errors import CapExceeded, DegenerateBall, DimensionMismatch
from .graph import HomologyBasis, WeightedMultigraph, boundary
from .polytope import PointSet, dot, is_extreme, solve_lp

DEFAULT_EDGE_CAP = 12
# facet-subset enumeration is used while the number of b-subsets stays below this
SUBSET_LIMIT = 3_000


def facet_normals(G: WeightedMultigraph, H: HomologyBasis) -> list[tuple[Fraction, ...]]:
    """Distinct normals a_s, one per sign vector over the edges, sorted."""
    rows = H.matrix()
    weighted = [tuple(G.edges[i].weight * x for x in rows[i]) for i in range(G.k)]
    normals = set()
    for signs in itertools.product((1, -1), repeat=G.k):
        a = [Fraction(0)] * H.betti
        for s, row in zip(signs, weighted):
            for j, x in enumerate(row):
                if x:
                    a[j] += x if s > 0 else -x
        normals.add(tuple(a))
    return sorted(normals)


def _solve_square(M: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]):
    """Gauss-Jordan over Fractions; None when M is singular."""
    n = len(M)
    A = [list(row) + [r] for row, r in zip(M, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col] != 0), None)
        if piv is None:
            return None
        A[col], A[piv] = A[piv], A[col]
        p = A[col][col]
        A[col] = [x / p for x in A[col]]
        for r in range(n):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    return tuple(A[r][n] for r in range(n))


def _vertices_by_subsets(normals, b):
    ones = [Fraction(1)] * b
    found = set()
    for subset in itertools.combinations(normals, b):
        y = _solve_square(subset, ones)
        if y is not None and all(dot(a, y) <= 1 for a in normals):
            found.add(y)
    return found


def _primitive(v):
    g = 0
    for x in v:
        g = gcd(g, x)
    return tuple(x // g for x in v) if g > 1 else tuple(v)


def _vertices_by_double_description(normals, b):
    """Extreme rays of the cone { (y, t) : t - <a, y> >= 0 } in integers.

    Vertices of the polytope are the rays scaled to t = 1.
    """
    d = b + 1
    rows = []
    for a in normals:
        row = [-x for x in a] + [Fraction(1)]
        den = lcm(*(x.denominator for x in row))
        rows.append(_primitive([int(x * den) for x in row]))

    # initial simplicial cone from d independent rows
    basis_idx, echelon = [], []
    for i, r in enumerate(rows):
        v = [Fraction(x) for x in r]
        for piv_col, er in echelon:
            if v[piv_col]:
                f = v[piv_col] / er[piv_col]
                v = [x - f * y for x, y in zip(v, er)]
        col = next((c for c, x in enumerate(v) if x), None)
        if col is not None:
            echelon.append((col, v))
            basis_idx.append(i)
            if len(basis_idx) == d:
                break
    if len(basis_idx) < d:
        raise DegenerateBall("facet normals do not span the cycle space")

    R0 = [[Fraction(x) for x in rows[i]] for i in basis_idx]
    rays = []  # (integer vector, bitmask of tight processed rows)
    for j in range(d):
        col = _solve_square(R0, [Fraction(1 if i == j else 0) for i in range(d)])
        den = lcm(*(x.denominator for x in col))
        vec = _primitive([int(x * den) for x in col])
        mask = 0
        for pos, i in enumerate(basis_idx):
            if pos != j:
                mask |= 1 << i
        rays.append((vec, mask))

    in_basis = set(basis_idx)
    for i, g in enumerate(rows):
        if i in in_basis:
            continue
        plus, zero, minus = [], [], []
        for vec, mask in rays:
            val = sum(x * y for x, y in zip(g, vec))
            (plus if val > 0 else zero if val == 0 else minus).append((vec, mask, val))
        if not minus:
            rays = [(vec, mask | (1 << i)) if val == 0 else (vec, mask) for vec, mask, val in plus + zero]
            continue
        masks = [mask for _, mask in rays]
        new = []
        for pv, pm, pval in plus:
            for nv, nm, nval in minus:
                common = pm & nm
                if bin(common).count("1") < d - 2:
                    continue
                if any((common & m) == common and m != pm and m != nm for m in masks):
                    continue
                vec = _primitive([pval * y - nval * x for x, y in zip(pv, nv)])
                new.append((vec, common | (1 << i)))
        rays = [(v, m) for v, m, _ in plus] + [(v, m | (1 << i)) for v, m, _ in zero] + new

    out = set()
    for vec, _ in rays:
        t = vec[-1]
        if t <= 0:
            raise DegenerateBall("unbounded slice; the cycle subspace is degenerate")
        out.add(tuple(Fraction(x, t) for x in vec[:-1]))
    return out


def ball_by_intersection(G: WeightedMultigraph, H: HomologyBasis,
                         cap: int = DEFAULT_EDGE_CAP, method: str = "auto") -> PointSet:
    """Vertices of the l1 ball sliced by the cycle space, in cycle coordinates.

    ``method`` is ``"subsets"``, ``"double_description"`` or ``"auto"``.
    """
    if G.k > cap:
        raise CapExceeded(f"{G.k} edges exceeds the oracle cap of {cap}")
    b = H.betti
    if b == 0:
        raise DegenerateBall("the cycle space is zero-dimensional")
    normals = facet_normals(G, H)
    if method == "auto":
        method = "subsets" if comb(len(normals), b) <= SUBSET_LIMIT else "double_description"
    if method == "subsets":
        candidates = _vertices_by_subsets(normals, b)
    elif method == "double_description":
        candidates = _vertices_by_double_description(normals, b)
    else:
        raise ValueError(f"unknown method {method!r}")

    pts = sorted(candidates)
    keep = []
    for i, p in enumerate(pts):
        extreme, _ = is_extreme(p, PointSet(b, tuple(pts[:i] + pts[i + 1:])))
        if extreme:
            keep.append(p)
    return PointSet(b, tuple(keep))


def infimum_representative(G: WeightedMultigraph, H: HomologyBasis, y: Sequence,
                           cap: int = DEFAULT_EDGE_CAP):
    """Minimize sum w_i |u_i| over cycles u with cotree coordinates y.

    Solved as an exact LP in the split variables u = u+ - u-. Returns the
    optimal value and the optimal chain.
    """
    if G.k > cap:
        raise CapExceeded(f"{G.k} edges exceeds the oracle cap of {cap}")
    if len(y) != H.betti:
        raise DimensionMismatch(f"class has {len(y)} coordinates, expected {H.betti}")
    k = G.k
    A, rhs = [], []
    # boundary rows: columns of the incidence matrix, doubled for u- with sign flipped
    unit = [tuple(Fraction(1 if j == i else 0) for j in range(k)) for i in range(k)]
    incidence = [boundary(G, unit[i]) for i in range(k)]
    for v in range(G.vertex_count):
        row = [incidence[i][v] for i in range(k)]
        A.append(row + [-x for x in row])
        rhs.append(Fraction(0))
    for j, eid in enumerate(H.cotree_edges):
        row = [Fraction(1 if i == eid else 0) for i in range(k)]
        A.append(row + [-x for x in row])
        rhs.append(Fraction(y[j]))
    cost = [e.weight for e in G.edges] * 2
    res = solve_lp(cost, A, rhs)
    if res.status != "optimal":  # pragma: no cover - the feasible set is a single point
        raise AssertionError(f"infimum LP ended as {res.status}")
    u = tuple(p - m for p, m in zip(res.x[:k], res.x[k:]))
    return res.value, u


def norm_by_infimum(G: WeightedMultigraph, H: HomologyBasis, y: Sequence,
                    cap: int = DEFAULT_EDGE_CAP) -> Fraction:
    return infimum_representative(G, H, y, cap)[0]
