"""Independent oracles frozen for the test suite.

Each oracle deliberately avoids the code path it is used to check:

- ``sign_vectors_bruteforce`` decides all 3^ell candidate sign vectors with
  the exact LP; the face enumeration under test uses no LP at all (the LP
  itself is validated separately in test_linprog).
- ``rational_rank`` delegates to sympy's rank over QQ, independent of the
  package's elimination code.
- ``convex_hull_2d`` / ``polygon_area`` are a monotone-chain hull and
  shoelace area, independent of the incremental hull and Gram volumes.
- ``univariate_zeros`` finds breakpoints of a univariate min-envelope from
  pairwise tie candidates.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import sympy

from tropbetti.linprog import relint_witness
from tropbetti.tropical import TropPoly, is_zero


def sign_vectors_bruteforce(arr) -> dict[tuple[int, ...], tuple[Fraction, ...]]:
    """Feasible sign vectors of an arrangement, with relint witnesses."""
    out = {}
    for sv in itertools.product((-1, 0, 1), repeat=arr.ell):
        eqs, stricts = [], []
        for h, s in zip(arr.hyperplanes, sv):
            if s == 0:
                eqs.append((h.normal, h.offset))
            else:
                stricts.append((tuple(s * c for c in h.normal), s * h.offset))
        w = relint_witness(arr.n, eqs, stricts)
        if w is not None:
            out[sv] = w
    return out


def rational_rank(rows) -> int:
    if not rows:
        return 0
    return sympy.Matrix([[sympy.Rational(x) for x in row] for row in rows]).rank()


def simplicial_betti(sc) -> tuple[int, ...]:
    """Betti numbers with boundary ranks computed by sympy over QQ."""
    by_dim = sc.by_dim()
    if not by_dim:
        return ()
    top = max(by_dim)
    index = {d: {s: i for i, s in enumerate(by_dim[d])} for d in by_dim}
    ranks = {0: 0, top + 1: 0}
    for d in range(1, top + 1):
        rows = []
        for s in by_dim[d]:
            row = [0] * len(by_dim[d - 1])
            for omit in range(len(s)):
                row[index[d - 1][s[:omit] + s[omit + 1 :]]] = (-1) ** omit
            rows.append(row)
        ranks[d] = rational_rank(rows)
    b = [len(by_dim.get(d, [])) - ranks.get(d, 0) - ranks.get(d + 1, 0) for d in range(top + 1)]
    while b and b[-1] == 0:
        b.pop()
    return tuple(b)


def convex_hull_2d(points) -> list[tuple[Fraction, Fraction]]:
    """Monotone-chain hull, counterclockwise, collinear points dropped."""
    pts = sorted({(Fraction(x), Fraction(y)) for x, y in points})
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def polygon_area(points) -> Fraction:
    """Exact area of the convex hull of 2D rational points (shoelace)."""
    hull = convex_hull_2d(points)
    if len(hull) < 3:
        return Fraction(0)
    twice = sum(
        hull[i][0] * hull[(i + 1) % len(hull)][1] - hull[(i + 1) % len(hull)][0] * hull[i][1]
        for i in range(len(hull))
    )
    return abs(twice) / 2


def univariate_zeros(f: TropPoly) -> list[Fraction]:
    """Zeros of a univariate tropical polynomial from pairwise breakpoints."""
    assert f.n == 1
    candidates = set()
    for m1, m2 in itertools.combinations(f.monomials, 2):
        if m1.a[0] != m2.a[0]:
            candidates.add(Fraction(m2.b - m1.b, m1.a[0] - m2.a[0]))
    return sorted(x for x in candidates if is_zero(f, (x,)))
