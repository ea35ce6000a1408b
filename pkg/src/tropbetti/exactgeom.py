"""Exact rational convex geometry: H-polyhedra, V-polytopes, volumes.

All predicates are decided by exact rational LP (see linprog); volumes are
represented as q*sqrt(s) with q rational and s a squarefree integer, so
that every comparison in the bound checks stays exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .linprog import LPStatus, relint_witness, solve_lp


class DimensionMismatch(ValueError):
    pass


class UnboundedPolytopeError(ValueError):
    pass


class EmptyPolyhedronError(ValueError):
    pass


def sqfree_decompose(g: int) -> tuple[int, int]:
    """g = sq**2 * s with s squarefree; returns (sq, s)."""
    if g <= 0:
        raise ValueError("positive integer required")
    sq, s = 1, 1
    d = 2
    while d * d <= g:
        e = 0
        while g % d == 0:
            g //= d
            e += 1
        sq *= d ** (e // 2)
        if e % 2:
            s *= d
        d += 1
    s *= g
    return sq, s


@dataclass(frozen=True)
class RadVal:
    """Exact nonnegative value q*sqrt(s), s squarefree."""

    q: Fraction
    s: int = 1

    def __post_init__(self):
        if self.q < 0:
            raise ValueError("coefficient must be nonnegative")
        if self.q == 0:
            object.__setattr__(self, "s", 1)

    @classmethod
    def from_sqrt(cls, coeff, radicand: int) -> "RadVal":
        sq, s = sqfree_decompose(int(radicand))
        return cls(Fraction(coeff) * sq, s)

    def sq(self) -> Fraction:
        return self.q * self.q * self.s

    def scaled(self, c) -> "RadVal":
        c = Fraction(c)
        if c < 0:
            raise ValueError("scale must be nonnegative")
        return RadVal(self.q * c, self.s)

    def __add__(self, other: "RadVal") -> "RadVal":
        if self.q == 0:
            return other
        if other.q == 0:
            return self
        if self.s != other.s:
            raise ValueError("incompatible radicands")
        return RadVal(self.q + other.q, self.s)

    def _cmp_key(self, other):
        if isinstance(other, RadVal):
            return self.sq(), other.sq()
        other = Fraction(other)
        if other < 0:
            raise ValueError("comparison with negative rational")
        return self.sq(), other * other

    def __le__(self, other):
        a, b = self._cmp_key(other)
        return a <= b

    def __lt__(self, other):
        a, b = self._cmp_key(other)
        return a < b

    def __eq__(self, other):
        if isinstance(other, RadVal):
            return (self.q, self.s) == (other.q, other.s)
        return self.sq() == Fraction(other) ** 2 and Fraction(other) >= 0

    def __hash__(self):
        return hash((self.q, self.s))

    def approx(self) -> float:
        return float(self.q) * self.s ** 0.5

    def __repr__(self):
        return f"RadVal({self.q}*sqrt({self.s}))"


def _canon_eq_row(a, b):
    w, c = linalg.primitive(a, allow_flip=True)
    return w, Fraction(b) * c


def _canon_ineq_row(a, b):
    w, c = linalg.primitive(a, allow_flip=False)
    return w, Fraction(b) * c


@dataclass(frozen=True)
class CanonicalHRep:
    """Hashable canonical identity of a polyhedron (or the empty marker)."""

    n: int
    empty: bool
    eqs: tuple = ()
    ineqs: tuple = ()


class HPolyhedron:
    """{x : <a,x> = b for eqs, <a,x> >= b for ineqs}, exact rational data.

    Immutable after construction; rows are canonicalized to coprime integer
    normals (equality rows additionally sign-normalized).
    """

    def __init__(self, n: int, equalities=(), inequalities=()):
        self.n = n
        eqs, ineqs = [], []
        forced_empty = False
        for a, b in equalities:
            a = tuple(Fraction(v) for v in a)
            if len(a) != n:
                raise DimensionMismatch("equality arity != ambient dimension")
            if linalg.is_zero_vec(a):
                if Fraction(b) != 0:
                    forced_empty = True
                continue
            eqs.append(_canon_eq_row(a, b))
        for a, b in inequalities:
            a = tuple(Fraction(v) for v in a)
            if len(a) != n:
                raise DimensionMismatch("inequality arity != ambient dimension")
            if linalg.is_zero_vec(a):
                if Fraction(b) > 0:
                    forced_empty = True
                continue
            ineqs.append(_canon_ineq_row(a, b))
        self.eq = tuple(sorted(set(eqs)))
        self.ineq = tuple(sorted(set(ineqs)))
        self.forced_empty = forced_empty
        self._cache: dict = {}

    def __repr__(self):
        return f"HPolyhedron(n={self.n}, eq={len(self.eq)}, ineq={len(self.ineq)})"

    def _lp_constraints(self):
        eqs = [(list(a), b) for a, b in self.eq]
        ineqs = [(list(a), b) for a, b in self.ineq]
        return eqs, ineqs

    def feasible_point(self):
        if "feas" not in self._cache:
            if self.forced_empty:
                self._cache["feas"] = None
            else:
                eqs, ineqs = self._lp_constraints()
                res = solve_lp(self.n, eqs, ineqs)
                self._cache["feas"] = res.x if res.status is LPStatus.OPTIMAL else None
        return self._cache["feas"]

    def is_empty(self) -> bool:
        return self.feasible_point() is None

    def contains(self, point) -> bool:
        point = linalg.fvec(point)
        if self.forced_empty:
            return False
        return all(linalg.dot(a, point) == b for a, b in self.eq) and all(
            linalg.dot(a, point) >= b for a, b in self.ineq
        )

    def _relint(self):
        """(implicit equality indices, relative-interior point) or None."""
        if "relint" in self._cache:
            return self._cache["relint"]
        w = self.feasible_point()
        if w is None:
            self._cache["relint"] = None
            return None
        eqs, ineqs = self._lp_constraints()
        implicit: set[int] = set()
        w = list(w)
        for i, (a, b) in enumerate(self.ineq):
            if linalg.dot(a, w) > b:
                continue
            cap = [(list(map(lambda v: -v, a)), -(b + 1))]
            res = solve_lp(self.n, eqs, ineqs + cap, list(a), maximize=True)
            assert res.status is LPStatus.OPTIMAL
            if res.value == b:
                implicit.add(i)
            else:
                w = [(x + y) / 2 for x, y in zip(w, res.x)]
        self._cache["relint"] = (implicit, tuple(w))
        return self._cache["relint"]

    def relative_interior_point(self):
        r = self._relint()
        return None if r is None else r[1]

    def affine_hull_rows(self):
        """Equality rows (incl. implicit ones) cutting out the affine hull."""
        r = self._relint()
        if r is None:
            raise EmptyPolyhedronError("empty polyhedron has no affine hull")
        implicit, _ = r
        return list(self.eq) + [self.ineq[i] for i in sorted(implicit)]

    def affine_dim(self) -> int:
        if self.is_empty():
            return -1
        rows = [a for a, _ in self.affine_hull_rows()]
        return self.n - linalg.rank(rows)

    def lineality_basis(self):
        if self.is_empty():
            raise EmptyPolyhedronError("lineality of an empty polyhedron")
        normals = [list(a) for a, _ in self.eq] + [list(a) for a, _ in self.ineq]
        return linalg.nullspace(normals, self.n)

    def is_bounded(self) -> bool:
        if "bounded" in self._cache:
            return self._cache["bounded"]
        if self.is_empty():
            self._cache["bounded"] = True
            return True
        normals = [list(a) for a, _ in self.eq] + [list(a) for a, _ in self.ineq]
        if linalg.nullspace(normals, self.n):
            self._cache["bounded"] = False
            return False
        # recession cone {v : eq.v = 0, ineq.v >= 0}; nonzero ray test
        if not self.ineq:
            self._cache["bounded"] = True  # lineality is zero and cone is kernel
            return True
        eqs = [(list(a), 0) for a, _ in self.eq]
        ineqs = [(list(a), 0) for a, _ in self.ineq]
        total = [sum(col) for col in zip(*(a for a, _ in self.ineq))]
        ineqs.append(([-v for v in total], -1))
        res = solve_lp(self.n, eqs, ineqs, total, maximize=True)
        assert res.status is LPStatus.OPTIMAL
        self._cache["bounded"] = res.value == 0
        return self._cache["bounded"]

    def intersect(self, other: "HPolyhedron") -> "HPolyhedron":
        if self.n != other.n:
            raise DimensionMismatch("ambient dimensions differ")
        p = HPolyhedron(self.n, self.eq + other.eq, self.ineq + other.ineq)
        if self.forced_empty or other.forced_empty:
            p.forced_empty = True
        return p

    def canonical(self) -> CanonicalHRep:
        if "canon" in self._cache:
            return self._cache["canon"]
        r = self._relint()
        if r is None:
            form = CanonicalHRep(self.n, True)
            self._cache["canon"] = form
            return form
        hull_rows = self.affine_hull_rows()
        aug = [list(a) + [b] for a, b in hull_rows]
        red, pivots = linalg.rref(aug) if aug else ([], [])
        eq_rows = []
        for row in red:
            w, c = linalg.primitive(row, allow_flip=True)
            eq_rows.append((w[: self.n], Fraction(w[self.n])))
        # reduce inequalities modulo the affine hull rows
        implicit, _ = r
        seen = set()
        reduced = []
        for i, (a, b) in enumerate(self.ineq):
            if i in implicit:
                continue
            row = [Fraction(v) for v in a] + [Fraction(b)]
            for rrow, p in zip(red, pivots):
                if row[p] != 0:
                    f = row[p]
                    row = [x - f * y for x, y in zip(row, rrow)]
            normal, rhs = row[: self.n], row[self.n]
            if linalg.is_zero_vec(normal):
                continue
            key = _canon_ineq_row(normal, rhs)
            if key not in seen:
                seen.add(key)
                reduced.append(key)
        # strip redundant inequalities
        reduced.sort()
        eqs_lp = [(list(a), b) for a, b in eq_rows]
        kept = list(reduced)
        i = 0
        while i < len(kept):
            a, b = kept[i]
            others = [(list(c), d) for j, (c, d) in enumerate(kept) if j != i]
            res = solve_lp(self.n, eqs_lp, others, list(a), maximize=False)
            if res.status is LPStatus.OPTIMAL and res.value >= b:
                del kept[i]
            else:
                i += 1
        form = CanonicalHRep(self.n, False, tuple(eq_rows), tuple(kept))
        self._cache["canon"] = form
        return form

    def vertices(self):
        """Vertices of the polyhedron (brute force; small inputs only)."""
        rows = list(self.eq) + list(self.ineq)
        out = set()
        for sub in itertools.combinations(range(len(rows)), self.n):
            a = [list(rows[i][0]) for i in sub]
            b = [rows[i][1] for i in sub]
            if linalg.rank(a) != self.n:
                continue
            x = linalg.solve(a, b)
            if x is not None and self.contains(x):
                out.add(x)
        return sorted(out)


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    point: tuple | None = None
    certificate: tuple | None = None


def lp_feasible(p: HPolyhedron) -> FeasibilityResult:
    """Witness point, or an exact Farkas certificate of infeasibility.

    The certificate is a multiplier per constraint row (equalities first):
    nonnegative on inequality rows, with sum_i y_i a_i = 0 and
    sum_i y_i b_i = 1, which contradicts feasibility.
    """
    w = p.feasible_point()
    if w is not None:
        return FeasibilityResult(True, w)
    rows = list(p.eq) + list(p.ineq)
    if p.forced_empty and not rows:
        return FeasibilityResult(False, certificate=())
    m = len(rows)
    eqs = []
    for j in range(p.n):
        eqs.append(([rows[i][0][j] for i in range(m)], 0))
    eqs.append(([rows[i][1] for i in range(m)], 1))
    ineqs = []
    for i in range(len(p.eq), m):
        e = [0] * m
        e[i] = 1
        ineqs.append((e, 0))
    res = solve_lp(m, eqs, ineqs)
    if res.status is not LPStatus.OPTIMAL:
        # only possible when emptiness came from a degenerate 0 >= b row
        return FeasibilityResult(False, certificate=None)
    return FeasibilityResult(False, certificate=res.x)


def affine_dim(p: HPolyhedron) -> int:
    return p.affine_dim()


def lineality_space(p: HPolyhedron):
    return p.lineality_basis()


class VPolytope:
    """Convex hull of rational points plus generator rays (all exact)."""

    def __init__(self, n: int, vertices, rays=()):
        self.n = n
        self.vertices = tuple(sorted(set(tuple(Fraction(x) for x in v) for v in vertices)))
        self.rays = tuple(sorted(set(linalg.primitive(r)[0] for r in rays)))
        self._cache: dict = {}

    def __repr__(self):
        return f"VPolytope(n={self.n}, vertices={len(self.vertices)}, rays={len(self.rays)})"

    def __eq__(self, other):
        return (
            isinstance(other, VPolytope)
            and (self.n, self.vertices, self.rays) == (other.n, other.vertices, other.rays)
        )

    def __hash__(self):
        return hash((self.n, self.vertices, self.rays))

    @classmethod
    def hull(cls, points, rays=()) -> "VPolytope":
        pts = sorted(set(tuple(Fraction(x) for x in p) for p in points))
        if not pts:
            raise ValueError("at least one point required")
        n = len(pts[0])
        rays = sorted(set(linalg.primitive(r)[0] for r in rays if not linalg.is_zero_vec(r)))
        rays = [r for i, r in enumerate(rays) if not _in_cone(r, rays[:i] + rays[i + 1 :])]
        verts = [p for p in pts if not _in_hull(p, [q for q in pts if q != p], rays)]
        return cls(n, verts, rays)

    def minkowski(self, other: "VPolytope") -> "VPolytope":
        if self.n != other.n:
            raise DimensionMismatch("ambient dimensions differ")
        sums = [linalg.vadd(p, q) for p in self.vertices for q in other.vertices]
        return VPolytope.hull(sums, self.rays + other.rays)

    def affine_dim(self) -> int:
        v0 = self.vertices[0]
        rows = [list(linalg.vsub(v, v0)) for v in self.vertices[1:]]
        rows += [list(r) for r in self.rays]
        return linalg.rank(rows)

    def facet_data(self):
        """(affine hull equality rows, facet list) for a bounded polytope.

        Each facet is (integer normal, offset, frozenset of vertex indices)
        with <normal, x> >= offset valid on the polytope and tight exactly
        on the listed vertices.
        """
        if self.rays:
            raise UnboundedPolytopeError("facet enumeration needs a bounded polytope")
        if "facets" in self._cache:
            return self._cache["facets"]
        verts = self.vertices
        v0 = verts[0]
        diffs = [list(linalg.vsub(v, v0)) for v in verts[1:]]
        r = linalg.rank(diffs) if diffs else 0
        hull_normals = linalg.nullspace(diffs, self.n) if diffs else linalg.nullspace([], self.n)
        aff_eqs = []
        for nv in hull_normals:
            w, _ = linalg.primitive(nv, allow_flip=True)
            aff_eqs.append((w, linalg.dot(w, v0)))
        facets = {}
        if r >= 1:
            dir_basis, _ = linalg.rref(diffs)
            for sub in itertools.combinations(range(len(verts)), r):
                pts = [verts[i] for i in sub]
                sub_diffs = [linalg.vsub(p, pts[0]) for p in pts[1:]]
                # normal = sum c_j dir_basis[j], orthogonal to candidate diffs
                m = [[linalg.dot(d, bvec) for bvec in dir_basis] for d in sub_diffs]
                ns = linalg.nullspace(m, r)
                if len(ns) != 1:
                    continue
                normal = tuple(
                    sum(c * Fraction(bv[j]) for c, bv in zip(ns[0], dir_basis))
                    for j in range(self.n)
                )
                normal, _ = linalg.primitive(normal)
                vals = [linalg.dot(normal, v) for v in verts]
                lo, hi = min(vals), max(vals)
                base = linalg.dot(normal, pts[0])
                if base == lo and base != hi:
                    pass
                elif base == hi and base != lo:
                    normal = tuple(-x for x in normal)
                    vals = [-v for v in vals]
                    lo = -hi
                else:
                    continue
                on = frozenset(i for i, v in enumerate(vals) if v == lo)
                facets[(normal, lo)] = on
        out = (aff_eqs, [(a, b, on) for (a, b), on in sorted(facets.items())])
        self._cache["facets"] = out
        return out

    def to_hpolyhedron(self) -> HPolyhedron:
        aff_eqs, facets = self.facet_data()
        return HPolyhedron(self.n, aff_eqs, [(a, b) for a, b, _ in facets])

    def volume(self) -> RadVal:
        """Exact r-dimensional Euclidean volume, r = affine dimension."""
        if self.rays:
            raise UnboundedPolytopeError("volume of an unbounded polyhedron")
        if "volume" in self._cache:
            return self._cache["volume"]
        verts = self.vertices
        v0 = verts[0]
        diffs = [list(linalg.vsub(v, v0)) for v in verts[1:]]
        r = linalg.rank(diffs) if diffs else 0
        if r == 0:
            vol = RadVal(Fraction(1), 1)
            self._cache["volume"] = vol
            return vol
        eq_normals = [linalg.primitive(e)[0] for e in linalg.nullspace(diffs, self.n)]
        lattice = linalg.integer_kernel([list(e) for e in eq_normals], self.n)
        assert len(lattice) == r
        cols = [[Fraction(w[i]) for w in lattice] for i in range(self.n)]
        ys = []
        for v in verts:
            y = linalg.solve(cols, list(linalg.vsub(v, v0)))
            assert y is not None
            ys.append(y)
        total = Fraction(0)
        for simplex in _triangulate(ys, r):
            p0 = ys[simplex[0]]
            mat = [list(linalg.vsub(ys[i], p0)) for i in simplex[1:]]
            total += abs(linalg.det(mat))
        fact = 1
        for i in range(2, r + 1):
            fact *= i
        vol_lattice = total / fact
        g = linalg.gram_det(lattice)
        assert g.denominator == 1 and g > 0
        vol = RadVal.from_sqrt(vol_lattice, int(g))
        self._cache["volume"] = vol
        return vol


def _in_hull(p, points, rays) -> bool:
    """p in conv(points) + cone(rays)?"""
    if not points:
        return False
    n = len(p)
    m = len(points) + len(rays)
    eqs = []
    for j in range(n):
        eqs.append(([Fraction(q[j]) for q in points] + [Fraction(r[j]) for r in rays], p[j]))
    eqs.append(([1] * len(points) + [0] * len(rays), 1))
    ineqs = []
    for i in range(m):
        e = [0] * m
        e[i] = 1
        ineqs.append((e, 0))
    return solve_lp(m, eqs, ineqs).status is LPStatus.OPTIMAL


def _in_cone(r, rays) -> bool:
    if not rays:
        return False
    n = len(r)
    m = len(rays)
    eqs = [([Fraction(q[j]) for q in rays], r[j]) for j in range(n)]
    ineqs = []
    for i in range(m):
        e = [0] * m
        e[i] = 1
        ineqs.append((e, 0))
    return solve_lp(m, eqs, ineqs).status is LPStatus.OPTIMAL


def _triangulate(ys, r):
    """Triangulation (as index tuples) of full-dimensional points in R^r."""
    idx = list(range(len(ys)))
    if r == 1:
        lo = min(idx, key=lambda i: ys[i])
        hi = max(idx, key=lambda i: ys[i])
        return [(lo, hi)]
    poly = VPolytope.hull(ys)
    vert_index = {v: i for i, v in enumerate(ys)}
    _, facets = poly.facet_data()
    v0 = poly.vertices[0]
    v0i = vert_index[v0]
    simplices = []
    for normal, offset, on in facets:
        if linalg.dot(normal, v0) == offset:
            continue
        facet_pts = [poly.vertices[i] for i in sorted(on)]
        c = next(j for j in range(r) if normal[j] != 0)
        proj = [tuple(p[j] for j in range(r) if j != c) for p in facet_pts]
        for sub in _triangulate(proj, r - 1):
            simplices.append(tuple(vert_index[facet_pts[i]] for i in sub) + (v0i,))
    return simplices


def convex_hull(points) -> VPolytope:
    return VPolytope.hull(points)


def minkowski_sum(a: VPolytope, b: VPolytope) -> VPolytope:
    return a.minkowski(b)


def volume_r(p: VPolytope) -> RadVal:
    return p.volume()
