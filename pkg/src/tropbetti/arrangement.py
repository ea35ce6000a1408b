"""Hyperplane arrangements from pairwise monomial ties, with exact face
enumeration.

Each pair of distinct monomials (a1, b1), (a2, b2) of a polynomial ties on
the hyperplane (a1 - a2).x = b2 - b1.  The faces of the resulting
arrangement are the sign-vector cells; every cell of the tropical
prevariety is a union of such faces.

Faces are enumerated bottom-up without linear programming: first the flats
of the intersection lattice, then, per flat L in increasing dimension, the
regions of the arrangement induced on L.  Every region of the induced
arrangement has a facet F (a face one dimension lower, already known), and
near a relative-interior point of F the arrangement restricted to L looks
like the single hyperplane spanned by F; stepping off F by an exact
rational +-eps lands witnesses in the two adjacent regions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from . import linalg
from .exactgeom import HPolyhedron
from .tropical import TropSystem


def _sign(v) -> int:
    return (v > 0) - (v < 0)


@dataclass(frozen=True)
class Hyperplane:
    """normal.x = offset with coprime integer normal, first nonzero > 0.

    ``sources`` lists the monomial pairs (poly index, j1, j2) whose tie
    locus is this hyperplane.
    """

    normal: tuple[int, ...]
    offset: Fraction
    sources: tuple[tuple[int, int, int], ...]

    def value(self, x) -> Fraction:
        return linalg.dot(self.normal, x) - self.offset


class ArrFace:
    """Relatively open face of an arrangement: one sign vector's cell."""

    def __init__(self, arrangement: "Arrangement", signs: tuple[int, ...], dim: int, witness):
        self.arrangement = arrangement
        self.signs = signs
        self.dim = dim
        self.witness = linalg.fvec(witness)

    def __repr__(self):
        return f"ArrFace(dim={self.dim}, signs={''.join('0+-'[s] for s in self.signs)})"

    def __eq__(self, other):
        return isinstance(other, ArrFace) and self.signs == other.signs

    def __hash__(self):
        return hash(self.signs)

    @cached_property
    def zero_set(self) -> frozenset[int]:
        return frozenset(i for i, s in enumerate(self.signs) if s == 0)

    @cached_property
    def closure(self) -> HPolyhedron:
        eqs, ineqs = [], []
        for h, s in zip(self.arrangement.hyperplanes, self.signs):
            if s == 0:
                eqs.append((h.normal, h.offset))
            else:
                ineqs.append((linalg.vscale(s, h.normal), s * h.offset))
        return HPolyhedron(self.arrangement.n, eqs, ineqs)

    @cached_property
    def bounded(self) -> bool:
        return self.closure.is_bounded()

    def contains(self, x) -> bool:
        x = linalg.fvec(x)
        return all(_sign(h.value(x)) == s for h, s in zip(self.arrangement.hyperplanes, self.signs))


class Arrangement:
    """Deduplicated tie hyperplanes of a tropical polynomial system.

    ``degenerate_pairs`` records monomial pairs with equal variable parts
    and distinct constants; they never tie and induce no hyperplane.
    """

    def __init__(self, n: int, hyperplanes, degenerate_pairs=()):
        self.n = n
        self.hyperplanes = tuple(hyperplanes)
        self.degenerate_pairs = tuple(degenerate_pairs)
        self._cache: dict = {}

    @property
    def ell(self) -> int:
        return len(self.hyperplanes)

    def __repr__(self):
        return f"Arrangement(n={self.n}, hyperplanes={self.ell})"

    def sign_vector(self, x) -> tuple[int, ...]:
        x = linalg.fvec(x)
        return tuple(_sign(h.value(x)) for h in self.hyperplanes)

    def faces(self) -> tuple[ArrFace, ...]:
        if "faces" not in self._cache:
            self._cache["faces"] = enumerate_faces(self)
        return self._cache["faces"]

    def face_at(self, x) -> ArrFace:
        """The unique face whose relative interior contains x."""
        if "by_sign" not in self._cache:
            self._cache["by_sign"] = {f.signs: f for f in self.faces()}
        return self._cache["by_sign"][self.sign_vector(x)]


@lru_cache(maxsize=None)
def build_arrangement(system: TropSystem) -> Arrangement:
    seen: dict[tuple[tuple[int, ...], Fraction], list[tuple[int, int, int]]] = {}
    degenerate = []
    for i, f in enumerate(system.polys):
        for j1, j2 in itertools.combinations(range(f.m), 2):
            m1, m2 = f.monomials[j1], f.monomials[j2]
            normal = linalg.vsub(m1.a, m2.a)
            if linalg.is_zero_vec(normal):
                degenerate.append((i, j1, j2))
                continue
            w, c = linalg.primitive(normal, allow_flip=True)
            offset = c * (m2.b - m1.b)
            seen.setdefault((w, offset), []).append((i, j1, j2))
    hps = [Hyperplane(nrm, off, tuple(srcs)) for (nrm, off), srcs in seen.items()]
    hps.sort(key=lambda h: (h.normal, h.offset))
    return Arrangement(system.n, hps, degenerate)


class _Flat:
    """Nonempty intersection of hyperplanes: an affine subspace."""

    __slots__ = ("key", "dim", "base", "dirs", "rows", "definers", "base_values")

    def __init__(self, key, dim, base, dirs, rows, definers, base_values):
        self.key = key
        self.dim = dim
        self.base = base
        self.dirs = dirs
        self.rows = rows
        self.definers = definers
        self.base_values = base_values


def _make_flat(n, rows, hps):
    """Flat from equation rows (normal, offset), or None if empty."""
    aug = [list(a) + [b] for a, b in rows]
    red, pivots = linalg.rref(aug)
    if n in pivots:
        return None
    return _finish_flat(n, red, hps)


def _finish_flat(n, red, hps):
    key = tuple(tuple(r) for r in red)
    normals = [r[:n] for r in red]
    base = linalg.solve(normals, [r[n] for r in red]) if red else tuple([Fraction(0)] * n)
    # integer direction vectors keep the hot sign loops in int arithmetic
    dirs = [linalg.primitive(u)[0] for u in linalg.nullspace(normals, n)]
    red_rows = [(tuple(r[:n]), r[n]) for r in red]
    base_values = [h.value(base) for h in hps]
    definers = frozenset(
        i
        for i, h in enumerate(hps)
        if base_values[i] == 0
        and all(sum(a * b for a, b in zip(h.normal, u)) == 0 for u in dirs)
    )
    return _Flat(key, n - len(red), base, dirs, red_rows, definers, base_values)


def _points_on_line(fl, hps, flats):
    """Zero-dimensional flats on a line, grouped by crossing parameter.

    All hyperplanes through base + t*u either contain the line (so are
    among its definers) or cross it at parameter t, which makes the
    definers and hyperplane values of every point on the line cheap.
    """
    u = fl.dirs[0]
    slopes = [sum(a * b for a, b in zip(h.normal, u)) for h in hps]
    crossings: dict[Fraction, list[int]] = {}
    for i, t in enumerate(slopes):
        if t != 0 and i not in fl.definers:
            crossings.setdefault(-fl.base_values[i] / t, []).append(i)
    out = []
    for t, idxs in crossings.items():
        base = linalg.vadd(fl.base, linalg.vscale(t, u))
        key = ("pt",) + tuple(base)
        if key in flats:
            continue
        values = [v + t * sl for v, sl in zip(fl.base_values, slopes)]
        pt = _Flat(key, 0, base, [], [], fl.definers | frozenset(idxs), values)
        flats[key] = pt
        out.append(pt)
    return out


def _intersection_lattice(n, hps):
    start = _make_flat(n, [], hps)
    flats = {start.key: start}
    frontier = [start]
    while frontier:
        new = []
        for fl in frontier:
            if fl.dim == 0:
                continue
            if fl.dim == 1:
                new.extend(_points_on_line(fl, hps, flats))
                continue
            for i, h in enumerate(hps):
                if i in fl.definers:
                    continue
                if all(sum(a * b for a, b in zip(h.normal, u)) == 0 for u in fl.dirs):
                    continue  # parallel to the flat: empty intersection
                aug = [list(a) + [b] for a, b in fl.rows] + [list(h.normal) + [h.offset]]
                red, pivots = linalg.rref(aug)
                if n in pivots:
                    continue
                key = tuple(tuple(r) for r in red)
                if key in flats:
                    continue
                sub = _finish_flat(n, red, hps)
                flats[key] = sub
                new.append(sub)
        frontier = new
    return flats


class _FaceRec:
    __slots__ = ("signs", "zero_set", "witness", "values", "span_rref", "span_pivots")

    def __init__(self, signs, zero_set, witness, values, dirs):
        self.signs = signs
        self.zero_set = zero_set
        self.witness = witness
        self.values = values
        self.span_rref, self.span_pivots = linalg.rref([list(v) for v in dirs]) if dirs else ([], [])


def _in_span(v, red, pivots):
    """Whether v lies in the row space captured by (rref rows, pivots)."""
    w = list(v)
    for row, p in zip(red, pivots):
        if w[p] != 0:
            f = w[p]
            w = [x - f * y for x, y in zip(w, row)]
    return all(x == 0 for x in w)


def enumerate_faces(arrangement: Arrangement) -> tuple[ArrFace, ...]:
    """All faces of the arrangement, sorted by sign vector.

    The faces partition the ambient space: every point's sign vector is
    the sign vector of exactly one face.
    """
    n, hps = arrangement.n, arrangement.hyperplanes
    flats = _intersection_lattice(n, hps)
    by_dim: dict[int, list[_Flat]] = {}
    for fl in flats.values():
        by_dim.setdefault(fl.dim, []).append(fl)

    found: dict[tuple[int, ...], tuple[int, tuple[Fraction, ...]]] = {}
    recs_by_dim: dict[int, list[_FaceRec]] = {}

    def add_face(witness, dim, dirs, values):
        signs = tuple(_sign(v) for v in values)
        if signs in found:
            return
        found[signs] = (dim, witness)
        if dim < n:  # top-dimensional faces seed nothing further
            zero_set = frozenset(i for i, s in enumerate(signs) if s == 0)
            recs_by_dim.setdefault(dim, []).append(_FaceRec(signs, zero_set, witness, values, dirs))

    for d in range(0, n + 1):
        level = by_dim.get(d, [])
        if not level:
            continue
        below = recs_by_dim.get(d - 1, ())
        members_by_hp: dict[int, list[_FaceRec]] = {}
        for rec in below:
            for i in rec.zero_set:
                members_by_hp.setdefault(i, []).append(rec)
        for fl in level:
            has_cutter = any(
                i not in fl.definers
                and any(sum(a * b for a, b in zip(h.normal, u)) != 0 for u in fl.dirs)
                for i, h in enumerate(hps)
            )
            if d == 0 or not has_cutter:
                # Nothing splits the flat: it is a single face outright.
                add_face(fl.base, d, fl.dirs, list(fl.base_values))
                continue
            if fl.definers:
                i0 = min(fl.definers, key=lambda i: len(members_by_hp.get(i, ())))
                candidates = [r for r in members_by_hp.get(i0, ()) if r.zero_set >= fl.definers]
            else:
                candidates = below
            tu_by_dir: dict[tuple[int, ...], list[int]] = {}
            for rec in candidates:
                # rec spans a hyperplane within fl; step off it both ways.
                u = next(v for v in fl.dirs if not _in_span(v, rec.span_rref, rec.span_pivots))
                tu = tu_by_dir.get(u)
                if tu is None:
                    tu = tu_by_dir[u] = [sum(a * b for a, b in zip(h.normal, u)) for h in hps]
                eps = None
                for s in (1, -1):
                    signs = tuple(
                        sg if sg else _sign(s * t) for sg, t in zip(rec.signs, tu)
                    )
                    if signs in found:
                        continue
                    if eps is None:
                        eps = min(
                            (abs(v) / (2 * abs(t)) for v, t in zip(rec.values, tu) if v != 0 and t != 0),
                            default=Fraction(1),
                        )
                    step = s * eps
                    witness = linalg.vadd(rec.witness, linalg.vscale(step, u))
                    found[signs] = (d, witness)
                    if d < n:
                        values = [v + step * t for v, t in zip(rec.values, tu)]
                        zero_set = frozenset(i for i, sg in enumerate(signs) if sg == 0)
                        recs_by_dim.setdefault(d, []).append(
                            _FaceRec(signs, zero_set, witness, values, fl.dirs)
                        )

    faces = [ArrFace(arrangement, signs, dim, w) for signs, (dim, w) in found.items()]
    faces.sort(key=lambda f: f.signs)
    return tuple(faces)


def face_count(arrangement: Arrangement) -> int:
    return len(arrangement.faces())
