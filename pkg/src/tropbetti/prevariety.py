"""Cells of a tropical prevariety, built two independent ways.

Route 1 (tie patterns): every face of the tie arrangement carries a
constant argmin pattern; the faces whose pattern has at least two entries
per polynomial cover the prevariety, and faces sharing a pattern B are
merged into the single convex, relatively open cell U_B.

Route 2 (dual subdivision): the bottom faces of the Minkowski sum of the
extended Newton polytopes, with their canonical decomposition
F = F_1 + ... + F_k.  Tropical faces (every summand of positive dimension)
dualize to the closed cells G(F) of the prevariety, with
dim F + dim G(F) = n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from . import linalg
from .arrangement import ArrFace, Arrangement, build_arrangement
from .exactgeom import EmptyPolyhedronError, HPolyhedron, VPolytope, minkowski_sum
from .tropical import TropSystem, eval_poly


@dataclass(frozen=True)
class TiePattern:
    """Sorted (polynomial index, monomial index) pairs of tied minima."""

    pairs: tuple[tuple[int, int], ...]

    @classmethod
    def make(cls, pairs) -> "TiePattern":
        return cls(tuple(sorted(set((int(i), int(j)) for i, j in pairs))))

    def row(self, i: int) -> frozenset[int]:
        return frozenset(j for ii, j in self.pairs if ii == i)

    def rows(self, k: int) -> tuple[frozenset[int], ...]:
        out: list[set[int]] = [set() for _ in range(k)]
        for i, j in self.pairs:
            out[i].add(j)
        return tuple(frozenset(r) for r in out)

    def is_zero_pattern(self, k: int) -> bool:
        """At least two tied monomials in every row."""
        counts = [0] * k
        for i, _ in self.pairs:
            counts[i] += 1
        return all(c >= 2 for c in counts)

    def __le__(self, other: "TiePattern") -> bool:
        return set(self.pairs) <= set(other.pairs)

    def __lt__(self, other: "TiePattern") -> bool:
        return set(self.pairs) < set(other.pairs)


def tie_pattern(s: TropSystem, face: ArrFace) -> TiePattern:
    """Argmin pattern on the face's relative interior (constant there)."""
    return _pattern_at(s, face.witness)


def _pattern_at(s: TropSystem, x) -> TiePattern:
    pairs = []
    for i, f in enumerate(s.polys):
        _, argmin = eval_poly(f, x)
        pairs.extend((i, j) for j in argmin)
    return TiePattern.make(pairs)


class _SystemEvaluator:
    """Evaluates argmin patterns with each distinct affine form computed once.

    Product systems repeat the same monomials across polynomials; sharing
    their values makes per-witness pattern extraction cheap.
    """

    def __init__(self, s: TropSystem):
        self.s = s
        self.forms = []
        index: dict[tuple, int] = {}
        self.poly_refs = []
        for f in s.polys:
            refs = []
            for j, mon in enumerate(f.monomials):
                key = (mon.a, mon.b)
                fi = index.get(key)
                if fi is None:
                    fi = index[key] = len(self.forms)
                    self.forms.append(mon)
                refs.append((j, fi))
            self.poly_refs.append(refs)

    def pattern_at(self, x) -> TiePattern:
        vals = [form(x) for form in self.forms]
        pairs = []
        for i, refs in enumerate(self.poly_refs):
            lo = min(vals[fi] for _, fi in refs)
            pairs.extend((i, j) for j, fi in refs if vals[fi] == lo)
        return TiePattern(tuple(pairs))


def pattern_closure(s: TropSystem, b: TiePattern) -> HPolyhedron:
    """{x : ties of B hold with equality and weakly below all other monomials}."""
    eqs, ineqs = [], []
    for i, f in enumerate(s.polys):
        row = sorted(b.row(i))
        if not row:
            continue
        m0 = f.monomials[row[0]]
        for j in row[1:]:
            mj = f.monomials[j]
            eqs.append((linalg.vsub(mj.a, m0.a), m0.b - mj.b))
        for j in range(f.m):
            if j in row:
                continue
            mj = f.monomials[j]
            ineqs.append((linalg.vsub(mj.a, m0.a), m0.b - mj.b))
    return HPolyhedron(s.n, eqs, ineqs)


class PrevarietyCell:
    """One relatively open cell U_B with its closed polyhedron."""

    def __init__(self, system: TropSystem, pattern: TiePattern, dim: int, witness):
        self.system = system
        self.pattern = pattern
        self.dim = dim
        self.witness = linalg.fvec(witness)

    def __repr__(self):
        return f"PrevarietyCell(dim={self.dim}, pattern={self.pattern.pairs})"

    def __eq__(self, other):
        return isinstance(other, PrevarietyCell) and self.pattern == other.pattern

    def __hash__(self):
        return hash(self.pattern)

    @cached_property
    def closure(self) -> HPolyhedron:
        return pattern_closure(self.system, self.pattern)

    @cached_property
    def bounded(self) -> bool:
        return self.closure.is_bounded()

    @cached_property
    def lineality_dim(self) -> int:
        return len(self.closure.lineality_basis())


class PrevarietyComplex:
    """Cells of a prevariety with their closure (face) relation."""

    def __init__(self, system: TropSystem, cells):
        self.system = system
        self.cells = tuple(sorted(cells, key=lambda c: c.pattern.pairs))
        # incidence: (a, b) whenever cell b lies in the closure of cell a
        self.incidence = tuple(
            (ia, ib)
            for ia, ca in enumerate(self.cells)
            for ib, cb in enumerate(self.cells)
            if ca.pattern < cb.pattern
        )
        self.component_labels = self._label_components()

    def __repr__(self):
        return f"PrevarietyComplex(cells={len(self.cells)})"

    def _label_components(self) -> tuple[int, ...]:
        parent = list(range(len(self.cells)))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for a, b in self.incidence:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
        roots: dict[int, int] = {}
        labels = []
        for i in range(len(self.cells)):
            r = find(i)
            labels.append(roots.setdefault(r, len(roots)))
        return tuple(labels)


def cells_via_arrangement(s: TropSystem) -> PrevarietyComplex:
    """Prevariety cells as merged tie-pattern classes of arrangement faces."""
    arr = build_arrangement(s)
    evaluator = _SystemEvaluator(s)
    # a zero pattern needs a tie in every polynomial, and any tie of two
    # distinct monomials sits on a hyperplane sourced from that polynomial
    hp_polys = [frozenset(i for i, _, _ in h.sources) for h in arr.hyperplanes]
    all_polys = frozenset(range(s.k))
    groups: dict[TiePattern, list[ArrFace]] = {}
    for face in arr.faces():
        covered: set[int] = set()
        for i in face.zero_set:
            covered |= hp_polys[i]
        if covered != all_polys:
            continue
        b = evaluator.pattern_at(face.witness)
        if b.is_zero_pattern(s.k):
            groups.setdefault(b, []).append(face)
    cells = []
    for b, faces in groups.items():
        top = max(faces, key=lambda f: f.dim)
        cells.append(PrevarietyCell(s, b, top.dim, top.witness))
    return PrevarietyComplex(s, cells)


def cell_closure(s: TropSystem, b: TiePattern) -> set[TiePattern]:
    """Patterns of the proper faces of U_B (they partition its boundary)."""
    arr = build_arrangement(s)
    realized = {tie_pattern(s, face) for face in arr.faces()}
    if b not in realized:
        raise EmptyPolyhedronError("U_B is empty: pattern not realized")
    return {b1 for b1 in realized if b < b1}


class DualFace:
    """Bottom face F = F_1 + ... + F_k of the summed extended polytopes.

    Each component face is recorded by the monomial index set selecting it
    (the argmin pattern of a shared supporting slope).
    """

    def __init__(self, system: TropSystem, pattern: TiePattern):
        self.system = system
        self.pattern = pattern
        lifted = []
        for i, f in enumerate(system.polys):
            pts = tuple(tuple(f.monomials[j].a) + (f.monomials[j].b,) for j in sorted(self.pattern.row(i)))
            lifted.append(pts)
        self.parts = tuple(lifted)

    def __repr__(self):
        return f"DualFace(dim={self.dim}, tropical={self.tropical})"

    def __eq__(self, other):
        return isinstance(other, DualFace) and self.pattern == other.pattern

    def __hash__(self):
        return hash(self.pattern)

    @cached_property
    def dim(self) -> int:
        diffs = []
        for pts in self.parts:
            base = pts[0]
            diffs.extend(linalg.vsub(p, base) for p in pts[1:])
        return linalg.rank(diffs) if diffs else 0

    @property
    def tropical(self) -> bool:
        return all(len(pts) >= 2 for pts in self.parts)

    def total_polytope(self) -> VPolytope:
        """F itself, as a Minkowski sum in lifted space (test-facing)."""
        total = VPolytope.hull(self.parts[0])
        for pts in self.parts[1:]:
            total = minkowski_sum(total, VPolytope.hull(pts))
        return total


def dual_subdivision(s: TropSystem) -> list[DualFace]:
    """All bottom faces of Q_1 + ... + Q_k, via arrangement witnesses."""
    arr = build_arrangement(s)
    evaluator = _SystemEvaluator(s)
    seen: dict[TiePattern, DualFace] = {}
    for face in arr.faces():
        b = evaluator.pattern_at(face.witness)
        if b not in seen:
            seen[b] = DualFace(s, b)
    return sorted(seen.values(), key=lambda f: f.pattern.pairs)


def tropical_faces(subdivision: list[DualFace]) -> list[DualFace]:
    return [f for f in subdivision if f.tropical]


def dual_cell(s: TropSystem, f: DualFace) -> PrevarietyCell:
    """G(F): the closed prevariety cell dual to a tropical face."""
    if not f.tropical:
        raise ValueError("dual_cell requires a tropical face")
    closure = pattern_closure(s, f.pattern)
    witness = closure.relative_interior_point()
    if witness is None:
        raise EmptyPolyhedronError("tropical face with empty dual cell")
    cell = PrevarietyCell(s, f.pattern, closure.affine_dim(), witness)
    cell.__dict__["closure"] = closure  # reuse instead of rebuilding lazily
    return cell


def connected_components(c: PrevarietyComplex) -> list[list[PrevarietyCell]]:
    """Cells grouped by connected component of the support."""
    groups: dict[int, list[PrevarietyCell]] = {}
    for cell, label in zip(c.cells, c.component_labels):
        groups.setdefault(label, []).append(cell)
    comps = [sorted(g, key=lambda cl: cl.pattern.pairs) for g in groups.values()]
    comps.sort(key=lambda g: g[0].pattern.pairs)
    return comps


def face_count(c: PrevarietyComplex) -> int:
    return len(c.cells)
