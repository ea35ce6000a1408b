"""Exact Betti numbers of a prevariety.

Pipeline: split into connected components; factor out the common lineality
space L of a component (every cell's constraint normals span the same
space, so L is shared) by slicing with T = L-perp; keep the subcomplex of
bounded cells, a deformation retract of the sliced component; triangulate
it as the order complex of the face poset (a barycentric subdivision); and
read off homology ranks from exact rational boundary-matrix ranks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .exactgeom import HPolyhedron
from .prevariety import PrevarietyCell, PrevarietyComplex, cells_via_arrangement, connected_components
from .tropical import TropSystem


@dataclass(frozen=True)
class BettiVector:
    """b_0..b_dim with trailing zeros trimmed; empty space -> ()."""

    b: tuple[int, ...]

    @classmethod
    def make(cls, values) -> "BettiVector":
        vals = list(values)
        while vals and vals[-1] == 0:
            vals.pop()
        return cls(tuple(int(v) for v in vals))

    @property
    def total(self) -> int:
        return sum(self.b)

    def __add__(self, other: "BettiVector") -> "BettiVector":
        out = [0] * max(len(self.b), len(other.b))
        for i, v in enumerate(self.b):
            out[i] += v
        for i, v in enumerate(other.b):
            out[i] += v
        return BettiVector.make(out)

    def __getitem__(self, i: int) -> int:
        return self.b[i] if i < len(self.b) else 0


@dataclass(frozen=True)
class SimplicialComplex:
    """Abstract simplicial complex: downward-closed vertex subsets."""

    vertices: tuple[int, ...]
    simplices: frozenset[frozenset[int]]

    @classmethod
    def from_maximal(cls, maximal) -> "SimplicialComplex":
        simplices: set[frozenset[int]] = set()
        for s in maximal:
            s = frozenset(s)
            for r in range(1, len(s) + 1):
                simplices.update(frozenset(c) for c in itertools.combinations(s, r))
        vertices = tuple(sorted({v for s in simplices for v in s}))
        return cls(vertices, frozenset(simplices))

    def by_dim(self) -> dict[int, list[tuple[int, ...]]]:
        out: dict[int, list[tuple[int, ...]]] = {}
        for s in self.simplices:
            out.setdefault(len(s) - 1, []).append(tuple(sorted(s)))
        for lst in out.values():
            lst.sort()
        return out


class CellComplex:
    """Finite polyhedral complex: cells plus their face partial order."""

    def __init__(self, cells):
        self.cells = tuple(cells)

    def __len__(self):
        return len(self.cells)

    def face_pairs(self):
        """(a, b) whenever cell b is a proper face of cell a."""
        return [
            (ia, ib)
            for ia, ca in enumerate(self.cells)
            for ib, cb in enumerate(self.cells)
            if ca.pattern < cb.pattern
        ]


def reduce_lineality(component: list[PrevarietyCell]) -> tuple[int, list[PrevarietyCell]]:
    """Slice a connected component with T = (lineality space)-perp.

    The component is homeomorphic to L x (C intersect T), so the slice
    preserves homotopy type; afterwards no cell contains a line.
    """
    component = list(component)
    if not component:
        return 0, []
    n = component[0].system.n
    normals: list[list[Fraction]] = []
    for cell in component:
        p = cell.closure
        normals.extend(list(a) for a, _ in p.eq)
        normals.extend(list(a) for a, _ in p.ineq)
    lin_basis = linalg.nullspace(normals, n)
    d = len(lin_basis)
    if d == 0:
        return 0, component
    gram = [[linalg.dot(u, v) for v in lin_basis] for u in lin_basis]
    reduced = []
    for cell in component:
        coeffs = linalg.solve(gram, [linalg.dot(u, cell.witness) for u in lin_basis])
        w = cell.witness
        for c, u in zip(coeffs, lin_basis):
            w = linalg.vsub(w, linalg.vscale(c, u))
        sliced = cell.closure.intersect(HPolyhedron(n, [(u, 0) for u in lin_basis], []))
        new = PrevarietyCell(cell.system, cell.pattern, cell.dim - d, w)
        new.__dict__["closure"] = sliced
        reduced.append(new)
    return d, reduced


def bounded_subcomplex(reduced: list[PrevarietyCell]) -> CellComplex:
    """Subcomplex of bounded cells: a deformation retract of the input."""
    for cell in reduced:
        if cell.lineality_dim > 0:
            raise ValueError("cell contains a line; reduce lineality first")
    return CellComplex([c for c in reduced if c.bounded])


def triangulate(c: CellComplex) -> SimplicialComplex:
    """Order complex of the face poset: the barycentric subdivision."""
    for cell in c.cells:
        if not cell.bounded:
            raise ValueError("cannot triangulate an unbounded cell")
    lt = {(a, b) for a, b in c.face_pairs()}
    nverts = len(c.cells)

    comparable = [[a == b or (a, b) in lt or (b, a) in lt for b in range(nverts)] for a in range(nverts)]
    maximal: list[tuple[int, ...]] = []

    def extend(chain: list[int], candidates: list[int]):
        grew = False
        for v in candidates:
            if all(comparable[v][u] for u in chain):
                extend(chain + [v], [w for w in candidates if w > v])
                grew = True
        if not grew and chain:
            maximal.append(tuple(chain))

    extend([], list(range(nverts)))
    return SimplicialComplex.from_maximal(maximal)


def betti(sc: SimplicialComplex) -> BettiVector:
    """b_nu = #nu-simplices - rank d_nu - rank d_{nu+1}, over the rationals."""
    if not sc.simplices:
        return BettiVector.make([])
    by_dim = sc.by_dim()
    top = max(by_dim)
    index = {d: {s: i for i, s in enumerate(by_dim[d])} for d in by_dim}
    ranks = {0: 0}
    for d in range(1, top + 1):
        rows = []
        lower = index[d - 1]
        for s in by_dim[d]:
            row = [0] * len(lower)
            for omit in range(len(s)):
                face = s[:omit] + s[omit + 1 :]
                row[lower[face]] = (-1) ** omit
            rows.append(row)
        ranks[d] = linalg.rank(rows)
    ranks[top + 1] = 0
    return BettiVector.make(
        [len(by_dim.get(d, [])) - ranks.get(d, 0) - ranks.get(d + 1, 0) for d in range(top + 1)]
    )


def betti_of_prevariety(s: TropSystem) -> BettiVector:
    return betti_of_complex(cells_via_arrangement(s))


def betti_of_complex(c: PrevarietyComplex) -> BettiVector:
    total = BettiVector.make([])
    for component in connected_components(c):
        _, reduced = reduce_lineality(component)
        retract = bounded_subcomplex(reduced)
        total = total + betti(triangulate(retract))
    return total
