"""Min-plus tropical polynomials over exact rational constants.

A tropical polynomial is min{L_1, ..., L_m} of affine forms with integer
variable coefficients (nonnegative unless the Laurent flag is set) and
rational constant terms.  Zeros are the points where the minimum is
attained at least twice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .exactgeom import DimensionMismatch, VPolytope


class LaurentError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class LinForm:
    """Affine form a.x + b (a tropical monomial)."""

    a: tuple[int, ...]
    b: Fraction

    @classmethod
    def make(cls, a, b) -> "LinForm":
        return cls(tuple(int(x) for x in a), Fraction(b))

    def __call__(self, x) -> Fraction:
        return linalg.dot(self.a, x) + self.b

    @property
    def degree(self) -> int:
        return sum(self.a)


class TropPoly:
    """min of a deduplicated, canonically ordered list of monomials."""

    def __init__(self, monomials, laurent: bool = False):
        mons = sorted(set(LinForm.make(m.a, m.b) if isinstance(m, LinForm) else LinForm.make(*m) for m in monomials))
        if not mons:
            raise ValueError("a tropical polynomial needs at least one monomial")
        n = len(mons[0].a)
        if any(len(m.a) != n for m in mons):
            raise DimensionMismatch("monomials of mixed arity")
        if not laurent and any(c < 0 for m in mons for c in m.a):
            raise LaurentError("negative coefficient without the laurent flag")
        self.monomials = tuple(mons)
        self.n = n
        self.laurent = laurent

    def __eq__(self, other):
        return isinstance(other, TropPoly) and self.monomials == other.monomials

    def __hash__(self):
        return hash(self.monomials)

    def __repr__(self):
        return f"TropPoly(min of {len(self.monomials)} monomials, n={self.n})"

    @property
    def m(self) -> int:
        return len(self.monomials)

    def pretty(self, names=None) -> str:
        names = names or [f"x{i+1}" for i in range(self.n)]
        terms = []
        for mon in self.monomials:
            parts = []
            for c, name in zip(mon.a, names):
                if c == 1:
                    parts.append(name)
                elif c != 0:
                    parts.append(f"{c}{name}")
            if mon.b != 0 or not parts:
                parts.append(str(mon.b))
            terms.append(" + ".join(parts))
        return "min(" + ", ".join(terms) + ")"


class TropSystem:
    """Finite system of tropical polynomials in shared variables."""

    def __init__(self, n: int, polys):
        polys = tuple(polys)
        if not polys:
            raise ValueError("a system needs at least one polynomial")
        if any(f.n != n for f in polys):
            raise DimensionMismatch("polynomial arity != system arity")
        self.n = n
        self.polys = polys

    @property
    def k(self) -> int:
        return len(self.polys)

    @property
    def max_monomials(self) -> int:
        return max(f.m for f in self.polys)

    def __eq__(self, other):
        return isinstance(other, TropSystem) and (self.n, self.polys) == (other.n, other.polys)

    def __hash__(self):
        return hash((self.n, self.polys))


def eval_poly(f: TropPoly, x) -> tuple[Fraction, frozenset[int]]:
    """(min value, set of monomial indices attaining it)."""
    x = linalg.fvec(x)
    if len(x) != f.n:
        raise DimensionMismatch("point arity != polynomial arity")
    vals = [mon(x) for mon in f.monomials]
    lo = min(vals)
    return lo, frozenset(i for i, v in enumerate(vals) if v == lo)


def degree(f: TropPoly) -> int:
    if any(c < 0 for mon in f.monomials for c in mon.a):
        raise LaurentError("degree undefined for Laurent polynomials")
    return max(mon.degree for mon in f.monomials)


def is_zero(f: TropPoly, x) -> bool:
    _, argmin = eval_poly(f, x)
    return len(argmin) >= 2


def is_system_zero(s: TropSystem, x) -> bool:
    return all(is_zero(f, x) for f in s.polys)


def newton_polytope(f: TropPoly) -> VPolytope:
    return VPolytope.hull([mon.a for mon in f.monomials])


def extended_newton_polytope(f: TropPoly) -> VPolytope:
    """Hull of lifted points (a_j, b_j) plus the upward ray in x_{n+1}."""
    lifted = [tuple(mon.a) + (mon.b,) for mon in f.monomials]
    ray = tuple([0] * f.n + [1])
    return VPolytope.hull(lifted, rays=[ray])


def trop_mul(f: TropPoly, g: TropPoly) -> TropPoly:
    """Tropical product; its zero set is zeros(f) union zeros(g)."""
    if f.n != g.n:
        raise DimensionMismatch("polynomial arities differ")
    mons = set()
    for mf in f.monomials:
        for mg in g.monomials:
            mons.add(LinForm.make(linalg.vadd(mf.a, mg.a), mf.b + mg.b))
    return TropPoly(mons, laurent=f.laurent or g.laurent)


def drop_dominated(f: TropPoly) -> TropPoly:
    """Remove monomials strictly dominated by a parallel one.

    Of monomials sharing a coefficient vector only the smallest constant
    can ever attain the minimum; argmin sets (hence zeros) are unchanged.
    """
    best: dict[tuple[int, ...], LinForm] = {}
    for mon in f.monomials:
        cur = best.get(mon.a)
        if cur is None or mon.b < cur.b:
            best[mon.a] = mon
    return TropPoly(best.values(), laurent=f.laurent)


def make_coeffs_nonneg(f: TropPoly) -> TropPoly:
    """Add one linear form to all monomials so coefficients are >= 0.

    Argmin sets (hence zeros) are unchanged at every point.
    """
    shift = tuple(max(0, -min(mon.a[i] for mon in f.monomials)) for i in range(f.n))
    if all(s == 0 for s in shift):
        return TropPoly(f.monomials, laurent=False)
    mons = [LinForm.make(linalg.vadd(mon.a, shift), mon.b) for mon in f.monomials]
    return TropPoly(mons, laurent=False)
