"""Exact verification of the three face/Betti upper bounds.

Dense bound: phi(V) <= (2^(r+1) - 1) * r! * Vol_r(P_1 + ... + P_k), where
P_i are the Newton polytopes and r is the dimension of their Minkowski sum
(assumed positive; r = 0 is reported as degenerate).  Degree bound:
b(V) <= (2^(n+1) - 1) * (k*d)^n.  Sparse bound:
phi(V) <= n * 2^n * binom(k*binom(m,2), n) for n <= k*binom(m,2); smaller
systems fall back to the essential-dimension maximum and are flagged.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .exactgeom import RadVal, minkowski_sum
from .prevariety import cells_via_arrangement, face_count
from .topology import betti_of_complex
from .tropical import LaurentError, TropSystem, degree, newton_polytope


def _newton_sum_volume(s: TropSystem) -> tuple[int, RadVal]:
    total = newton_polytope(s.polys[0])
    for f in s.polys[1:]:
        total = minkowski_sum(total, newton_polytope(f))
    return total.affine_dim(), total.volume()


def dense_volume_bound(s: TropSystem) -> tuple[int, RadVal]:
    """(r, (2^(r+1)-1) * r! * Vol_r of the summed Newton polytopes)."""
    r, vol = _newton_sum_volume(s)
    return r, vol.scaled((2 ** (r + 1) - 1) * math.factorial(r))


def degree_bound(s: TropSystem) -> int:
    """(2^(n+1) - 1) * (k*d)^n, d the maximum tropical degree."""
    d = max(degree(f) for f in s.polys)
    return (2 ** (s.n + 1) - 1) * (s.k * d) ** s.n


def sparse_bound(n: int, k: int, m: int) -> int:
    """n * 2^n * binom(k*binom(m,2), n), essentialized when n exceeds it."""
    ell = k * math.comb(m, 2)
    if n <= ell:
        return n * 2**n * math.comb(ell, n)
    return max((c * 2**c * math.comb(ell, c) for c in range(ell + 1)), default=0)


@dataclass(frozen=True)
class BoundReport:
    n: int
    k: int
    m: int
    d: int | None
    r: int
    phi: int
    total_betti: int
    vol_r: RadVal
    dense_bound: RadVal
    dense_degenerate: bool
    degree_bound: int | None
    sparse_bound: int
    sparse_degenerate: bool
    betti_le_phi: bool
    phi_le_dense: bool | None
    phi_le_sparse: bool
    betti_le_degree: bool | None

    @property
    def all_ok(self) -> bool:
        return (
            self.betti_le_phi
            and self.phi_le_sparse
            and self.phi_le_dense is not False
            and self.betti_le_degree is not False
        )


def verify_bounds(s: TropSystem) -> BoundReport:
    complex_ = cells_via_arrangement(s)
    phi = face_count(complex_)
    total_b = betti_of_complex(complex_).total
    r, vol = _newton_sum_volume(s)
    dense = vol.scaled((2 ** (r + 1) - 1) * math.factorial(r))
    try:
        d = max(degree(f) for f in s.polys)
        deg_bound: int | None = degree_bound(s)
        betti_le_degree: bool | None = total_b <= deg_bound
    except LaurentError:
        d = None
        deg_bound = None
        betti_le_degree = None
    m = s.max_monomials
    sp_bound = sparse_bound(s.n, s.k, m)
    dense_degenerate = r == 0
    return BoundReport(
        n=s.n,
        k=s.k,
        m=m,
        d=d,
        r=r,
        phi=phi,
        total_betti=total_b,
        vol_r=vol,
        dense_bound=dense,
        dense_degenerate=dense_degenerate,
        degree_bound=deg_bound,
        sparse_bound=sp_bound,
        sparse_degenerate=s.n > s.k * math.comb(m, 2),
        betti_le_phi=total_b <= phi,
        phi_le_dense=None if dense_degenerate else not dense < phi,
        phi_le_sparse=phi <= sp_bound,
        betti_le_degree=betti_le_degree,
    )
