from __future__ import annotations

from dataclasses import dataclass

from sympy import factorint

from ..presentations import Presentation, relator_matrix
from .snf import smith_normal_form


@dataclass(frozen=True)
class AbelianInvariants:
    """Z^free_rank + Z_d1 + Z_d2 + ... with d1 | d2 | ..."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        if any(d < 2 for d in self.torsion):
            raise ValueError("torsion coefficients must be at least 2")
        if any(b % a for a, b in zip(self.torsion, self.torsion[1:])):
            raise ValueError(f"torsion {self.torsion} is not a divisibility chain")

    def as_dict(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    def __str__(self):
        parts = ["Z"] * self.free_rank + [f"Z{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def abelian_invariants(p: Presentation) -> AbelianInvariants:
    factors = smith_normal_form(relator_matrix(p))
    nonzero = [d for d in factors if d]
    return AbelianInvariants(p.ngens - len(nonzero), tuple(d for d in nonzero if d > 1))


def invariant_factors_of(orders) -> tuple[int, ...]:
    """Renormalize cyclic orders into a divisibility chain (orders 1 dropped)."""
    powers: dict[int, list[int]] = {}
    for n in orders:
        for prime, e in factorint(n).items():
            powers.setdefault(prime, []).append(prime**e)
    for lst in powers.values():
        lst.sort(reverse=True)
    length = max((len(v) for v in powers.values()), default=0)
    chain = []
    for i in range(length):
        d = 1
        for lst in powers.values():
            if i < len(lst):
                d *= lst[i]
        chain.append(d)
    return tuple(sorted(chain))


def merge(a: AbelianInvariants, b: AbelianInvariants) -> AbelianInvariants:
    """Invariants of the direct sum, i.e. of the abelianized free product."""
    return AbelianInvariants(a.free_rank + b.free_rank,
                             invariant_factors_of(a.torsion + b.torsion))
