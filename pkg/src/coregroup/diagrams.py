"""Combinatorial projection diagrams and the presentations read off them.

A diagram lists the visibility regions of a generically projected
codimension-two submanifold and, for each double-point stratum, the
region passing over it together with the two regions it separates
underneath.  Nothing here checks geometric realizability.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .presentations import Presentation
from .words import Word, free_reduce


class OrientationError(ValueError):
    """An oriented-only construction was applied to an unoriented diagram."""


@dataclass(frozen=True)
class Arc:
    over: str
    under_from: str
    under_to: str
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"arc sign must be +1 or -1, got {self.sign!r}")


@dataclass(frozen=True)
class Diagram:
    oriented: bool
    regions: tuple[str, ...]
    arcs: tuple[Arc, ...] = ()
    name: str = field(default="", compare=False)

    def __post_init__(self):
        regions = tuple(self.regions)
        arcs = tuple(self.arcs)
        if len(set(regions)) != len(regions):
            raise ValueError(f"duplicate region names in {regions}")
        known = set(regions)
        for arc in arcs:
            for r in (arc.over, arc.under_from, arc.under_to):
                if r not in known:
                    raise ValueError(f"arc {arc} references unknown region {r!r}")
            if not self.oriented and arc.sign != 1:
                raise ValueError("unoriented diagrams record every arc sign as +1")
        object.__setattr__(self, "regions", regions)
        object.__setattr__(self, "arcs", arcs)

    def index(self, region: str) -> int:
        return self.regions.index(region)

    def _ipq(self, arc: Arc) -> tuple[int, int, int]:
        return self.index(arc.over), self.index(arc.under_from), self.index(arc.under_to)


def _wirtinger_relator(i: int, p: int, q: int, sign: int) -> Word:
    if sign > 0:
        return free_reduce(Word([(i, 1), (p, 1), (i, -1), (q, -1)]))
    return free_reduce(Word([(i, 1), (p, -1), (i, -1), (q, 1)]))


def wirtinger_presentation(d: Diagram) -> Presentation:
    """Knot-group presentation: one conjugation relator per arc."""
    if not d.oriented:
        raise OrientationError(
            f"diagram {d.name or '<unnamed>'} is unoriented; orientation required "
            "(use unoriented_wirtinger)"
        )
    rels = tuple(_wirtinger_relator(*d._ipq(a), a.sign) for a in d.arcs)
    return Presentation(d.regions, rels, name=d.name)


def core_presentation(d: Diagram) -> Presentation:
    """Quandle-type presentation with relators ``y_i y_p^-1 y_i y_q^-1``; ignores signs."""
    rels = []
    for a in d.arcs:
        i, p, q = d._ipq(a)
        rels.append(free_reduce(Word([(i, 1), (p, -1), (i, 1), (q, -1)])))
    return Presentation(d.regions, tuple(rels), name=d.name)


def unoriented_wirtinger(d: Diagram) -> Presentation:
    """Wirtinger relators read with sign +1, plus ``x_i^2`` for every region."""
    rels = [_wirtinger_relator(*d._ipq(a), 1) for a in d.arcs]
    rels += [Word([(i, 1), (i, 1)]) for i in range(len(d.regions))]
    return Presentation(d.regions, tuple(rels), name=d.name)
