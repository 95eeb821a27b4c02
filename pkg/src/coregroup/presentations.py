"""Finitely presented groups as plain data."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .words import (
    Word,
    cyclic_normalize,
    cyclic_reduce,
    exponent_vector,
    format_word,
    free_reduce,
    invert,
)


@dataclass(frozen=True)
class Presentation:
    generator_names: tuple[str, ...]
    relators: tuple[Word, ...] = ()
    name: str = field(default="", compare=False)

    def __post_init__(self):
        names = tuple(self.generator_names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")
        n = len(names)
        rels = []
        for r in self.relators:
            r = free_reduce(r)
            for letter in r:
                if not (isinstance(letter.generator, int) and 0 <= letter.generator < n):
                    raise ValueError(f"relator letter {letter} out of range for {n} generators")
            rels.append(r)
        object.__setattr__(self, "generator_names", names)
        object.__setattr__(self, "relators", tuple(rels))

    @property
    def ngens(self) -> int:
        return len(self.generator_names)

    def format_relator(self, r: Word) -> str:
        return format_word(r, self.generator_names)

    def __str__(self):
        gens = ", ".join(self.generator_names)
        rels = ", ".join(self.format_relator(r) for r in self.relators)
        return f"<{gens} | {rels}>"


@dataclass(frozen=True)
class IntegerMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


def free_group(rank: int, prefix: str = "z") -> Presentation:
    return Presentation(tuple(f"{prefix}{i + 1}" for i in range(rank)))


def _fresh(name: str, taken: set[str]) -> str:
    if name not in taken:
        return name
    i = 2
    while f"{name}_{i}" in taken:
        i += 1
    return f"{name}_{i}"


def free_product(p: Presentation, q: Presentation) -> Presentation:
    """Disjoint union of generators and relators; q's names get a suffix on collision."""
    taken = set(p.generator_names)
    names = list(p.generator_names)
    for n in q.generator_names:
        n = _fresh(n, taken)
        taken.add(n)
        names.append(n)
    shift = p.ngens
    shifted = [Word((g + shift, s) for g, s in r) for r in q.relators]
    return Presentation(tuple(names), p.relators + tuple(shifted), name=p.name)


def add_free_generators(p: Presentation, m: int) -> Presentation:
    if m < 0:
        raise ValueError("m must be non-negative")
    taken = set(p.generator_names)
    names = list(p.generator_names)
    for _ in range(m):
        n = _fresh(f"x{len(names) + 1}", taken)
        taken.add(n)
        names.append(n)
    return Presentation(tuple(names), p.relators, name=p.name)


def relator_matrix(p: Presentation) -> IntegerMatrix:
    rows = tuple(tuple(exponent_vector(r, p.ngens)) for r in p.relators)
    return IntegerMatrix(len(rows), p.ngens, rows)


def _find_elimination(relators: Sequence[Word]):
    order = sorted(range(len(relators)), key=lambda s: (len(relators[s]), s))
    for s in order:
        r = relators[s]
        counts: dict[int, int] = {}
        for g, _ in r:
            counts[g] = counts.get(g, 0) + 1
        for g in sorted(counts, reverse=True):
            if counts[g] == 1:
                pos = next(i for i, l in enumerate(r) if l.generator == g)
                rotated = Word(tuple(r[pos:]) + tuple(r[:pos]))
                if rotated[0].sign < 0:
                    rotated = invert(rotated)
                    rotated = Word(tuple(rotated[-1:]) + tuple(rotated[:-1]))
                # rotated = g . rest, so g = rest^-1
                return s, g, invert(rotated[1:])
    return None


def simplify(p: Presentation) -> Presentation:
    """Conservative Tietze simplification for readable output.

    Repeats until nothing changes: drop empty relators, drop relators that
    coincide up to rotation and inversion, and eliminate a generator that
    occurs exactly once in some relator (shortest relator first, latest
    generator first).
    """
    names = list(p.generator_names)
    rels = [cyclic_reduce(r) for r in p.relators]
    while True:
        seen = set()
        kept = []
        for r in rels:
            if not r:
                continue
            key = cyclic_normalize(r)
            if key in seen:
                continue
            seen.add(key)
            kept.append(r)
        rels = kept

        found = _find_elimination(rels)
        if found is None:
            break
        s, g, value = found
        rels = rels[:s] + rels[s + 1:]
        subst = []
        for r in rels:
            out = []
            for h, e in r:
                if h == g:
                    out.extend(value if e > 0 else invert(value))
                else:
                    out.append((h, e))
            subst.append(out)
        del names[g]
        rels = [cyclic_reduce(Word((h - (h > g), e) for h, e in r)) for r in subst]
    return Presentation(tuple(names), tuple(rels), name=p.name)
