"""Small finite groups given by multiplication tables."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product


@dataclass(frozen=True)
class FiniteGroup:
    table: tuple[tuple[int, ...], ...]
    identity: int
    inverses: tuple[int, ...]
    name: str = field(default="", compare=False)

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def is_abelian(self) -> bool:
        n = self.order
        return all(self.table[a][b] == self.table[b][a] for a in range(n) for b in range(n))

    @classmethod
    def from_table(cls, table, name: str = "", check: bool = True) -> "FiniteGroup":
        table = tuple(tuple(int(x) for x in row) for row in table)
        n = len(table)
        if n == 0 or any(len(row) != n for row in table):
            raise ValueError("table must be square and non-empty")
        if any(sorted(row) != list(range(n)) for row in table):
            raise ValueError("table rows are not permutations")
        ids = [e for e in range(n) if all(table[e][a] == a and table[a][e] == a for a in range(n))]
        if len(ids) != 1:
            raise ValueError("no two-sided identity")
        e = ids[0]
        inverses = tuple(table[a].index(e) for a in range(n))
        for a in range(n):
            if table[inverses[a]][a] != e:
                raise ValueError(f"element {a} has no two-sided inverse")
        if check and n <= 64:
            for a, b, c in product(range(n), repeat=3):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    raise ValueError(f"not associative at ({a}, {b}, {c})")
        return cls(table, e, inverses, name)


def _closure(gens, mul, identity):
    elems = [identity]
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in seen:
                    seen.add(y)
                    elems.append(y)
                    nxt.append(y)
        frontier = nxt
    return elems


def _from_elements(elems, mul, name):
    index = {x: i for i, x in enumerate(elems)}
    table = [[index[mul(a, b)] for b in elems] for a in elems]
    return FiniteGroup.from_table(table, name=name)


def cyclic_group(n: int) -> FiniteGroup:
    return FiniteGroup.from_table([[(a + b) % n for b in range(n)] for a in range(n)], name=f"Z{n}")


def permutation_group(gens, name: str = "") -> FiniteGroup:
    """Group generated by permutations given as tuples of images."""
    degree = len(gens[0])

    def mul(p, q):  # apply q first
        return tuple(p[q[x]] for x in range(degree))

    elems = _closure([tuple(g) for g in gens], mul, tuple(range(degree)))
    return _from_elements(sorted(elems), mul, name)


def _quaternion_group() -> FiniteGroup:
    def mul(a, b):
        a1, b1, c1, d1 = a
        a2, b2, c2, d2 = b
        return (a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)

    one = (1, 0, 0, 0)
    elems = _closure([(0, 1, 0, 0), (0, 0, 1, 0)], mul, one)
    elems = [one] + sorted(x for x in elems if x != one)
    return _from_elements(elems, mul, "Q8")


_PERMUTATION_GROUPS = {
    "S3": [(1, 0, 2), (1, 2, 0)],
    "S4": [(1, 0, 2, 3), (1, 2, 3, 0)],
    "A4": [(1, 2, 0, 3), (1, 0, 3, 2)],
    "D4": [(1, 2, 3, 0), (0, 3, 2, 1)],
}

BUILTIN_NAMES = tuple(f"Z{n}" for n in range(2, 13)) + ("S3", "S4", "A4", "D4", "Q8")


@lru_cache(maxsize=None)
def builtin_group(name: str) -> FiniteGroup:
    if name in _PERMUTATION_GROUPS:
        return permutation_group(_PERMUTATION_GROUPS[name], name=name)
    if name == "Q8":
        return _quaternion_group()
    if name.startswith("Z") and name[1:].isdigit() and 2 <= int(name[1:]) <= 12:
        return cyclic_group(int(name[1:]))
    raise KeyError(f"unknown group {name!r}; choose from {', '.join(BUILTIN_NAMES)}")


def builtin_groups(max_order: int | None = None) -> list[FiniteGroup]:
    groups = [builtin_group(n) for n in BUILTIN_NAMES]
    if max_order is not None:
        groups = [g for g in groups if g.order <= max_order]
    return groups
