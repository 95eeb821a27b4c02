"""Counting homomorphisms from a finitely presented group into a finite group.

Every homomorphism is counted, trivial and non-surjective ones included.
The search assigns generator images depth first.  A relator with a single
unassigned generator occurring exactly once forces that generator's image,
and a relator is checked as soon as all its generators have images.  Which
generators are forced depends only on which ones are already assigned, not
on their values, so the whole schedule is compiled once into a plan of
levels: branch on one generator, then run a fixed list of forcings and
checks.  Generators that occur in no relator contribute a factor of
``|T|`` each and are never searched.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor

from ..presentations import Presentation, simplify
from .groups import FiniteGroup

DEFAULT_BUDGET = 10**9


class BudgetExceeded(RuntimeError):
    """The search visited more nodes than allowed; the count is unknown."""

    def __init__(self, budget: int):
        super().__init__(f"homomorphism search exceeded the budget of {budget} nodes")
        self.budget = budget


def compile_plan(relators: list[list[tuple[int, int]]], n: int):
    """Return ``(pre, levels)``.

    ``pre`` holds steps valid before any branching; each level is
    ``(generator, steps)``.  A step is ``("force", g, r, t)`` (solve
    relator r for the letter at position t, which is generator g) or
    ``("check", r)``.
    """
    rel_gens = [set(g for g, _ in r) for r in relators]
    single = []
    for r in relators:
        counts: dict[int, int] = {}
        for g, _ in r:
            counts[g] = counts.get(g, 0) + 1
        single.append({g: next(i for i, l in enumerate(r) if l[0] == g)
                       for g, c in counts.items() if c == 1})
    gen_rels = [[ri for ri, gs in enumerate(rel_gens) if g in gs] for g in range(n)]
    assigned: set[int] = set()
    done: set[int] = set()

    def settle():
        steps = []
        changed = True
        while changed:
            changed = False
            for ri in range(len(relators)):
                if ri in done:
                    continue
                missing = rel_gens[ri] - assigned
                if not missing:
                    steps.append(("check", ri))
                    done.add(ri)
                elif len(missing) == 1:
                    (g,) = missing
                    if g in single[ri]:
                        steps.append(("force", g, ri, single[ri][g]))
                        assigned.add(g)
                        done.add(ri)
                        changed = True
        return steps

    def choose():
        best, best_key = -1, None
        for g in range(n):
            if g in assigned:
                continue
            open_rels = [ri for ri in gen_rels[g] if ri not in done]
            tight = min((len(rel_gens[ri] - assigned) for ri in open_rels), default=n + 1)
            key = (tight, -len(open_rels), g)
            if best_key is None or key < best_key:
                best, best_key = g, key
        return best

    pre = settle()
    levels = []
    while len(assigned) < n:
        g = choose()
        assigned.add(g)
        levels.append((g, settle()))
    return pre, levels


class _Search:
    def __init__(self, p: Presentation, target: FiniteGroup, budget: int):
        used = sorted({g for r in p.relators for g, _ in r})
        local = {g: a for a, g in enumerate(used)}
        self.free = p.ngens - len(used)
        self.n = len(used)
        self.rels = [[(local[g], s) for g, s in r] for r in p.relators if r]
        pre, levels = compile_plan(self.rels, self.n)
        self.pre = [self._prepare(s) for s in pre]
        self.levels = [(g, [self._prepare(s) for s in steps]) for g, steps in levels]
        table = target.table
        inv = target.inverses
        self.table = table
        self.table_inv = [[row[inv[v]] for v in range(target.order)] for row in table]
        self.inv = inv
        self.e = target.identity
        self.order = target.order
        self.budget = budget
        self.nodes = 0

    def _prepare(self, step):
        if step[0] == "check":
            return (None, self.rels[step[1]], None, 0)
        _, g, ri, t = step
        rel = self.rels[ri]
        return (g, rel[:t], rel[t + 1:], rel[t][1])

    def _product(self, letters, assign):
        table, table_inv = self.table, self.table_inv
        x = self.e
        for g, s in letters:
            x = (table if s > 0 else table_inv)[x][assign[g]]
        return x

    def _run(self, steps, assign) -> bool:
        e = self.e
        for g, before, after, sign in steps:
            if g is None:
                if self._product(before, assign) != e:
                    return False
            else:
                ba = self.table[self._product(after, assign)][self._product(before, assign)]
                assign[g] = self.inv[ba] if sign > 0 else ba
        return True

    def _level(self, depth, assign, values=None) -> int:
        if depth == len(self.levels):
            return 1
        g, steps = self.levels[depth]
        total = 0
        for v in (range(self.order) if values is None else values):
            self.nodes += 1
            if self.nodes > self.budget:
                raise BudgetExceeded(self.budget)
            assign[g] = v
            if self._run(steps, assign):
                total += self._level(depth + 1, assign)
        return total

    def count(self, values=None) -> int:
        """Count, restricting the first branching generator to ``values`` if given."""
        assign = [0] * self.n
        if not self._run(self.pre, assign):
            return 0
        if not self.levels:
            return 1 if values is None or 0 in values else 0
        return self._level(0, assign, values)


def _count_chunk(args):
    p, target, budget, values = args
    return _Search(p, target, budget).count(values)


def hom_count(p: Presentation, target: FiniteGroup, budget: int = DEFAULT_BUDGET,
              workers: int = 1, presimplify: bool = True) -> int:
    """Number of homomorphisms from the group presented by ``p`` to ``target``.

    Raises :class:`BudgetExceeded` when more than ``budget`` search nodes
    would be visited (per worker when ``workers > 1``).  With several
    workers the images of the first branching generator are split between
    processes; the total does not depend on the split.

    With ``presimplify`` the presentation first goes through Tietze
    elimination, which never changes the group.  Cover presentations carry
    many redundant generators, and without elimination the search would
    visit every homomorphism one by one.
    """
    if presimplify:
        p = simplify(p)
    search = _Search(p, target, budget)
    factor = target.order ** search.free
    if workers <= 1:
        return factor * search.count()
    chunks = [list(range(w, target.order, workers)) for w in range(workers)]
    chunks = [c for c in chunks if c]
    with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
        parts = pool.map(_count_chunk, [(p, target, budget, c) for c in chunks])
        return factor * sum(parts)
