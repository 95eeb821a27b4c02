"""Consistency checks between the core group and branched cover presentations.

No check attempts an isomorphism proof.  Two presentations are compared
through their abelianizations and homomorphism counts into finite groups;
agreement is evidence, disagreement is a counterexample.  A homomorphism
count that runs out of budget yields an inconclusive check, never a failed
one.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Iterable

from ..covering import branched_presentation, branched_with_free_factors
from ..diagrams import Diagram, core_presentation, unoriented_wirtinger, wirtinger_presentation
from ..presentations import Presentation
from ..words import cyclic_normalize, format_word
from .abelian import abelian_invariants
from .groups import FiniteGroup
from .homcount import DEFAULT_BUDGET, BudgetExceeded, hom_count

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"


@dataclass
class Check:
    name: str
    expected: Any
    computed: Any
    status: str

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def as_dict(self) -> dict:
        return {"name": self.name, "expected": self.expected,
                "computed": self.computed, "status": self.status}


@dataclass
class VerificationReport:
    subject: str
    inputs: str
    checks: list[Check] = field(default_factory=list)

    @property
    def overall(self) -> str:
        statuses = {c.status for c in self.checks}
        if FAIL in statuses:
            return FAIL
        if INCONCLUSIVE in statuses:
            return INCONCLUSIVE
        return PASS

    @property
    def passed(self) -> bool:
        return self.overall == PASS

    def as_dict(self) -> dict:
        return {"subject": self.subject, "inputs": self.inputs,
                "checks": [c.as_dict() for c in self.checks], "overall": self.overall}

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        rows = [(c.name, _show(c.expected), _show(c.computed), c.status) for c in self.checks]
        head = ("check", "expected", "computed", "status")
        widths = [max(len(r[i]) for r in rows + [head]) for i in range(4)]
        line = "  ".join("{:<%d}" % w for w in widths)
        out = [f"subject: {self.subject}", f"inputs:  {self.inputs}", "",
               line.format(*head), line.format(*("-" * w for w in widths))]
        out += [line.format(*r) for r in rows]
        out += ["", f"overall: {self.overall}"]
        return "\n".join(l.rstrip() for l in out)


def _show(v) -> str:
    if isinstance(v, dict) and "free_rank" in v:
        return f"({v['free_rank']}, {v['torsion']})"
    if isinstance(v, list):
        return "{" + ", ".join(map(str, v)) + "}"
    return str(v)


def _compare(name, expected, computed) -> Check:
    return Check(name, expected, computed, PASS if expected == computed else FAIL)


def _invariant_checks(prefix: str, left: Presentation, right: Presentation,
                      targets: Iterable[FiniteGroup], budget: int) -> list[Check]:
    checks = [_compare(f"{prefix}abelian", abelian_invariants(left).as_dict(),
                       abelian_invariants(right).as_dict())]
    for t in targets:
        name = f"{prefix}homs[{t.name}]"
        try:
            a = hom_count(left, t, budget)
            b = hom_count(right, t, budget)
        except BudgetExceeded as exc:
            checks.append(Check(name, None, str(exc), INCONCLUSIVE))
            continue
        checks.append(_compare(name, a, b))
    return checks


def normalized_relators(p: Presentation, names=None) -> list[str]:
    """Sorted non-empty relators in cyclic normal form, as text."""
    names = p.generator_names if names is None else names
    words = [cyclic_normalize(r) for r in p.relators]
    return sorted(format_word(w, names) for w in words if w)


def cover_base(d: Diagram) -> Presentation:
    """Knot-group presentation used as the base of cover constructions."""
    return wirtinger_presentation(d) if d.oriented else unoriented_wirtinger(d)


def verify_core_double_cover(d: Diagram, targets: Iterable[FiniteGroup],
                             budget: int = DEFAULT_BUDGET) -> VerificationReport:
    """Core group versus (double branched cover group) * Z.

    Works for unoriented diagrams too, through the Wirtinger presentation
    with squared generators.
    """
    targets = list(targets)
    base = cover_base(d)
    core = core_presentation(d)
    subject = "core-double-cover" if d.oriented else "unoriented-core-double-cover"
    report = VerificationReport(
        subject, f"diagram {d.name or '<unnamed>'} ({len(d.regions)} regions, "
                 f"{len(d.arcs)} arcs, {'oriented' if d.oriented else 'unoriented'}); "
                 f"targets {','.join(t.name for t in targets) or '-'}")

    # with k = 2 the cover generator Y(i,0) has the index of region i
    cover = branched_presentation(base, 2)
    report.checks.append(_compare(
        "relators",
        normalized_relators(core),
        normalized_relators(cover, core.generator_names),
    ))
    report.checks += _invariant_checks("", core, branched_with_free_factors(base, 2), targets, budget)
    return report


def verify_cyclic_cover(base: Presentation, k: int, targets: Iterable[FiniteGroup],
                        budget: int = DEFAULT_BUDGET) -> VerificationReport:
    """Eliminated kernel presentation versus (k-fold branched cover) * F_{k-1}.

    Also checks that appending the dropped top-sheet relator orbit changes
    no invariant.
    """
    targets = list(targets)
    report = VerificationReport(
        "cyclic-cover", f"presentation {base.name or '<unnamed>'} ({base.ngens} generators, "
                        f"{len(base.relators)} relators); k={k}; "
                        f"targets {','.join(t.name for t in targets) or '-'}")
    cover = branched_presentation(base, k)
    direct = branched_with_free_factors(base, k)
    report.checks += _invariant_checks("", cover, direct, targets, budget)
    report.checks += verify_redundancy(base, k, targets, budget).checks
    return report


def verify_redundancy(base: Presentation, k: int, targets: Iterable[FiniteGroup],
                      budget: int = DEFAULT_BUDGET) -> VerificationReport:
    """The top-sheet relator orbit follows from the others."""
    targets = list(targets)
    report = VerificationReport("redundancy", f"presentation {base.name or '<unnamed>'}; k={k}")
    report.checks += _invariant_checks(
        "redundancy:", branched_presentation(base, k),
        branched_presentation(base, k, include_top_orbit=True), targets, budget)
    return report
