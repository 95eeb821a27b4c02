"""Command-line driver.

Exit codes: 0 success, 2 bad command line, 3 input parse error,
4 precondition violated, 5 verification failed, 6 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
import warnings

from ..covering import (
    NotInKernelError,
    branched_presentation,
    direct_branched_presentation,
    expand_kernel_word,
    kernel_presentation,
    rewrite_kernel_word,
)
from ..diagrams import (
    Diagram,
    OrientationError,
    core_presentation,
    unoriented_wirtinger,
    wirtinger_presentation,
)
from ..invariants import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    abelian_invariants,
    builtin_group,
    hom_count,
    verify_core_double_cover,
    verify_cyclic_cover,
)
from ..presentations import Presentation
from ..words import Word, free_reduce
from .dsl import DSLError, format_presentation, parse_input

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_PRECONDITION = 4
EXIT_VERIFY_FAILED = 5
EXIT_BUDGET = 6

COMMANDS = ("wirtinger", "core", "unoriented-wirtinger", "kernel", "cover", "direct-cover",
            "abelianize", "homcount", "verify13", "verify15", "roundtrip-selftest")
NEEDS_K = ("cover", "direct-cover", "verify15")
NEEDS_TARGETS = ("homcount", "verify13", "verify15")


class JobError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def presentation_document(p: Presentation) -> dict:
    return {"name": p.name, "generators": list(p.generator_names),
            "relators": [p.format_relator(r) for r in p.relators]}


def _emit(fmt: str, text: str, document) -> str:
    if fmt == "structured":
        return json.dumps(document, indent=2, sort_keys=True) + "\n"
    return text


def _need_diagram(block, command) -> Diagram:
    if not isinstance(block, Diagram):
        raise JobError(f"'{command}' needs a diagram block, got a presentation", EXIT_PRECONDITION)
    return block


def _base(block, command, k) -> Presentation:
    """Presentation fed to the cover constructions; unoriented input allows k = 2 only."""
    if isinstance(block, Presentation):
        return block
    if block.oriented:
        return wirtinger_presentation(block)
    if k != 2:
        raise JobError(f"'{command}' with k={k} on unoriented diagram {block.name}: "
                       "orientation required; only the double cover (k=2) is defined",
                       EXIT_PRECONDITION)
    return unoriented_wirtinger(block)


def _targets(args):
    names = [t for t in (args.targets or "").split(",") if t]
    try:
        return [builtin_group(n) for n in names]
    except KeyError as exc:
        raise JobError(str(exc.args[0]), EXIT_USAGE)


def roundtrip_selftest(trials: int = 1000, ks=(2, 3, 5), max_gens: int = 5,
                       max_len: int = 40, seed: int = 0) -> tuple[int, int]:
    """Random kernel words through rewrite then expand; returns (passed, trials)."""
    rng = random.Random(seed)
    passed = 0
    for _ in range(trials):
        k = rng.choice(ks)
        n = rng.randint(1, max_gens)
        special = rng.randrange(n)
        w = random_kernel_word(rng, n, k, max_len)
        back = expand_kernel_word(rewrite_kernel_word(w, k, special), k, special)
        passed += back == w
    return passed, trials


def random_kernel_word(rng: random.Random, n: int, k: int, max_len: int) -> Word:
    """A reduced word of length <= max_len with exponent sum divisible by k."""
    while True:
        length = rng.randint(0, max_len)
        w = free_reduce([(rng.randrange(n), rng.choice((1, -1))) for _ in range(length)])
        if sum(s for _, s in w) % k == 0:
            return w


def run(args) -> tuple[int, str]:
    """Execute one job; returns (exit code, output text)."""
    cmd, fmt = args.command, args.format
    if cmd in NEEDS_K and args.k is None:
        raise JobError(f"'{cmd}' requires --k", EXIT_USAGE)
    if args.k is not None and args.k < 2:
        raise JobError("--k must be at least 2", EXIT_PRECONDITION)
    if cmd in NEEDS_TARGETS and not args.targets:
        raise JobError(f"'{cmd}' requires --targets", EXIT_USAGE)

    if cmd == "roundtrip-selftest":
        ks = (args.k,) if args.k else (2, 3, 5)
        start = time.perf_counter()
        passed, trials = roundtrip_selftest(ks=ks, seed=args.seed)
        elapsed = time.perf_counter() - start
        ok = passed == trials
        text = (f"rewrite/expand round trip: {passed}/{trials} passed "
                f"(k in {list(ks)}) in {elapsed:.3f}s\n")
        doc = {"passed": passed, "trials": trials, "k": list(ks), "overall": "pass" if ok else "fail"}
        return (EXIT_OK if ok else EXIT_VERIFY_FAILED), _emit(fmt, text, doc)

    block = read_block(args.input)
    k = args.k

    if cmd in ("wirtinger", "core", "unoriented-wirtinger"):
        d = _need_diagram(block, cmd)
        build = {"wirtinger": wirtinger_presentation, "core": core_presentation,
                 "unoriented-wirtinger": unoriented_wirtinger}[cmd]
        p = build(d)
        return EXIT_OK, _emit(fmt, format_presentation(p), presentation_document(p))

    if cmd in ("kernel", "cover", "direct-cover"):
        k = 2 if k is None else k
        base = _base(block, cmd, k)
        if cmd == "kernel":
            p = kernel_presentation(base, k)
        elif cmd == "cover":
            p = branched_presentation(base, k, reduced=not args.unreduced)
        else:
            axis = 0
            if args.axis is not None:
                if args.axis not in base.generator_names:
                    raise JobError(f"--axis {args.axis!r} is not a generator of {base.name}",
                                   EXIT_PRECONDITION)
                axis = base.generator_names.index(args.axis)
            p = direct_branched_presentation(base, k, axis)
        return EXIT_OK, _emit(fmt, format_presentation(p), presentation_document(p))

    if cmd == "abelianize":
        p = block if isinstance(block, Presentation) else _base(block, cmd, 2)
        inv = abelian_invariants(p)
        text = f"{p.name}: {inv}  (free rank {inv.free_rank}, torsion {list(inv.torsion)})\n"
        return EXIT_OK, _emit(fmt, text, {"name": p.name, **inv.as_dict()})

    if cmd == "homcount":
        p = block if isinstance(block, Presentation) else _base(block, cmd, 2)
        counts = {}
        for t in _targets(args):
            try:
                counts[t.name] = hom_count(p, t, args.budget, workers=args.workers)
            except BudgetExceeded as exc:
                raise JobError(f"homcount into {t.name}: {exc}", EXIT_BUDGET)
        text = "".join(f"{name}\t{c}\n" for name, c in counts.items())
        return EXIT_OK, _emit(fmt, text, {"name": p.name, "counts": counts})

    if cmd == "verify13":
        report = verify_core_double_cover(_need_diagram(block, cmd), _targets(args), args.budget)
    else:
        report = verify_cyclic_cover(_base(block, cmd, k), k, _targets(args), args.budget)
    text = report.to_text() + "\n"
    code = {"pass": EXIT_OK, "fail": EXIT_VERIFY_FAILED, "inconclusive": EXIT_BUDGET}[report.overall]
    return code, _emit(fmt, text, report.as_dict())


def read_block(path):
    if path in (None, "-"):
        text, source = sys.stdin.read(), "<stdin>"
    else:
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as exc:
            raise JobError(f"cannot read {path}: {exc.strerror}", EXIT_USAGE)
        source = path
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            block = parse_input(text, source)
    except DSLError as exc:
        raise JobError(f"parse error: {exc}", EXIT_PARSE)
    except ValueError as exc:
        raise JobError(f"parse error: {source}: {exc}", EXIT_PARSE)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    return block


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coregroup",
        description="Build Wirtinger, core and cyclic branched cover presentations "
                    "and compare their invariants.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("input", nargs="?", help="input file (default: standard input)")
    parser.add_argument("--k", type=int, help="cover degree")
    parser.add_argument("--targets", help="comma-separated finite groups, e.g. S3,Z3")
    parser.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="search node bound for homomorphism counts")
    parser.add_argument("--format", choices=("text", "structured"), default="text")
    parser.add_argument("--axis", help="transversal generator for direct-cover")
    parser.add_argument("--unreduced", action="store_true",
                        help="cover: keep t, all relator orbits and the power relators")
    parser.add_argument("--workers", type=int, default=1, help="processes for homcount")
    parser.add_argument("--seed", type=int, default=0, help="roundtrip-selftest seed")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code, out = run(args)
    except JobError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (OrientationError, NotInKernelError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
