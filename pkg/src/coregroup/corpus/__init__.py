"""Named input fixtures shipped with the package."""

from __future__ import annotations

from importlib import resources

from ..diagrams import Diagram

NAMES = ("unknotted_sphere", "single_arc", "spun_trefoil", "spun_figure_eight", "unoriented_pair")


def corpus_text(name: str) -> str:
    if name not in NAMES:
        raise KeyError(f"unknown corpus entry {name!r}")
    return resources.files(__name__).joinpath(f"{name}.txt").read_text()


def load(name: str) -> Diagram:
    from ..frontend.dsl import parse_input

    return parse_input(corpus_text(name), source=f"{name}.txt")


def load_all() -> dict[str, Diagram]:
    return {n: load(n) for n in NAMES}


def oriented() -> dict[str, Diagram]:
    return {n: d for n, d in load_all().items() if d.oriented}
