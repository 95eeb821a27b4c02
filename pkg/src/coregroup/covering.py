"""Cyclic covers: the mod-k exponent map, Reidemeister-Schreier rewriting and
presentations of kernels and branched covers.

Throughout, ``special`` is the generator whose powers ``x_s^u`` (0 <= u < k)
form the Schreier transversal.  The kernel of the map sending every
generator to 1 in Z_k is free on ``t = x_s^k`` and the elements

    Y(i, j) = x_s^j x_i x_s^-(j+1),    i != s, 0 <= j < k,

that is ``tau^j(y_i)`` with ``tau`` conjugation by ``x_s`` and
``y_i = x_i x_s^-1``.
"""

from __future__ import annotations

import re
from typing import NamedTuple, Sequence

from .presentations import Presentation, free_group, free_product
from .words import Letter, Word, exponent_sum, format_word, free_reduce, invert


class NotInKernelError(ValueError):
    """The word (or relator) does not map to 0 in Z_k."""


class KernelSymbol(NamedTuple):
    gen: int  # -1 marks t
    sheet: int = 0

    @property
    def is_t(self) -> bool:
        return self.gen < 0

    def __str__(self):
        return "t" if self.is_t else f"y{self.gen + 1}.{self.sheet}"


T = KernelSymbol(-1, 0)


def Y(i: int, j: int) -> KernelSymbol:
    return KernelSymbol(i, j)


KernelWord = Word


def gk_image(w: Sequence, k: int) -> int:
    if k < 2:
        raise ValueError("k must be at least 2")
    return exponent_sum(w) % k


def tau_power_conjugate(w: Sequence, j: int, special: int) -> Word:
    """Reduced form of ``x_s^j w x_s^-j`` (negative j conjugates the other way)."""
    sign = 1 if j >= 0 else -1
    power = [(special, sign)] * abs(j)
    return free_reduce(Word(power + list(w) + [(special, -sign)] * abs(j)))


def rewrite_kernel_word(w: Sequence, k: int, special: int) -> KernelWord:
    """Rewrite a kernel element over the alphabet {t, Y(i, j)}.

    Streams the letters while tracking the coset ``x_s^u`` of the prefix read
    so far.  Crossing from sheet k-1 back to sheet 0 emits ``t``.
    """
    if gk_image(w, k) != 0:
        raise NotInKernelError(f"word {format_word(w)} has exponent sum "
                               f"{exponent_sum(w)}, not divisible by {k}")
    out: list[tuple[KernelSymbol, int]] = []
    u = 0
    for g, s in w:
        if s > 0:
            if g != special:
                out.append((Y(g, u), 1))
            if u == k - 1:
                out.append((T, 1))
            u = (u + 1) % k
        else:
            if u == 0:
                out.append((T, -1))
            u = (u - 1) % k
            if g != special:
                out.append((Y(g, u), -1))
    assert u == 0
    return free_reduce(out)


def expand_kernel_word(kw: Sequence, k: int, special: int) -> Word:
    """Substitute ``t -> x_s^k`` and ``Y(i, j) -> x_s^j x_i x_s^-(j+1)``."""
    out: list[tuple[int, int]] = []
    for sym, e in kw:
        if sym.is_t:
            piece = [(special, 1)] * k
        else:
            j = sym.sheet
            piece = [(special, 1)] * j + [(sym.gen, 1)] + [(special, -1)] * (j + 1)
        if e < 0:
            piece = list(invert(piece))
        out.extend(piece)
    return free_reduce(out)


_KSYM = re.compile(r"^(?:(t)|y([1-9][0-9]*)\.([0-9]+))(\^-1)?$")


def format_kernel_word(kw: Sequence) -> str:
    if not kw:
        return "1"
    return " ".join(str(sym) + ("" if e > 0 else "^-1") for sym, e in kw)


def parse_kernel_word(text: str) -> KernelWord:
    tokens = text.split()
    if tokens == ["1"]:
        return Word()
    letters = []
    for tok in tokens:
        m = _KSYM.match(tok)
        if not m:
            raise ValueError(f"malformed kernel symbol {tok!r}")
        is_t, i, j, inv = m.groups()
        sym = T if is_t else Y(int(i) - 1, int(j))
        letters.append(Letter(sym, -1 if inv else 1))
    return Word(letters)


def _check_balanced(base: Presentation, k: int):
    for s, r in enumerate(base.relators):
        if gk_image(r, k) != 0:
            raise NotInKernelError(
                f"relator {s + 1} ({base.format_relator(r)}) has exponent sum "
                f"{exponent_sum(r)}, not divisible by {k}")


def _kernel_symbols(n: int, k: int, sheets: int) -> list[KernelSymbol]:
    return [Y(i, j) for i in range(n) for j in range(sheets)]


def _to_presentation(symbols: list[KernelSymbol], words, name: str) -> Presentation:
    index = {sym: a for a, sym in enumerate(symbols)}
    rels = tuple(Word((index[sym], e) for sym, e in w) for w in words)
    return Presentation(tuple(str(sym) for sym in symbols), rels, name=name)


def kernel_relator_words(base: Presentation, k: int, sheets=None) -> list[KernelWord]:
    """Rewrites of ``tau^j(r_s)`` over the kernel alphabet, ordered by (s, j).

    ``base`` is taken inside ``G * Z``: the adjoined generator has index
    ``base.ngens`` and is the special generator.
    """
    _check_balanced(base, k)
    special = base.ngens
    js = range(k) if sheets is None else sheets
    return [rewrite_kernel_word(tau_power_conjugate(r, j, special), k, special)
            for r in base.relators for j in js]


def kernel_presentation(base: Presentation, k: int) -> Presentation:
    """Presentation of the kernel of ``G * Z -> Z_k`` on nk+1 generators."""
    n = base.ngens
    symbols = [T] + _kernel_symbols(n, k, k)
    return _to_presentation(symbols, kernel_relator_words(base, k), base.name)


def _eliminate_top_sheet(kw: KernelWord, k: int) -> KernelWord:
    # t = 1 and Y(i, k-1) = (Y(i,0) ... Y(i,k-2))^-1
    out = []
    for sym, e in kw:
        if sym.is_t:
            continue
        if sym.sheet == k - 1:
            prod = [(Y(sym.gen, j), 1) for j in range(k - 1)]
            out.extend(invert(prod) if e > 0 else prod)
        else:
            out.append((sym, e))
    return free_reduce(out)


def branched_presentation(base: Presentation, k: int, reduced: bool = True,
                          include_top_orbit: bool = False) -> Presentation:
    """Presentation of the cover of ``G * Z`` branched over all meridians.

    With ``reduced`` (the default) the result has generators Y(i, j),
    j < k-1, and relators for the sheets j < k-1 only; it presents the
    branched cover group free-producted with k-1 copies of Z.
    ``include_top_orbit`` appends the j = k-1 relator orbit, which is
    redundant.  With ``reduced=False`` the full kernel presentation is
    returned together with the relators ``t`` and the rewrites of
    ``x_i^k``.
    """
    n = base.ngens
    if not reduced:
        special = n
        symbols = [T] + _kernel_symbols(n, k, k)
        words = kernel_relator_words(base, k)
        words.append(Word([(T, 1)]))
        words += [rewrite_kernel_word([(i, 1)] * k, k, special) for i in range(n)]
        return _to_presentation(symbols, words, base.name)
    words = kernel_relator_words(base, k, range(k - 1))
    if include_top_orbit:
        words += kernel_relator_words(base, k, [k - 1])
    words = [_eliminate_top_sheet(w, k) for w in words]
    return _to_presentation(_kernel_symbols(n, k, k - 1), words, base.name)


def _schreier_rewrite(w: Sequence, k: int) -> list[tuple[tuple[int, int], int]]:
    out = []
    u = 0
    for g, s in w:
        if s > 0:
            out.append(((u, g), 1))
            u = (u + 1) % k
        else:
            u = (u - 1) % k
            out.append(((u, g), -1))
    assert u == 0
    return out


def direct_branched_presentation(base: Presentation, k: int, axis: int = 0) -> Presentation:
    """Presentation of the k-fold branched cover group straight from ``base``.

    Reidemeister-Schreier for the kernel of ``base -> Z_k`` over the
    transversal of powers of ``x_axis``, followed by killing the k-th powers
    of all generators (every meridian is conjugate to one of them).
    Schreier generator ``s(u, x_i) = x_axis^u x_i x_axis^-(u+1 mod k)`` is
    named ``<x_i>.<u>``.
    """
    n = base.ngens
    if n == 0:
        raise ValueError("direct cover needs at least one generator")
    if not 0 <= axis < n:
        raise ValueError(f"axis {axis} out of range for {n} generators")
    if k < 2:
        raise ValueError("k must be at least 2")
    _check_balanced(base, k)

    keys = [(u, i) for i in range(n) for u in range(k)
            if not (i == axis and u < k - 1)]
    index = {key: a for a, key in enumerate(keys)}

    def rewrite(w):
        letters = [(index[key], e) for key, e in _schreier_rewrite(w, k) if key in index]
        return free_reduce(letters)

    rels = [rewrite(tau_power_conjugate(r, j, axis))
            for r in base.relators for j in range(k)]
    rels += [rewrite(tau_power_conjugate([(i, 1)] * k, u, axis))
             for i in range(n) for u in range(k)]
    names = tuple(f"{base.generator_names[i]}.{u}" for u, i in keys)
    return Presentation(names, tuple(rels), name=base.name)


def branched_with_free_factors(base: Presentation, k: int, axis: int = 0) -> Presentation:
    """``direct_branched_presentation`` free-producted with k-1 copies of Z."""
    return free_product(direct_branched_presentation(base, k, axis), free_group(k - 1))

