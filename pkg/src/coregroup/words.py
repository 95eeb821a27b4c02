"""Free-group words over an indexed alphabet.

A word is an immutable tuple of :class:`Letter` values.  Generators are
usually integer indices into a presentation's generator list, but any
hashable, orderable value works; the covering module uses this to build
words over the kernel alphabet.
"""

from __future__ import annotations

import re
from typing import Iterable, NamedTuple, Sequence


class Letter(NamedTuple):
    generator: int
    sign: int

    def inverse(self) -> "Letter":
        return Letter(self.generator, -self.sign)


def _letter_key(letter):
    # +1 sorts before -1
    return (letter.generator, 0 if letter.sign > 0 else 1)


class Word(tuple):
    """A sequence of signed generator letters, with value semantics.

    ``w1 * w2`` is the freely reduced product, ``~w`` the inverse and
    ``w ** n`` the reduced n-th power.  Construction does not reduce;
    call :func:`free_reduce` for that.
    """

    def __new__(cls, letters: Iterable = ()):
        out = []
        for item in letters:
            g, s = item
            if s not in (1, -1):
                raise ValueError(f"letter sign must be +1 or -1, got {s!r}")
            out.append(Letter(g, s))
        return super().__new__(cls, out)

    @classmethod
    def from_ints(cls, ints: Iterable[int]) -> "Word":
        """Build a word from signed 1-based integers, e.g. ``[1, -2]`` is x1 x2^-1."""
        letters = []
        for n in ints:
            if n == 0:
                raise ValueError("0 is not a letter")
            letters.append((abs(n) - 1, 1 if n > 0 else -1))
        return cls(letters)

    def to_ints(self) -> list[int]:
        return [(l.generator + 1) * l.sign for l in self]

    def generators(self) -> set:
        return {l.generator for l in self}

    def __mul__(self, other):
        return free_reduce(Word(tuple(self) + tuple(other)))

    def __invert__(self):
        return invert(self)

    def __pow__(self, n: int):
        base = self if n >= 0 else invert(self)
        return free_reduce(Word(tuple(base) * abs(n)))

    def __getitem__(self, item):
        got = super().__getitem__(item)
        return Word(got) if isinstance(item, slice) else got

    def __repr__(self):
        return f"Word({format_word(self)!r})"


IDENTITY = Word()


def free_reduce(w: Sequence) -> Word:
    stack: list[Letter] = []
    for letter in w:
        g, s = letter
        if stack and stack[-1].generator == g and stack[-1].sign == -s:
            stack.pop()
        else:
            stack.append(Letter(g, s))
    return Word(stack)


def invert(w: Sequence) -> Word:
    return Word((g, -s) for g, s in reversed(w))


def conjugate(w: Sequence, c: Sequence) -> Word:
    """Reduced form of ``c w c^-1``."""
    return free_reduce(Word(tuple(c) + tuple(w) + tuple(invert(c))))


def cyclic_reduce(w: Sequence) -> Word:
    w = free_reduce(w)
    i, j = 0, len(w)
    while j - i >= 2 and w[i].generator == w[j - 1].generator and w[i].sign == -w[j - 1].sign:
        i += 1
        j -= 1
    return w[i:j]


def cyclic_normalize(w: Sequence) -> Word:
    """Canonical representative of the conjugacy-and-inversion class of ``w``.

    The word is cyclically reduced, then the least rotation of it or its
    inverse is returned, letters ordered by (generator, +1 before -1).
    """
    r = cyclic_reduce(w)
    if not r:
        return r
    candidates = []
    for v in (r, invert(r)):
        for i in range(len(v)):
            candidates.append(tuple(v[i:]) + tuple(v[:i]))
    best = min(candidates, key=lambda c: [_letter_key(l) for l in c])
    return Word(best)


def exponent_sum(w: Sequence) -> int:
    return sum(s for _, s in w)


def exponent_vector(w: Sequence, n: int) -> list[int]:
    row = [0] * n
    for g, s in w:
        row[g] += s
    return row


# -- text syntax ------------------------------------------------------------

_TOKEN = re.compile(r"^([A-Za-z_][A-Za-z0-9_.']*)(\^-1)?$")


def default_name(index: int) -> str:
    return f"x{index + 1}"


def format_word(w: Sequence, names: Sequence[str] | None = None) -> str:
    """Whitespace-separated tokens ``g`` / ``g^-1``; the empty word prints as ``1``."""
    if not w:
        return "1"
    parts = []
    for g, s in w:
        if names is not None:
            name = names[g]
        elif isinstance(g, int):
            name = default_name(g)
        else:
            name = str(g)
        parts.append(name if s > 0 else name + "^-1")
    return " ".join(parts)


def parse_token(token: str, lookup) -> Letter:
    m = _TOKEN.match(token)
    if not m:
        raise ValueError(f"malformed token {token!r}")
    name, inv = m.groups()
    g = lookup(name)
    return Letter(g, -1 if inv else 1)


def parse_word(text: str, names: Sequence[str] | None = None) -> Word:
    """Inverse of :func:`format_word`.

    Without ``names`` the tokens must be ``x<k>`` with k >= 1.
    """
    if names is not None:
        index = {n: i for i, n in enumerate(names)}

        def lookup(name):
            if name not in index:
                raise ValueError(f"unknown generator {name!r}")
            return index[name]
    else:
        def lookup(name):
            m = re.fullmatch(r"x([1-9][0-9]*)", name)
            if not m:
                raise ValueError(f"unknown generator {name!r}")
            return int(m.group(1)) - 1

    tokens = text.split()
    if tokens == ["1"]:
        return IDENTITY
    return Word(parse_token(t, lookup) for t in tokens)
