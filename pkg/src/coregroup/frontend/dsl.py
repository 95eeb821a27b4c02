"""Line-oriented text format for diagrams and presentations.

::

    # comments run to end of line
    diagram spun_trefoil oriented
    regions a b c
    arc over=a from=b to=c sign=+

    presentation trefoil
    gens a b c
    rel a b a^-1 c^-1

A document holds any number of blocks.  ``rel 1`` (or a bare ``rel``) is
the empty relator.
"""

from __future__ import annotations

import re
import warnings
from typing import Union

from ..diagrams import Arc, Diagram
from ..presentations import Presentation
from ..words import Letter, Word, format_word

NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_.']*$")
_GEN_TOKEN = re.compile(r"^([A-Za-z_][A-Za-z0-9_.']*)(\^-1)?$")

Block = Union[Diagram, Presentation]


class DSLError(ValueError):
    def __init__(self, message: str, line: int, column: int, source: str = "<input>"):
        super().__init__(f"{source}:{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class DSLWarning(UserWarning):
    pass


def _tokens(text: str):
    return [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", text)]


class _Parser:
    def __init__(self, text: str, source: str):
        self.source = source
        self.lines = text.splitlines()
        self.blocks: list[Block] = []
        self.current = None  # dict describing the open block

    def error(self, msg, line, col):
        raise DSLError(msg, line, col, self.source)

    def name(self, tok, col, line, what):
        if not NAME.match(tok):
            self.error(f"malformed {what} name {tok!r}", line, col)
        return tok

    def parse(self) -> list[Block]:
        for lineno, raw in enumerate(self.lines, start=1):
            text = raw.split("#", 1)[0]
            toks = _tokens(text)
            if not toks:
                continue
            head, col = toks[0]
            handler = getattr(self, "do_" + head, None)
            if handler is None:
                self.error(f"unknown keyword {head!r}", lineno, col)
            handler(toks[1:], lineno, col)
        self.close()
        return self.blocks

    # -- block headers

    def close(self):
        cur = self.current
        if cur is None:
            return
        self.current = None
        if cur["names"] is None:
            what = "regions" if cur["kind"] == "diagram" else "gens"
            self.error(f"{cur['kind']} {cur['title']} has no '{what}' line", cur["line"], 1)
        if cur["kind"] == "diagram":
            self.blocks.append(Diagram(cur["oriented"], tuple(cur["names"]),
                                       tuple(cur["items"]), name=cur["title"]))
        else:
            self.blocks.append(Presentation(tuple(cur["names"]), tuple(cur["items"]),
                                            name=cur["title"]))

    def _open(self, kind, args, line, col):
        self.close()
        if not args:
            self.error(f"'{kind}' needs a name", line, col + len(kind))
        title, tcol = args[0]
        self.name(title, tcol, line, kind)
        self.current = {"kind": kind, "title": title, "line": line,
                        "names": None, "index": {}, "items": []}
        return title

    def do_diagram(self, args, line, col):
        self._open("diagram", args, line, col)
        if len(args) != 2 or args[1][0] not in ("oriented", "unoriented"):
            at = args[1][1] if len(args) > 1 else col
            self.error("expected 'oriented' or 'unoriented' after the diagram name", line, at)
        self.current["oriented"] = args[1][0] == "oriented"

    def do_presentation(self, args, line, col):
        self._open("presentation", args, line, col)
        if len(args) != 1:
            self.error("unexpected text after the presentation name", line, args[1][1])

    def _expect(self, kind, keyword, line, col):
        cur = self.current
        if cur is None or cur["kind"] != kind:
            self.error(f"'{keyword}' outside a {kind} block", line, col)
        return cur

    def _names(self, kind, keyword, args, line, col):
        cur = self._expect(kind, keyword, line, col)
        if cur["names"] is not None:
            self.error(f"second '{keyword}' line in {kind} {cur['title']}", line, col)
        names = []
        for tok, tcol in args:
            self.name(tok, tcol, line, "region" if kind == "diagram" else "generator")
            if tok in cur["index"]:
                self.error(f"duplicate name {tok!r}", line, tcol)
            cur["index"][tok] = len(names)
            names.append(tok)
        cur["names"] = names

    def do_regions(self, args, line, col):
        self._names("diagram", "regions", args, line, col)

    def do_gens(self, args, line, col):
        self._names("presentation", "gens", args, line, col)

    def do_arc(self, args, line, col):
        cur = self._expect("diagram", "arc", line, col)
        if cur["names"] is None:
            self.error("'arc' before 'regions'", line, col)
        fields = {}
        for tok, tcol in args:
            key, eq, value = tok.partition("=")
            if not eq or key not in ("over", "from", "to", "sign"):
                self.error(f"malformed arc field {tok!r}", line, tcol)
            if key in fields:
                self.error(f"repeated arc field {key!r}", line, tcol)
            fields[key] = (value, tcol)
        for key in ("over", "from", "to"):
            if key not in fields:
                self.error(f"arc is missing '{key}='", line, col)
            value, tcol = fields[key]
            if value not in cur["index"]:
                self.error(f"unknown region {value!r}", line, tcol + len(key) + 1)
        sign = 1
        if "sign" in fields:
            value, tcol = fields["sign"]
            if value not in ("+", "-"):
                self.error(f"sign must be + or -, got {value!r}", line, tcol + 5)
            sign = 1 if value == "+" else -1
        if sign < 0 and not cur["oriented"]:
            warnings.warn(f"{self.source}:{line}: sign ignored on unoriented diagram, "
                          "recorded as +", DSLWarning, stacklevel=2)
            sign = 1
        cur["items"].append(Arc(fields["over"][0], fields["from"][0], fields["to"][0], sign))

    def do_rel(self, args, line, col):
        cur = self._expect("presentation", "rel", line, col)
        if cur["names"] is None:
            self.error("'rel' before 'gens'", line, col)
        if [t for t, _ in args] == ["1"]:
            args = []
        letters = []
        for tok, tcol in args:
            m = _GEN_TOKEN.match(tok)
            if not m:
                self.error(f"malformed token {tok!r}", line, tcol)
            name, inv = m.groups()
            if name not in cur["index"]:
                self.error(f"unknown generator {name!r}", line, tcol)
            letters.append(Letter(cur["index"][name], -1 if inv else 1))
        cur["items"].append(Word(letters))


def parse_document(text: str, source: str = "<input>") -> list[Block]:
    return _Parser(text, source).parse()


def parse_input(text: str, source: str = "<input>") -> Block:
    """Parse text holding exactly one diagram or presentation block."""
    blocks = parse_document(text, source)
    if len(blocks) != 1:
        raise DSLError(f"expected exactly one block, found {len(blocks)}", 1, 1, source)
    return blocks[0]


def format_diagram(d: Diagram) -> str:
    lines = [f"diagram {d.name or 'unnamed'} {'oriented' if d.oriented else 'unoriented'}",
             " ".join(["regions", *d.regions])]
    for a in d.arcs:
        lines.append(f"arc over={a.over} from={a.under_from} to={a.under_to} "
                     f"sign={'+' if a.sign > 0 else '-'}")
    return "\n".join(lines) + "\n"


def format_presentation(p: Presentation) -> str:
    lines = [f"presentation {p.name or 'unnamed'}", " ".join(["gens", *p.generator_names])]
    lines += ["rel " + format_word(r, p.generator_names) for r in p.relators]
    return "\n".join(lines) + "\n"


def format_block(block: Block) -> str:
    return format_diagram(block) if isinstance(block, Diagram) else format_presentation(block)
