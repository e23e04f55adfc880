"""The .blf text format: parser and canonical serializer.

Grammar: a document is a sequence of `name { ... }` sections; inside a
section, `key = value` entries are separated by newlines or semicolons.
Values are integers, quoted strings, true/false, or bracketed lists
(nested once for matrices). `#` starts a comment. Curve words are quoted
strings in the usual letter notation, uppercase meaning inverse; a cycle
word may carry a leading `-` for a negative critical point.

Parsing is strict about syntax and key names (with line/column positions)
but defers all semantic coherence to validate(): `cycles = ["a3"]` in a
genus-1 section parses fine and shows up in the validation report.

serialize_document() emits a canonical form: fixed section and key order,
explicit defaults for the blf and round sections, two-space indent. parse
of a serialized document reproduces the record exactly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError, WordError
from .exact import IntMatrix
from .fibration import (
    Base,
    BrokenFibration,
    Declared,
    LefschetzPiece,
    RoundCobordism,
    SurfaceModel,
)
from .surface import CurveWord, Parity

SECTION_NAMES = ("blf", "lower", "round", "higher", "sections", "declared")

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<comment>\#[^\n]*)
  | (?P<newline>\n)
  | (?P<sep>;)
  | (?P<punct>[{}\[\]=,])
  | (?P<int>-?[0-9]+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<string>"(?:[^"\\\n]|\\.)*")
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # sep | punct | int | name | string | eof
    value: object
    line: int
    col: int


def _unescape(raw: str, line: int, col: int) -> str:
    body = raw[1:-1]
    out = []
    i = 0
    while i < len(body):
        c = body[i]
        if c == "\\":
            if i + 1 >= len(body):
                raise ParseError("dangling escape in string", line, col)
            nxt = body[i + 1]
            if nxt not in ('"', "\\"):
                raise ParseError(f"unknown escape \\{nxt} in string", line, col)
            out.append(nxt)
            i += 2
        else:
            out.append(c)
            i += 1
    return "".join(out)


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    line, col = 1, 1
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        raw = m.group()
        if kind == "newline":
            tokens.append(Token("sep", "\n", line, col))
            line += 1
            col = 1
            pos = m.end()
            continue
        if kind == "ws" or kind == "comment":
            pass
        elif kind == "sep":
            tokens.append(Token("sep", ";", line, col))
        elif kind == "punct":
            tokens.append(Token("punct", raw, line, col))
        elif kind == "int":
            tokens.append(Token("int", int(raw), line, col))
        elif kind == "name":
            tokens.append(Token("name", raw, line, col))
        elif kind == "string":
            tokens.append(Token("string", _unescape(raw, line, col), line, col))
        col += len(raw)
        pos = m.end()
    tokens.append(Token("eof", None, line, col))
    return tokens


@dataclass(frozen=True)
class Entry:
    value: object
    line: int
    col: int


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        if tok.kind != "eof":
            self.i += 1
        return tok

    def skip_seps(self):
        while self.peek().kind == "sep":
            self.advance()

    def expect_punct(self, ch: str) -> Token:
        tok = self.peek()
        if tok.kind != "punct" or tok.value != ch:
            raise ParseError(f"expected {ch!r}, got {self._show(tok)}", tok.line, tok.col)
        return self.advance()

    @staticmethod
    def _show(tok: Token) -> str:
        if tok.kind == "eof":
            return "end of input"
        if tok.kind == "sep":
            return "end of line" if tok.value == "\n" else "';'"
        return repr(str(tok.value))

    def parse_value(self):
        tok = self.peek()
        if tok.kind == "int" or tok.kind == "string":
            self.advance()
            return tok.value
        if tok.kind == "name" and tok.value in ("true", "false"):
            self.advance()
            return tok.value == "true"
        if tok.kind == "punct" and tok.value == "[":
            self.advance()
            items = []
            while True:
                self.skip_seps()
                nxt = self.peek()
                if nxt.kind == "punct" and nxt.value == "]":
                    self.advance()
                    return items
                items.append(self.parse_value())
                self.skip_seps()
                nxt = self.peek()
                if nxt.kind == "punct" and nxt.value == ",":
                    self.advance()
                    continue
                if nxt.kind == "punct" and nxt.value == "]":
                    self.advance()
                    return items
                raise ParseError(
                    f"expected ',' or ']' in list, got {self._show(nxt)}", nxt.line, nxt.col
                )
        raise ParseError(f"expected a value, got {self._show(tok)}", tok.line, tok.col)

    def parse_section_body(self, section: str) -> dict[str, Entry]:
        entries: dict[str, Entry] = {}
        self.expect_punct("{")
        while True:
            self.skip_seps()
            tok = self.peek()
            if tok.kind == "punct" and tok.value == "}":
                self.advance()
                return entries
            if tok.kind != "name":
                raise ParseError(
                    f"expected a key or '}}' in section '{section}', got {self._show(tok)}",
                    tok.line,
                    tok.col,
                )
            key = self.advance()
            eq = self.peek()
            if eq.kind != "punct" or eq.value != "=":
                raise ParseError(f"expected '=' after key '{key.value}'", eq.line, eq.col)
            self.advance()
            vtok = self.peek()
            value = self.parse_value()
            if key.value in entries:
                raise ParseError(
                    f"duplicate key '{key.value}' in section '{section}'", key.line, key.col
                )
            entries[str(key.value)] = Entry(value, vtok.line, vtok.col)
            nxt = self.peek()
            if nxt.kind == "sep":
                continue
            if nxt.kind == "punct" and nxt.value == "}":
                continue
            raise ParseError(
                f"expected end of line, ';' or '}}' after value, got {self._show(nxt)}",
                nxt.line,
                nxt.col,
            )

    def parse_document(self) -> list[tuple[str, dict[str, Entry], Token]]:
        sections = []
        self.skip_seps()
        if self.peek().kind == "eof":
            raise ParseError("empty document", 1, 1)
        while True:
            self.skip_seps()
            tok = self.peek()
            if tok.kind == "eof":
                return sections
            if tok.kind != "name":
                raise ParseError(
                    f"expected a section name, got {self._show(tok)}", tok.line, tok.col
                )
            if tok.value not in SECTION_NAMES:
                raise ParseError(
                    f"unknown section '{tok.value}' (expected one of {', '.join(SECTION_NAMES)})",
                    tok.line,
                    tok.col,
                )
            self.advance()
            self.skip_seps()
            body = self.parse_section_body(str(tok.value))
            sections.append((str(tok.value), body, tok))


def _take(entries: dict[str, Entry], section: str, allowed: tuple[str, ...]):
    for key, entry in entries.items():
        if key not in allowed:
            raise ParseError(
                f"unknown key '{key}' in section '{section}' "
                f"(expected one of {', '.join(allowed)})",
                entry.line,
                entry.col,
            )


def _as_int(entry: Entry, what: str) -> int:
    if not isinstance(entry.value, int) or isinstance(entry.value, bool):
        raise ParseError(f"{what} must be an integer", entry.line, entry.col)
    return entry.value


def _as_str(entry: Entry, what: str) -> str:
    if not isinstance(entry.value, str):
        raise ParseError(f"{what} must be a quoted string", entry.line, entry.col)
    return entry.value


def _as_bool(entry: Entry, what: str) -> bool:
    if not isinstance(entry.value, bool):
        raise ParseError(f"{what} must be true or false", entry.line, entry.col)
    return entry.value


def _as_int_list(entry: Entry, what: str) -> list[int]:
    if not isinstance(entry.value, list) or any(
        not isinstance(x, int) or isinstance(x, bool) for x in entry.value
    ):
        raise ParseError(f"{what} must be a list of integers", entry.line, entry.col)
    return list(entry.value)


def _as_str_list(entry: Entry, what: str) -> list[str]:
    if not isinstance(entry.value, list) or any(
        not isinstance(x, str) for x in entry.value
    ):
        raise ParseError(f"{what} must be a list of quoted strings", entry.line, entry.col)
    return list(entry.value)


def _parse_word(text: str, entry: Entry) -> CurveWord:
    try:
        return CurveWord.parse(text)
    except WordError as err:
        raise ParseError(f"bad curve word {text!r}: {err}", entry.line, entry.col) from None


def _build_piece(entries: dict[str, Entry], section: str) -> LefschetzPiece:
    _take(entries, section, ("genus", "components", "cycles", "monodromy"))
    if "genus" in entries and "components" in entries:
        e = entries["components"]
        raise ParseError(
            f"section '{section}' takes genus or components, not both", e.line, e.col
        )
    if "components" in entries:
        comps = _as_int_list(entries["components"], "components")
        if not comps or any(g < 0 for g in comps):
            e = entries["components"]
            raise ParseError(
                "components must be a nonempty list of nonnegative genera", e.line, e.col
            )
        fiber = SurfaceModel(tuple(comps))
    else:
        genus = _as_int(entries["genus"], "genus") if "genus" in entries else 0
        if genus < 0:
            e = entries["genus"]
            raise ParseError("genus must be nonnegative", e.line, e.col)
        fiber = SurfaceModel.connected(genus)
    cycles = []
    if "cycles" in entries:
        entry = entries["cycles"]
        for raw in _as_str_list(entry, "cycles"):
            chirality = 1
            body = raw
            if body.startswith("-"):
                chirality = -1
                body = body[1:].lstrip()
            cycles.append((_parse_word(body, entry), chirality))
    monodromy = None
    if "monodromy" in entries:
        entry = entries["monodromy"]
        value = entry.value
        if not isinstance(value, list):
            raise ParseError("monodromy must be a list of rows", entry.line, entry.col)
        rows = []
        for row in value:
            if not isinstance(row, list) or any(
                not isinstance(x, int) or isinstance(x, bool) for x in row
            ):
                raise ParseError(
                    "monodromy rows must be lists of integers", entry.line, entry.col
                )
            rows.append(row)
        if rows and len({len(r) for r in rows}) != 1:
            raise ParseError("monodromy rows have unequal lengths", entry.line, entry.col)
        monodromy = IntMatrix.from_rows(rows) if rows else IntMatrix((), 0)
    return LefschetzPiece(fiber, tuple(cycles), monodromy)


def _build_round(entries: dict[str, Entry], tok: Token) -> RoundCobordism:
    _take(entries, "round", ("gamma", "parity", "framing", "separating", "gluing"))
    if "gamma" not in entries:
        raise ParseError("section 'round' needs a gamma entry", tok.line, tok.col)
    entry = entries["gamma"]
    gamma = _parse_word(_as_str(entry, "gamma"), entry)
    parity = Parity.AUTO
    if "parity" in entries:
        entry = entries["parity"]
        text = _as_str(entry, "parity")
        if text not in ("auto", "untwisted", "twisted"):
            raise ParseError(
                f"parity must be auto, untwisted or twisted, got {text!r}",
                entry.line,
                entry.col,
            )
        parity = Parity(text)
    framing = _as_int(entries["framing"], "framing") if "framing" in entries else 0
    separating = (
        _as_bool(entries["separating"], "separating") if "separating" in entries else False
    )
    gluing = _as_int(entries["gluing"], "gluing") if "gluing" in entries else 0
    return RoundCobordism(gamma, parity, framing, separating, gluing)


def parse_document(text: str) -> BrokenFibration:
    sections = _Parser(text).parse_document()
    seen: dict[str, Token] = {}
    base = Base.SPHERE
    blowups = 0
    basepoints = 0
    notes: tuple[str, ...] = ()
    lower = LefschetzPiece.trivial(0)
    higher = LefschetzPiece.trivial(0)
    cobordisms: list[RoundCobordism] = []
    section_squares: tuple[int, ...] = ()
    declared = Declared()

    for name, entries, tok in sections:
        if name != "round":
            if name in seen:
                raise ParseError(f"duplicate section '{name}'", tok.line, tok.col)
            seen[name] = tok
        if name == "blf":
            _take(entries, name, ("base", "blowups", "basepoints", "notes"))
            if "base" in entries:
                entry = entries["base"]
                text_value = _as_str(entry, "base")
                if text_value not in ("sphere", "torus"):
                    raise ParseError(
                        f"base must be sphere or torus, got {text_value!r}",
                        entry.line,
                        entry.col,
                    )
                base = Base(text_value)
            if "blowups" in entries:
                blowups = _as_int(entries["blowups"], "blowups")
                if blowups < 0:
                    e = entries["blowups"]
                    raise ParseError("blowups must be nonnegative", e.line, e.col)
            if "basepoints" in entries:
                basepoints = _as_int(entries["basepoints"], "basepoints")
                if basepoints < 0:
                    e = entries["basepoints"]
                    raise ParseError("basepoints must be nonnegative", e.line, e.col)
            if "notes" in entries:
                notes = tuple(_as_str_list(entries["notes"], "notes"))
        elif name == "lower":
            lower = _build_piece(entries, name)
        elif name == "higher":
            higher = _build_piece(entries, name)
        elif name == "round":
            cobordisms.append(_build_round(entries, tok))
        elif name == "sections":
            _take(entries, name, ("squares",))
            if "squares" in entries:
                section_squares = tuple(_as_int_list(entries["squares"], "squares"))
        elif name == "declared":
            _take(entries, name, ("sigma", "b_plus", "parity", "label"))
            sigma = _as_int(entries["sigma"], "sigma") if "sigma" in entries else None
            b_plus = _as_int(entries["b_plus"], "b_plus") if "b_plus" in entries else None
            parity = None
            if "parity" in entries:
                entry = entries["parity"]
                parity = _as_str(entry, "parity")
                if parity not in ("even", "odd"):
                    raise ParseError(
                        f"declared parity must be even or odd, got {parity!r}",
                        entry.line,
                        entry.col,
                    )
            label = _as_str(entries["label"], "label") if "label" in entries else None
            declared = Declared(sigma, b_plus, parity, label)

    return BrokenFibration(
        base=base,
        lower=lower,
        cobordisms=tuple(cobordisms),
        higher=higher,
        sections=section_squares,
        declared=declared,
        blowups=blowups,
        basepoints=basepoints,
        notes=notes,
    )


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _word_text(word: CurveWord, chirality: int = 1) -> str:
    body = word.to_text()
    if chirality == -1:
        return "-" + body if body else "-"
    return body


def _piece_lines(piece: LefschetzPiece) -> list[str]:
    lines = []
    if piece.fiber.is_connected:
        lines.append(f"genus = {piece.fiber.components[0]}")
    else:
        lines.append("components = [" + ", ".join(str(g) for g in piece.fiber.components) + "]")
    if piece.cycles:
        rendered = ", ".join(_quote(_word_text(w, c)) for w, c in piece.cycles)
        lines.append(f"cycles = [{rendered}]")
    if piece.declared_monodromy is not None:
        rows = ", ".join(
            "[" + ", ".join(str(x) for x in row) + "]"
            for row in piece.declared_monodromy.rows
        )
        lines.append(f"monodromy = [{rows}]")
    return lines


def serialize_document(f: BrokenFibration) -> str:
    blocks: list[tuple[str, list[str]]] = []
    blf_lines = [
        f"base = {_quote(f.base.value)}",
        f"blowups = {f.blowups}",
        f"basepoints = {f.basepoints}",
    ]
    if f.notes:
        blf_lines.append("notes = [" + ", ".join(_quote(n) for n in f.notes) + "]")
    blocks.append(("blf", blf_lines))
    blocks.append(("lower", _piece_lines(f.lower)))
    for cob in f.cobordisms:
        blocks.append(
            (
                "round",
                [
                    f"gamma = {_quote(_word_text(cob.gamma))}",
                    f"parity = {_quote(cob.parity.value)}",
                    f"framing = {cob.framing}",
                    f"separating = {'true' if cob.separating else 'false'}",
                    f"gluing = {cob.gluing}",
                ],
            )
        )
    blocks.append(("higher", _piece_lines(f.higher)))
    if f.sections:
        blocks.append(
            ("sections", ["squares = [" + ", ".join(str(s) for s in f.sections) + "]"])
        )
    d = f.declared
    declared_lines = []
    if d.sigma is not None:
        declared_lines.append(f"sigma = {d.sigma}")
    if d.b_plus is not None:
        declared_lines.append(f"b_plus = {d.b_plus}")
    if d.parity is not None:
        declared_lines.append(f"parity = {_quote(d.parity)}")
    if d.label is not None:
        declared_lines.append(f"label = {_quote(d.label)}")
    if declared_lines:
        blocks.append(("declared", declared_lines))

    rendered = []
    for name, lines in blocks:
        body = "".join(f"  {line}\n" for line in lines)
        rendered.append(f"{name} {{\n{body}}}\n")
    return "\n".join(rendered)


def load_document(path) -> BrokenFibration:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_document(fh.read())


def save_document(f: BrokenFibration, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_document(f))
