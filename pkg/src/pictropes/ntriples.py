"""Streaming parser for W3C N-Triples.

Designed for multi-gigabyte dumps: input is consumed one physical line at a
time, so memory is bounded by the longest line rather than the file size.
Gzip input is detected from its magic bytes.
"""

from __future__ import annotations

import gzip
import io
import re
from dataclasses import dataclass
from typing import BinaryIO, Iterator, Optional, Union

__all__ = [
    "IRI",
    "BlankNode",
    "Literal",
    "Triple",
    "Comment",
    "Blank",
    "NTriplesSyntaxError",
    "ParseReport",
    "TripleStream",
    "parse_line",
    "parse_stream",
    "open_dump",
    "serialize_term",
    "serialize_triple",
]


@dataclass(frozen=True, slots=True)
class IRI:
    value: str

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, slots=True)
class BlankNode:
    label: str


@dataclass(frozen=True, slots=True)
class Literal:
    lexical: str
    language: Optional[str] = None
    datatype: Optional[IRI] = None


Term = Union[IRI, BlankNode, Literal]


@dataclass(frozen=True, slots=True)
class Triple:
    subject: Union[IRI, BlankNode]
    predicate: IRI
    object: Term


@dataclass(frozen=True, slots=True)
class Comment:
    text: str


@dataclass(frozen=True, slots=True)
class Blank:
    pass


class NTriplesSyntaxError(ValueError):
    """Malformed N-Triples input.

    ``column`` is 1-based within the line; ``lineno`` is filled in by the
    stream parser (``None`` for :func:`parse_line` calls).
    """

    def __init__(self, reason: str, column: int, lineno: Optional[int] = None):
        self.reason = reason
        self.column = column
        self.lineno = lineno
        where = f"line {lineno}, column {column}" if lineno else f"column {column}"
        super().__init__(f"{where}: {reason}")


# --------------------------------------------------------------------------
# lexical rules

_HEX4 = r"[0-9A-Fa-f]{4}"
_HEX8 = r"[0-9A-Fa-f]{8}"
_UCHAR = rf"\\u{_HEX4}|\\U{_HEX8}"

_IRI_RE = re.compile(rf"<((?:[^\x00-\x20<>\"{{}}|^`\\]|{_UCHAR})*)>")
_LITERAL_RE = re.compile(rf"\"((?:[^\"\\\n\r]|\\[tbnrf\"'\\]|{_UCHAR})*)\"")
_BNODE_RE = re.compile(r"_:(\w(?:[\w.\-\u00B7\u0300-\u036F\u203F-\u2040]*[\w\-\u00B7\u0300-\u036F\u203F-\u2040])?)")
_LANG_RE = re.compile(r"@([a-zA-Z]+(?:-[a-zA-Z0-9]+)*)")
_WS_RE = re.compile(r"[ \t]*")
_SCHEME_RE = re.compile(r"[A-Za-z][A-Za-z0-9+.\-]*:")

# Fast path for the dominant "<s> <p> <o> ." shape with no escapes.
_SIMPLE_IRI = r"<([^\x00-\x20<>\"{}|^`\\]*)>"
_FAST_RE = re.compile(rf"[ \t]*{_SIMPLE_IRI}[ \t]*{_SIMPLE_IRI}[ \t]*{_SIMPLE_IRI}[ \t]*\.[ \t]*(?:#.*)?")

_ESCAPE_RE = re.compile(rf"\\(?:u({_HEX4})|U({_HEX8})|(.))", re.DOTALL)
_ECHAR = {"t": "\t", "b": "\b", "n": "\n", "r": "\r", "f": "\f", '"': '"', "'": "'", "\\": "\\"}


def _unescape(text: str, column: int, allow_echar: bool) -> str:
    if "\\" not in text:
        return text

    def repl(m: re.Match) -> str:
        hexdigits = m.group(1) or m.group(2)
        if hexdigits is not None:
            cp = int(hexdigits, 16)
            if cp > 0x10FFFF or 0xD800 <= cp <= 0xDFFF:
                raise NTriplesSyntaxError(f"invalid code point U+{cp:X} in escape", column + m.start())
            return chr(cp)
        ch = m.group(3)
        if allow_echar and ch in _ECHAR:
            return _ECHAR[ch]
        raise NTriplesSyntaxError(f"bad escape sequence '\\{ch}'", column + m.start())

    return _ESCAPE_RE.sub(repl, text)


def _make_iri(raw: str, column: int) -> IRI:
    value = _unescape(raw, column, allow_echar=False)
    if not _SCHEME_RE.match(value):
        raise NTriplesSyntaxError(f"relative IRI <{raw}> (absolute IRI required)", column)
    return IRI(value)


class _Scanner:
    __slots__ = ("line", "pos")

    def __init__(self, line: str):
        self.line = line
        self.pos = 0

    def skip_ws(self) -> None:
        self.pos = _WS_RE.match(self.line, self.pos).end()

    def error(self, reason: str) -> NTriplesSyntaxError:
        return NTriplesSyntaxError(reason, self.pos + 1)

    def iri(self, role: str) -> IRI:
        m = _IRI_RE.match(self.line, self.pos)
        if m is None:
            if self.line.startswith("<", self.pos):
                raise self._diagnose_iri()
            raise self.error(f"expected IRI as {role}")
        iri = _make_iri(m.group(1), self.pos + 2)
        self.pos = m.end()
        return iri

    def _diagnose_iri(self) -> NTriplesSyntaxError:
        end = self.line.find(">", self.pos)
        body = self.line[self.pos + 1 : end if end >= 0 else len(self.line)]
        if end < 0:
            return self.error("unterminated IRI")
        if "\\" in body:
            return self.error("bad escape sequence in IRI")
        return self.error("illegal character in IRI")

    def bnode(self) -> BlankNode:
        m = _BNODE_RE.match(self.line, self.pos)
        if m is None:
            raise self.error("malformed blank node label")
        self.pos = m.end()
        return BlankNode(m.group(1))

    def literal(self) -> Literal:
        m = _LITERAL_RE.match(self.line, self.pos)
        if m is None:
            raise self._diagnose_literal()
        lexical = _unescape(m.group(1), self.pos + 2, allow_echar=True)
        self.pos = m.end()
        if self.line.startswith("@", self.pos):
            lm = _LANG_RE.match(self.line, self.pos)
            if lm is None:
                raise self.error("malformed language tag")
            self.pos = lm.end()
            return Literal(lexical, language=lm.group(1))
        if self.line.startswith("^^", self.pos):
            self.pos += 2
            return Literal(lexical, datatype=self.iri("datatype"))
        return Literal(lexical)

    def _diagnose_literal(self) -> NTriplesSyntaxError:
        i = self.pos + 1
        line = self.line
        while i < len(line):
            ch = line[i]
            if ch == '"':
                break
            if ch == "\\":
                nxt = line[i + 1 : i + 2]
                if nxt in _ECHAR:
                    i += 2
                    continue
                if nxt in ("u", "U"):
                    width = 4 if nxt == "u" else 8
                    if re.fullmatch(f"[0-9A-Fa-f]{{{width}}}", line[i + 2 : i + 2 + width]):
                        i += 2 + width
                        continue
                return NTriplesSyntaxError("bad escape sequence in literal", i + 1)
            i += 1
        return self.error("unterminated string literal")

    def subject(self) -> Union[IRI, BlankNode]:
        ch = self.line[self.pos : self.pos + 1]
        if ch == "<":
            return self.iri("subject")
        if ch == "_":
            return self.bnode()
        if ch == '"':
            raise self.error("literal in subject position")
        raise self.error("expected IRI or blank node as subject")

    def predicate(self) -> IRI:
        ch = self.line[self.pos : self.pos + 1]
        if ch == "_":
            raise self.error("blank node in predicate position")
        if ch == '"':
            raise self.error("literal in predicate position")
        return self.iri("predicate")

    def object(self) -> Term:
        ch = self.line[self.pos : self.pos + 1]
        if ch == "<":
            return self.iri("object")
        if ch == "_":
            return self.bnode()
        if ch == '"':
            return self.literal()
        raise self.error("expected IRI, blank node or literal as object")


def parse_line(line: str) -> Union[Triple, Comment, Blank]:
    """Parse one physical line (without its newline).

    Returns a :class:`Triple`, :class:`Comment` or :class:`Blank`; raises
    :class:`NTriplesSyntaxError` for malformed input.
    """
    m = _FAST_RE.fullmatch(line)
    if m is not None:
        s, p, o = m.groups()
        if _SCHEME_RE.match(s) and _SCHEME_RE.match(p) and _SCHEME_RE.match(o):
            return Triple(IRI(s), IRI(p), IRI(o))

    sc = _Scanner(line)
    sc.skip_ws()
    if sc.pos == len(line):
        return Blank()
    if line[sc.pos] == "#":
        return Comment(line[sc.pos + 1 :])

    subject = sc.subject()
    sc.skip_ws()
    predicate = sc.predicate()
    sc.skip_ws()
    obj = sc.object()
    sc.skip_ws()
    if not line.startswith(".", sc.pos):
        raise sc.error("missing '.' terminator")
    sc.pos += 1
    sc.skip_ws()
    if sc.pos < len(line) and line[sc.pos] != "#":
        raise sc.error("unexpected content after '.'")
    return Triple(subject, predicate, obj)


# --------------------------------------------------------------------------
# serialization (canonical form, used for round-trip checks)


def _escape_iri(value: str) -> str:
    out = []
    for ch in value:
        cp = ord(ch)
        if cp <= 0x20 or ch in '<>"{}|^`\\':
            out.append(f"\\u{cp:04X}")
        else:
            out.append(ch)
    return "".join(out)


_LITERAL_ESCAPES = {"\\": "\\\\", '"': '\\"', "\n": "\\n", "\r": "\\r", "\t": "\\t", "\b": "\\b", "\f": "\\f"}


def _escape_literal(value: str) -> str:
    out = []
    for ch in value:
        esc = _LITERAL_ESCAPES.get(ch)
        if esc is not None:
            out.append(esc)
        elif ord(ch) < 0x20 or ord(ch) == 0x7F:
            out.append(f"\\u{ord(ch):04X}")
        else:
            out.append(ch)
    return "".join(out)


def serialize_term(term: Term) -> str:
    if isinstance(term, IRI):
        return f"<{_escape_iri(term.value)}>"
    if isinstance(term, BlankNode):
        return f"_:{term.label}"
    text = f'"{_escape_literal(term.lexical)}"'
    if term.language is not None:
        return f"{text}@{term.language}"
    if term.datatype is not None:
        return f"{text}^^{serialize_term(term.datatype)}"
    return text


def serialize_triple(triple: Triple) -> str:
    """Canonical N-Triples line for ``triple`` (no trailing newline)."""
    return f"{serialize_term(triple.subject)} {serialize_term(triple.predicate)} {serialize_term(triple.object)} ."


# --------------------------------------------------------------------------
# streaming


@dataclass
class ParseReport:
    triples_emitted: int = 0
    lines_skipped: int = 0
    comment_lines: int = 0
    blank_lines: int = 0
    first_error: Optional[NTriplesSyntaxError] = None

    @property
    def lines_consumed(self) -> int:
        return self.triples_emitted + self.lines_skipped + self.comment_lines + self.blank_lines

    def summary(self) -> str:
        text = (
            f"triples={self.triples_emitted} skipped={self.lines_skipped} "
            f"comments={self.comment_lines} blank={self.blank_lines}"
        )
        if self.first_error is not None:
            text += f" first_error=[{self.first_error}]"
        return text


GZIP_MAGIC = b"\x1f\x8b"


def _maybe_gunzip(source: BinaryIO) -> BinaryIO:
    if not hasattr(source, "peek"):
        source = io.BufferedReader(source)  # type: ignore[arg-type]
    if source.peek(2)[:2] == GZIP_MAGIC:
        return gzip.GzipFile(fileobj=source, mode="rb")  # type: ignore[return-value]
    return source


class TripleStream:
    """Iterator of triples over a byte stream; ``report`` fills as it is consumed.

    Under ``policy="strict"`` iteration raises :class:`NTriplesSyntaxError`
    (with ``lineno`` set) at the first malformed line. Under ``"lenient"``
    malformed lines are counted and skipped. I/O errors propagate as
    :class:`OSError` either way.
    """

    def __init__(self, source: BinaryIO, policy: str = "lenient"):
        if policy not in ("strict", "lenient"):
            raise ValueError(f"unknown parser policy {policy!r}")
        self.policy = policy
        self.report = ParseReport()
        self._source = source

    def __iter__(self) -> Iterator[Triple]:
        report = self.report
        strict = self.policy == "strict"
        stream = _maybe_gunzip(self._source)
        for lineno, raw in enumerate(stream, start=1):
            try:
                line = raw.decode("utf-8")
            except UnicodeDecodeError as exc:
                err: Optional[NTriplesSyntaxError] = NTriplesSyntaxError(
                    f"invalid UTF-8 ({exc.reason})", exc.start + 1, lineno
                )
                result = None
            else:
                if line.endswith("\n"):
                    line = line[:-1]
                if line.endswith("\r"):
                    line = line[:-1]
                try:
                    result = parse_line(line)
                    err = None
                except NTriplesSyntaxError as exc:
                    exc.lineno = lineno
                    exc.args = (f"line {lineno}, column {exc.column}: {exc.reason}",)
                    err, result = exc, None

            if err is not None:
                if report.first_error is None:
                    report.first_error = err
                if strict:
                    raise err
                report.lines_skipped += 1
            elif isinstance(result, Triple):
                report.triples_emitted += 1
                yield result
            elif isinstance(result, Comment):
                report.comment_lines += 1
            else:
                report.blank_lines += 1


def parse_stream(source: BinaryIO, policy: str = "lenient") -> tuple[Iterator[Triple], ParseReport]:
    """Return ``(triples, report)``; ``report`` is complete once ``triples`` is exhausted."""
    stream = TripleStream(source, policy)
    return iter(stream), stream.report


def open_dump(path) -> BinaryIO:
    """Open an N-Triples file (plain or gzip) for :func:`parse_stream`."""
    return open(path, "rb")
