import gzip
import io
import tracemalloc

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conformance_expected import MALFORMED, TOTAL_LINES, VALID
from pictropes.ntriples import (
    IRI,
    Blank,
    BlankNode,
    Comment,
    Literal,
    NTriplesSyntaxError,
    Triple,
    parse_line,
    parse_stream,
    serialize_triple,
)


def test_simple_triple():
    assert parse_line("<http://a/s> <http://a/p> <http://a/o> .") == Triple(
        IRI("http://a/s"), IRI("http://a/p"), IRI("http://a/o")
    )


def test_comment_and_blank():
    assert isinstance(parse_line("# comment"), Comment)
    assert parse_line("") == Blank()


def test_unicode_escape_in_literal():
    t = parse_line('<http://a/s> <http://a/p> "hi\\u0041"@en .')
    assert t.object == Literal("hiA", language="en")


def test_escaped_iri_takes_slow_path():
    t = parse_line("<http://a/x\\u0020y> <http://a/p> <http://a/o> .")
    assert t.subject == IRI("http://a/x y")


def test_surrogate_escape_rejected():
    with pytest.raises(NTriplesSyntaxError, match="code point"):
        parse_line('<http://a/s> <http://a/p> "\\uD800" .')


def test_error_carries_column():
    with pytest.raises(NTriplesSyntaxError) as info:
        parse_line('"lit" <http://a/p> <http://a/o> .')
    assert info.value.column == 1
    assert info.value.lineno is None


@pytest.mark.parametrize("lineno", sorted(VALID))
def test_conformance_valid_lines(conformance_path, lineno):
    line = conformance_path.read_text(encoding="utf-8").split("\n")[lineno - 1]
    assert parse_line(line) == VALID[lineno]


@pytest.mark.parametrize("lineno", sorted(MALFORMED))
def test_conformance_malformed_lines(conformance_path, lineno):
    line = conformance_path.read_text(encoding="utf-8").split("\n")[lineno - 1]
    with pytest.raises(NTriplesSyntaxError, match=MALFORMED[lineno]):
        parse_line(line)


def _stream(text: str) -> io.BytesIO:
    return io.BytesIO(text.encode("utf-8"))


VALID3 = "<http://a/s> <http://a/p> <http://a/o1> .\n<http://a/s> <http://a/p> <http://a/o2> .\n"


def test_stream_three_valid():
    triples, report = parse_stream(_stream(VALID3 + '<http://a/s> <http://a/p> "x" .\n'))
    assert len(list(triples)) == 3
    assert report.triples_emitted == 3 and report.lines_skipped == 0


def test_stream_lenient_skips():
    triples, report = parse_stream(_stream(VALID3 + "<http://a/s> <http://a/p>\n"), policy="lenient")
    assert len(list(triples)) == 2
    assert report.lines_skipped == 1
    assert report.first_error.lineno == 3


def test_stream_strict_names_line():
    triples, _ = parse_stream(_stream(VALID3 + "<http://a/s> <http://a/p>\n"), policy="strict")
    with pytest.raises(NTriplesSyntaxError) as info:
        list(triples)
    assert info.value.lineno == 3
    assert "line 3" in str(info.value)


def test_stream_accounting_on_fixture(conformance_path):
    with open(conformance_path, "rb") as fh:
        triples, report = parse_stream(fh)
        out = list(triples)
    assert report.lines_consumed == TOTAL_LINES
    assert report.lines_skipped == len(MALFORMED)
    assert out == [t for _, t in sorted(VALID.items()) if isinstance(t, Triple)]


def test_gzip_detected_by_magic():
    payload = gzip.compress(VALID3.encode())
    triples, report = parse_stream(io.BytesIO(payload))
    assert [t.object for t in triples] == [IRI("http://a/o1"), IRI("http://a/o2")]


def test_crlf_and_missing_final_newline():
    triples, _ = parse_stream(_stream("<http://a/s> <http://a/p> <http://a/o> .\r\n<http://a/s> <http://a/p> \"x\" ."))
    assert len(list(triples)) == 2


def test_invalid_utf8_is_syntax_error():
    data = b'<http://a/s> <http://a/p> "\xff" .\n'
    triples, report = parse_stream(io.BytesIO(data))
    assert list(triples) == []
    assert report.lines_skipped == 1
    with pytest.raises(NTriplesSyntaxError, match="UTF-8"):
        list(parse_stream(io.BytesIO(data), policy="strict")[0])


class _Exploding(io.RawIOBase):
    def readable(self):
        return True

    def readinto(self, b):
        raise OSError("disk on fire")


def test_io_error_propagates_distinctly():
    triples, _ = parse_stream(_Exploding(), policy="lenient")
    with pytest.raises(OSError, match="disk on fire"):
        list(triples)


def test_unknown_policy():
    with pytest.raises(ValueError):
        parse_stream(_stream(""), policy="sloppy")


def test_order_preserved():
    lines = "".join(f"<http://a/s> <http://a/p> <http://a/o{i}> .\n" for i in range(200))
    triples, _ = parse_stream(_stream(lines))
    assert [t.object.value for t in triples] == [f"http://a/o{i}" for i in range(200)]


def _peak_parse(payload: bytes) -> int:
    source = io.BytesIO(payload)
    tracemalloc.start()
    try:
        triples, _ = parse_stream(source)
        count = sum(1 for _ in triples)
        _, peak = tracemalloc.get_traced_memory()
    finally:
        tracemalloc.stop()
    assert count > 0
    return peak


def test_memory_bounded_by_line_not_file(conformance_path):
    block = conformance_path.read_bytes()
    peak10 = _peak_parse(block * 10)
    peak100 = _peak_parse(block * 100)
    # 10x more input may not cost more than a small constant extra
    assert peak100 < peak10 * 1.5 + 64_000


# ---- round trip ------------------------------------------------------------

_text = st.text(st.characters(blacklist_categories=("Cs",)), max_size=30)
_iri = _text.map(lambda s: IRI("http://example.org/" + s))
_bnode = st.from_regex(r"[A-Za-z0-9_](?:[A-Za-z0-9_.\-]{0,10}[A-Za-z0-9_\-])?", fullmatch=True).map(BlankNode)
_lang = st.from_regex(r"[a-zA-Z]{1,8}(?:-[a-zA-Z0-9]{1,8}){0,2}", fullmatch=True)
_literal = st.one_of(
    _text.map(Literal),
    st.builds(lambda s, l: Literal(s, language=l), _text, _lang),
    st.builds(lambda s, d: Literal(s, datatype=d), _text, _iri),
)
triples_strategy = st.builds(Triple, st.one_of(_iri, _bnode), _iri, st.one_of(_iri, _bnode, _literal))


@given(triples_strategy)
def test_round_trip(triple):
    line = serialize_triple(triple)
    assert "\n" not in line and "\r" not in line
    assert parse_line(line) == triple
