"""Reading TreeTagger-style chunked ("vertical") documents.

One record per line, TAB separated::

    #doc_id=austen-emma
    #author=austen
    #lang=EN
    <NC>
    Guests	NNS	guest
    </NC>
    ,	,	,
    ...
    .	SENT	.

Token lines carry ``surface<TAB>pos<TAB>lemma``; chunk lines are ``<NC>``,
``</NC>`` and the like, alone on their line; a token tagged ``SENT`` closes
the sentence.  Parsing streams: only the sentence under construction is held
in memory.
"""

from __future__ import annotations

import io
import logging
import re
from dataclasses import dataclass, replace
from enum import Enum
from functools import cached_property
from pathlib import Path
from typing import BinaryIO, Callable, Iterable, Iterator

log = logging.getLogger(__name__)

UNKNOWN_LEMMA = "<unknown>"
ELLIPSIS = "..."
_ELLIPSIS_FORMS = {"...", "…"}
_CHUNK_LINE = re.compile(r"^<(/?)([A-Za-z][A-Za-z0-9_:-]*)>$")
_HEADER_LINE = re.compile(r"^#(doc_id|author|title|lang|year)=(.*)$")


class ChunkKind(str, Enum):
    NC = "NC"
    VC = "VC"
    PC = "PC"
    ADJC = "ADJC"
    OTHER = "OTHER"

    @classmethod
    def from_tag(cls, tag: str) -> "ChunkKind":
        try:
            return cls(tag.upper())
        except ValueError:
            return cls.OTHER


@dataclass(frozen=True, slots=True)
class Token:
    surface: str
    pos: str
    lemma: str
    index: int

    def __post_init__(self):
        if not self.surface:
            raise ValueError("token surface must be non-empty")


@dataclass(frozen=True, slots=True)
class Chunk:
    kind: ChunkKind
    start: int
    end: int  # inclusive

    def __contains__(self, index: int) -> bool:
        return self.start <= index <= self.end

    def shifted(self, offset: int) -> "Chunk":
        return Chunk(self.kind, self.start + offset, self.end + offset)


@dataclass(frozen=True)
class DocumentMeta:
    doc_id: str
    author_id: str
    title: str = ""
    language: str = "EN"
    year: int | None = None

    def __post_init__(self):
        if not self.doc_id:
            raise ValueError("doc_id must be non-empty")
        if not self.author_id:
            raise ValueError(f"document {self.doc_id!r} has no author")
        if self.language not in ("EN", "FR"):
            raise ValueError(f"unsupported language {self.language!r}")


@dataclass(frozen=True)
class Sentence:
    tokens: tuple[Token, ...]
    chunks: tuple[Chunk, ...]
    meta: DocumentMeta
    sentence_index: int = 0

    def __post_init__(self):
        n = len(self.tokens)
        for i, tok in enumerate(self.tokens):
            if tok.index != i:
                raise ValueError(f"token index {tok.index} at position {i}")
        for c in self.chunks:
            if not 0 <= c.start <= c.end < n:
                raise ValueError(f"chunk {c} outside sentence of {n} tokens")

    def __len__(self) -> int:
        return len(self.tokens)

    @property
    def language(self) -> str:
        return self.meta.language

    @property
    def text(self) -> str:
        return " ".join(t.surface for t in self.tokens)

    @cached_property
    def _starting(self) -> dict[tuple[ChunkKind, int], Chunk]:
        out: dict[tuple[ChunkKind, int], Chunk] = {}
        for c in self.chunks:
            key = (c.kind, c.start)
            if key not in out or c.end > out[key].end:
                out[key] = c
        return out

    @cached_property
    def _ending(self) -> dict[tuple[ChunkKind, int], Chunk]:
        out: dict[tuple[ChunkKind, int], Chunk] = {}
        for c in self.chunks:
            key = (c.kind, c.end)
            if key not in out or c.start < out[key].start:
                out[key] = c
        return out

    def chunk_starting(self, index: int, kind: ChunkKind) -> Chunk | None:
        return self._starting.get((kind, index))

    def chunk_ending(self, index: int, kind: ChunkKind) -> Chunk | None:
        return self._ending.get((kind, index))

    def chunk_at(self, index: int, kind: ChunkKind) -> Chunk | None:
        """Innermost chunk of ``kind`` covering ``index``."""
        best = None
        for c in self.chunks:
            if c.kind is kind and index in c:
                if best is None or c.end - c.start < best.end - best.start:
                    best = c
        return best

    def enclosing(self, chunk: Chunk, kind: ChunkKind) -> Chunk | None:
        for c in self.chunks:
            if c is not chunk and c.kind is kind and c.start <= chunk.start and chunk.end <= c.end:
                return c
        return None


@dataclass(frozen=True)
class ParseIssue:
    line_no: int
    kind: str  # "malformed" | "unclosed" | "stray-close"
    message: str


class ParseError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def _log_issue(issue: ParseIssue) -> None:
    log.warning("line %d: %s", issue.line_no, issue.message)


def normalize_surface(surface: str) -> str:
    return ELLIPSIS if surface in _ELLIPSIS_FORMS else surface


def _lines(stream: BinaryIO | Iterable[bytes] | Iterable[str]) -> Iterator[str]:
    for raw in stream:
        if isinstance(raw, bytes):
            raw = raw.decode("utf-8")
        yield raw.rstrip("\r\n")


class _SentenceBuilder:
    def __init__(self, meta: DocumentMeta, on_issue: Callable[[ParseIssue], None]):
        self.meta = meta
        self.on_issue = on_issue
        self.tokens: list[Token] = []
        self.chunks: list[Chunk] = []
        self.open: list[tuple[ChunkKind, int, int]] = []  # kind, start, line_no

    def open_chunk(self, kind: ChunkKind, line_no: int) -> None:
        self.open.append((kind, len(self.tokens), line_no))

    def close_chunk(self, kind: ChunkKind, line_no: int) -> None:
        if not any(k is kind for k, _, _ in self.open):
            self.on_issue(ParseIssue(line_no, "stray-close", f"</{kind.value}> closes nothing"))
            return
        while self.open:
            k, start, opened = self.open.pop()
            if k is not kind:
                self.on_issue(ParseIssue(opened, "unclosed",
                                         f"<{k.value}> auto-closed by </{kind.value}>"))
            self._emit(k, start)
            if k is kind:
                return

    def _emit(self, kind: ChunkKind, start: int) -> None:
        end = len(self.tokens) - 1
        if end >= start:
            self.chunks.append(Chunk(kind, start, end))

    def add(self, surface: str, pos: str, lemma: str) -> None:
        if lemma == UNKNOWN_LEMMA or not lemma:
            lemma = surface.lower()
        self.tokens.append(Token(normalize_surface(surface), pos, lemma, len(self.tokens)))

    def finish(self, sentence_index: int, line_no: int) -> Sentence | None:
        while self.open:
            k, start, opened = self.open.pop()
            self.on_issue(ParseIssue(opened, "unclosed",
                                     f"<{k.value}> auto-closed at sentence end (line {line_no})"))
            self._emit(k, start)
        if not self.tokens:
            self.chunks.clear()
            return None
        chunks = tuple(sorted(self.chunks, key=lambda c: (c.start, -c.end)))
        sent = Sentence(tuple(self.tokens), chunks, self.meta, sentence_index)
        self.tokens = []
        self.chunks = []
        return sent


def parse_document(
    stream: BinaryIO | Iterable[bytes] | Iterable[str],
    meta: DocumentMeta,
    on_issue: Callable[[ParseIssue], None] | None = None,
) -> Iterator[Sentence]:
    """Yield the sentences of one vertical document in order.

    Malformed lines are reported through ``on_issue`` (default: logged) and
    skipped.  Chunks still open when a sentence ends are closed there.
    """
    on_issue = on_issue or _log_issue
    builder = _SentenceBuilder(meta, on_issue)
    index = 0
    seen_token = False
    line_no = 0
    for line_no, line in enumerate(_lines(stream), 1):
        if not line.strip():
            continue
        if not seen_token and "\t" not in line and _HEADER_LINE.match(line):
            continue
        m = _CHUNK_LINE.match(line.strip())
        if m and "\t" not in line:
            kind = ChunkKind.from_tag(m.group(2))
            if m.group(1):
                builder.close_chunk(kind, line_no)
            else:
                builder.open_chunk(kind, line_no)
            continue
        fields = line.split("\t")
        if len(fields) != 3 or not fields[0]:
            on_issue(ParseIssue(line_no, "malformed",
                                f"expected 3 tab-separated fields, got {len(fields)}"))
            continue
        seen_token = True
        builder.add(*fields)
        if fields[1] == "SENT":
            sent = builder.finish(index, line_no)
            if sent is not None:
                yield sent
                index += 1
    sent = builder.finish(index, line_no)
    if sent is not None:
        yield sent


def _first_letter(sentence: Sentence) -> str | None:
    for tok in sentence.tokens:
        for ch in tok.surface:
            if ch.isalpha():
                return ch
    return None


def _ends_open(sentence: Sentence) -> bool:
    return sentence.tokens[-1].surface in (ELLIPSIS, "?", "!")


def merge_sentences(a: Sentence, b: Sentence) -> Sentence:
    offset = len(a.tokens)
    tokens = a.tokens + tuple(replace(t, index=t.index + offset) for t in b.tokens)
    chunks = a.chunks + tuple(c.shifted(offset) for c in b.chunks)
    return Sentence(tokens, chunks, a.meta, a.sentence_index)


def resegment(sentences: Iterable[Sentence]) -> Iterator[Sentence]:
    """Merge a sentence ending in an ellipsis, "?" or "!" with its successor
    when the successor's first word is not capitalized.  Applies transitively;
    output sentences are renumbered from 0.
    """
    pending: Sentence | None = None
    index = 0
    for sent in sentences:
        if pending is None:
            pending = sent
            continue
        letter = _first_letter(sent)
        if _ends_open(pending) and letter is not None and not letter.isupper():
            pending = merge_sentences(pending, sent)
            continue
        yield replace(pending, sentence_index=index)
        index += 1
        pending = sent
    if pending is not None:
        yield replace(pending, sentence_index=index)


def read_header(path: str | Path) -> dict[str, str]:
    """Header fields (``#key=value`` lines) found before the first token."""
    fields: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\r\n")
            if not line.strip():
                continue
            m = _HEADER_LINE.match(line)
            if m is None or "\t" in line:
                if _CHUNK_LINE.match(line.strip()):
                    continue
                break
            fields[m.group(1)] = m.group(2).strip()
    return fields


def meta_from_header(fields: dict[str, str], *, default_doc_id: str,
                     default_language: str | None = None) -> DocumentMeta:
    lang = (fields.get("lang") or default_language or "").upper()
    year = fields.get("year")
    return DocumentMeta(
        doc_id=fields.get("doc_id") or default_doc_id,
        author_id=fields.get("author", ""),
        title=fields.get("title", ""),
        language=lang,
        year=int(year) if year else None,
    )


def read_document(path: str | Path, default_language: str | None = None,
                  on_issue: Callable[[ParseIssue], None] | None = None,
                  ) -> tuple[DocumentMeta, Iterator[Sentence]]:
    """Open a vertical file and return its metadata and resegmented sentences.

    The sentence iterator keeps the file open until exhausted.
    """
    path = Path(path)
    meta = meta_from_header(read_header(path), default_doc_id=path.stem,
                            default_language=default_language)

    def gen() -> Iterator[Sentence]:
        with open(path, "rb") as fh:
            yield from resegment(parse_document(fh, meta, on_issue))

    return meta, gen()


def parse_text(text: str, meta: DocumentMeta, **kw) -> list[Sentence]:
    """Convenience wrapper for in-memory vertical text."""
    return list(parse_document(io.BytesIO(text.encode("utf-8")), meta, **kw))
