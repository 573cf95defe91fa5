"""Synthetic vertical corpora for experiments and tests.

Sentences are written in a compact bracket notation and converted to the
vertical format::

    [NC The/DT man/NN ] [VC was/VBD/be ] pale/JJ as/IN [NC death/NN ] ./SENT

A token is ``surface/TAG`` or ``surface/TAG/lemma`` (lemma defaults to the
lowercased surface); ``[XX`` opens a chunk and ``]`` closes the innermost one.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, TextIO


def bracket_to_lines(spec: str, strict: bool = True) -> list[str]:
    lines: list[str] = []
    stack: list[str] = []
    for item in spec.split():
        if item.startswith("[") and len(item) > 1:
            stack.append(item[1:])
            lines.append(f"<{item[1:]}>")
        elif item == "]":
            if not stack:
                raise ValueError(f"unbalanced ']' in {spec!r}")
            lines.append(f"</{stack.pop()}>")
        else:
            parts = item.split("/", 2)
            if len(parts) < 2 or not parts[0] or not parts[1]:
                raise ValueError(f"bad token {item!r} in {spec!r}")
            lemma = parts[2] if len(parts) == 3 else parts[0].lower()
            lines.append(f"{parts[0]}\t{parts[1]}\t{lemma}")
    if stack and strict:
        raise ValueError(f"unclosed chunk in {spec!r}")
    return lines


def header_lines(doc_id: str, author: str, language: str = "EN", title: str = "",
                 year: int | None = None) -> list[str]:
    out = [f"#doc_id={doc_id}", f"#author={author}", f"#lang={language}"]
    if title:
        out.append(f"#title={title}")
    if year is not None:
        out.append(f"#year={year}")
    return out


def to_vertical(sentences: Iterable[str], strict: bool = True, **header) -> str:
    """Vertical text; with ``strict=False`` chunks may be left open."""
    lines = header_lines(**header) if header else []
    for s in sentences:
        lines.extend(bracket_to_lines(s, strict))
    return "\n".join(lines) + "\n"


def write_document(path: Path, sentences: Iterable[str], **header) -> int:
    """Write one document; returns its token count."""
    n = 0
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(header_lines(**header)) + "\n")
        for s in sentences:
            lines = bracket_to_lines(s)
            n += sum(1 for ln in lines if "\t" in ln)
            fh.write("\n".join(lines) + "\n")
    return n


# -- English sentence material --------------------------------------------

SUBJECTS = ["man", "woman", "girl", "boy", "soldier", "stranger", "doctor", "widow",
            "captain", "child"]
ADJ_COUPLES = [("cold", "ice"), ("white", "snow"), ("black", "night"), ("silent", "grave"),
               ("heavy", "lead"), ("hard", "stone"), ("clear", "daylight"), ("bright", "star")]
VERB_COUPLES = [("weep", "wept", "child"), ("fight", "fought", "lion"),
                ("sleep", "slept", "log"), ("run", "ran", "deer")]
PLACES = ["house", "garden", "river", "church", "market", "road", "forest", "village"]
MOTION = [("walk", "walked"), ("go", "went"), ("return", "returned"), ("hurry", "hurried")]
OBJECTS = ["letter", "book", "horse", "lamp", "ring", "coat"]


def _np(rng: random.Random, noun: str | None = None) -> str:
    noun = noun or rng.choice(SUBJECTS)
    det = rng.choice(["The/DT/the", "A/DT/a", "That/DT/that"])
    return f"[NC {det} {noun}/NN ]"


def planted_sentence(rng: random.Random, ground: str = "pale", vehicle: str = "death") -> str:
    verb = rng.choice(["looked/VVD/look", "was/VBD/be", "seemed/VVD/seem"])
    return f"{_np(rng)} [VC {verb} ] {ground}/JJ as/IN [NC {vehicle}/NN ] ./SENT"


def adj_simile(rng: random.Random) -> str:
    g, v = rng.choice(ADJ_COUPLES)
    if rng.random() < 0.5:
        return f"{_np(rng)} [VC was/VBD/be ] as/RB/as {g}/JJ as/IN [NC {v}/NN ] ./SENT"
    return f"{_np(rng)} [VC was/VBD/be ] {g}/JJ like/IN [NC a/DT {v}/NN ] ./SENT"


def verb_simile(rng: random.Random) -> str:
    lemma, form, v = rng.choice(VERB_COUPLES)
    return f"{_np(rng)} [VC {form}/VVD/{lemma} ] like/IN [NC a/DT {v}/NN ] ./SENT"


def plain_sentence(rng: random.Random) -> str:
    lemma, form = rng.choice(MOTION)
    s = (f"{_np(rng)} [VC {form}/VVD/{lemma} ] [PC to/TO/to [NC the/DT "
         f"{rng.choice(PLACES)}/NN ] ]")
    if rng.random() < 0.4:
        s += (f" and/CC [VC took/VVD/take ] [NC the/DT {rng.choice(OBJECTS)}/NN ]")
    return s + " ./SENT"


def long_sentence(rng: random.Random, clauses: int) -> str:
    parts = [plain_sentence(rng)[:-len(" ./SENT")] for _ in range(clauses)]
    return " ,/, and/CC ".join(parts) + " ./SENT"


def filler(rng: random.Random) -> str:
    r = rng.random()
    if r < 0.08:
        return adj_simile(rng)
    if r < 0.12:
        return verb_simile(rng)
    return plain_sentence(rng)


def count_tokens(spec: str) -> int:
    return sum(1 for item in spec.split() if "/" in item and not item.startswith("["))


# -- corpora ---------------------------------------------------------------

@dataclass(frozen=True)
class PlantedCorpus:
    directory: Path
    files: tuple[Path, ...]
    plantings: int
    authors: tuple[str, ...]


def planted_corpus(directory: str | Path, n_sentences: int = 500, plantings: int = 6,
                   n_authors: int = 3, docs_per_author: int = 2, seed: int = 0,
                   ground: str = "pale", vehicle: str = "death") -> PlantedCorpus:
    """Write ``n_sentences`` English sentences over several authors, with
    ``ground as vehicle`` planted ``plantings`` times round-robin across authors."""
    rng = random.Random(seed)
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    authors = tuple(f"author{i}" for i in range(n_authors))
    n_docs = n_authors * docs_per_author
    docs: list[list[str]] = [[] for _ in range(n_docs)]
    planted_in = [(k % n_authors) + n_authors * ((k // n_authors) % docs_per_author)
                  for k in range(plantings)]
    per_doc = [n_sentences // n_docs + (1 if d < n_sentences % n_docs else 0)
               for d in range(n_docs)]
    for d in range(n_docs):
        k = planted_in.count(d)
        body = [planted_sentence(rng, ground, vehicle) for _ in range(k)]
        body += [filler(rng) for _ in range(per_doc[d] - k)]
        rng.shuffle(body)
        docs[d] = body
    files = []
    for d, body in enumerate(docs):
        author = authors[d % n_authors]
        path = directory / f"doc{d:02d}.vrt"
        write_document(path, body, doc_id=f"doc{d:02d}", author=author, language="EN")
        files.append(path)
    return PlantedCorpus(directory, tuple(files), plantings, authors)


def sentence_stream(rng: random.Random, n_tokens: int, long_every: int = 0,
                    long_clauses: int = 6) -> Iterator[str]:
    produced = 0
    i = 0
    while produced < n_tokens:
        i += 1
        s = long_sentence(rng, long_clauses) if long_every and i % long_every == 0 else filler(rng)
        produced += count_tokens(s)
        yield s


def large_corpus(directory: str | Path, n_tokens: int = 1_000_000, n_docs: int = 10,
                 seed: int = 0, long_every: int = 500) -> list[Path]:
    """Write about ``n_tokens`` tokens split over ``n_docs`` documents."""
    rng = random.Random(seed)
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    files = []
    share = n_tokens // n_docs
    for d in range(n_docs):
        path = directory / f"big{d:03d}.vrt"
        write_document(path, sentence_stream(rng, share, long_every),
                       doc_id=f"big{d:03d}", author=f"writer{d % 4}", language="EN")
        files.append(path)
    return files


def write_sentences(fh: TextIO, sentences: Iterable[str]) -> None:
    for s in sentences:
        fh.write("\n".join(bracket_to_lines(s)) + "\n")
