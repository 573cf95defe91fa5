import io
import random

import pytest
from hypothesis import given, settings, strategies as st

from simile_miner.corpus import (ChunkKind, DocumentMeta, ParseIssue, parse_document,
                                 parse_text, read_document, resegment)
from simile_miner.synthetic import bracket_to_lines, filler, to_vertical

from conftest import DATA, sentence

META = DocumentMeta("d", "a")


def test_figure2_chunks_and_autoclose():
    issues: list[ParseIssue] = []
    text = (DATA / "gold-en.vrt").read_text(encoding="utf-8")
    sents = list(parse_document(io.StringIO(text), META, issues.append))
    fig2 = sents[1]
    assert [t.surface for t in fig2.tokens][:5] == ["Guests", ",", "like", "fish", ","]
    kinds = [(c.kind, c.start, c.end) for c in fig2.chunks]
    assert (ChunkKind.PC, 2, 3) in kinds and (ChunkKind.NC, 3, 3) in kinds
    # the unclosed "after three days" PC ends at the sentence end
    assert (ChunkKind.PC, 8, 11) in kinds
    assert [i.kind for i in issues] == ["unclosed"]


def test_header_is_read(tmp_path):
    p = tmp_path / "x.vrt"
    p.write_text(to_vertical(["[NC He/PP ] [VC slept/VVD/sleep ] ./SENT"], doc_id="austen-1",
                             author="austen", language="EN", title="Emma", year=1815))
    meta, sents = read_document(p)
    assert (meta.doc_id, meta.author_id, meta.title, meta.year) == ("austen-1", "austen", "Emma", 1815)
    assert len(list(sents)) == 1


def test_missing_author_is_rejected(tmp_path):
    p = tmp_path / "x.vrt"
    p.write_text("#lang=EN\nHe\tPP\the\n.\tSENT\t.\n")
    with pytest.raises(ValueError):
        read_document(p)


def test_malformed_lines_are_skipped_and_reported():
    issues = []
    text = "A\tDT\ta\nbroken line\nman\tNN\tman\ttoo\tmany\n.\tSENT\t.\n"
    sents = list(parse_document(io.StringIO(text), META, issues.append))
    assert [t.surface for t in sents[0].tokens] == ["A", "."]
    assert [i.line_no for i in issues] == [2, 3]
    assert all(i.kind == "malformed" for i in issues)


def test_stray_close_is_reported():
    issues = []
    sents = list(parse_document(io.StringIO("</NC>\nA\tDT\ta\n.\tSENT\t.\n"), META, issues.append))
    assert len(sents[0].tokens) == 2 and issues


def test_unknown_lemma_falls_back_to_surface():
    s = parse_text("Zorbas\tNP\t<unknown>\n.\tSENT\t.\n", META)[0]
    assert s.tokens[0].lemma == "zorbas"


def test_no_final_sent_still_yields_sentence():
    sents = parse_text("A\tDT\ta\nman\tNN\tman\n", META)
    assert len(sents) == 1 and len(sents[0]) == 2


def test_resegment_merges_lowercase_continuation():
    text = to_vertical([
        "[NC He/PP ] [VC ran/VVD/run ] .../SENT",
        "and/CC [VC ran/VVD/run ] !/SENT",
        "then/RB [VC stopped/VVD/stop ] ./SENT",
        "[NC She/PP ] [VC waited/VVD/wait ] ?/SENT",
        "Nobody/NN [VC came/VVD/come ] ./SENT",
    ])
    out = list(resegment(parse_text(text, META)))
    assert [len(s) for s in out] == [9, 3, 3]
    assert [s.sentence_index for s in out] == [0, 1, 2]
    # chunks of merged parts are shifted along
    assert all(0 <= c.start <= c.end < len(s) for s in out for c in s.chunks)


def test_unicode_ellipsis_normalized():
    s = parse_text("Well\tRB\twell\n…\tSENT\t…\n", META)[0]
    assert s.tokens[-1].surface == "..."


def _random_doc(seed: int, n: int) -> list[str]:
    rng = random.Random(seed)
    return [filler(rng) for _ in range(n)]


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 12))
def test_token_conservation_and_chunk_validity(seed, n):
    specs = _random_doc(seed, n)
    text = to_vertical(specs)
    token_lines = sum(1 for s in specs for ln in bracket_to_lines(s) if "\t" in ln)
    sents = parse_text(text, META)
    assert sum(len(s) for s in sents) == token_lines
    assert len(sents) == n
    for s in sents:
        assert [t.index for t in s.tokens] == list(range(len(s)))
        for a in s.chunks:
            assert 0 <= a.start <= a.end < len(s)
            for b in s.chunks:
                # chunks nest or are disjoint; they never cross
                crossing = a.start < b.start <= a.end < b.end
                assert not crossing


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_parsing_is_deterministic(seed):
    text = to_vertical(_random_doc(seed, 6))
    assert parse_text(text, META) == parse_text(text, META)


def test_sentence_helpers():
    s = sentence("[NC The/DT old/JJ man/NN ] [PC in/IN [NC the/DT house/NN ] ] ./SENT")
    assert s.chunk_at(5, ChunkKind.NC).start == 4
    assert s.enclosing(s.chunk_at(5, ChunkKind.NC), ChunkKind.PC).start == 3
    assert s.chunk_starting(0, ChunkKind.NC).end == 2
    assert s.chunk_ending(5, ChunkKind.NC).start == 4
    assert s.text == "The old man in the house ."
