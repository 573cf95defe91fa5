from __future__ import annotations

from pathlib import Path

import pytest

from simile_miner.corpus import DocumentMeta, Sentence, parse_text
from simile_miner.synthetic import to_vertical

ROOT = Path(__file__).resolve().parents[1]
DATA = Path(__file__).resolve().parent / "data"
WORDNET_INDEX = ROOT / "data" / "wordnet-3.0" / "index.noun.gz"
WORDNET_DATA = ROOT / "data" / "wordnet-3.0" / "data.noun.gz"

ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def sentence(spec: str, language: str = "EN", doc_id: str = "t", author: str = "a",
             strict: bool = True) -> Sentence:
    """Parse one bracket-notation sentence."""
    meta = DocumentMeta(doc_id, author, language=language)
    sents = parse_text(to_vertical([spec], strict=strict), meta)
    assert len(sents) == 1, sents
    return sents[0]


@pytest.fixture(scope="session")
def en_lexicon():
    from simile_miner.lexicon import load_en_lexicon
    return load_en_lexicon(WORDNET_INDEX, WORDNET_DATA)


@pytest.fixture(scope="session")
def fr_lexicon():
    from simile_miner.lexicon import load_fr_lexicon
    return load_fr_lexicon(DATA / "fr_lexicon.tsv")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'} ({detail})")
