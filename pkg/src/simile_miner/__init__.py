"""Simile mining over chunked English and French text.

Pipeline: read vertical documents (:mod:`.corpus`), locate comparison
markers (:mod:`.markers`), extract constituents (:mod:`.extractor`), score
tenor/vehicle distance (:mod:`.lexicon`), detect frozen similes
(:mod:`.frozen`) and render reports (:mod:`.report`).
"""

from .corpus import Chunk, ChunkKind, DocumentMeta, Sentence, Token, parse_document, read_document
from .extractor import SimileCandidate, extract_candidates
from .frozen import Couple, CoupleStats, DetectConfig, FrozenSimile, assign_tier, detect, merge_stats
from .lexicon import Lexicon, assess_distance, load_en_lexicon, load_fr_lexicon
from .markers import MarkerDef, builtin_markers, match_markers

__version__ = "0.1.0"

__all__ = [
    "Chunk", "ChunkKind", "Couple", "CoupleStats", "DetectConfig", "DocumentMeta",
    "FrozenSimile", "Lexicon", "MarkerDef", "Sentence", "SimileCandidate", "Token",
    "assess_distance", "assign_tier", "builtin_markers", "detect", "extract_candidates",
    "load_en_lexicon", "load_fr_lexicon", "match_markers", "merge_stats", "parse_document",
    "read_document",
]
