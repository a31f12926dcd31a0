"""Transcript parsing and text normalization.

Input transcripts are UTF-8 text with one utterance per line, prefixed by
the speaker id: "S0: Uno, dos, TRES.".  Normalization lowercases, strips
accents (the recognizer does not distinguish them), keeps the enye as its
own letter, and drops punctuation, leaving only [a-z0-9ñ ] plus single
spaces.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass

logger = logging.getLogger(__name__)

_SPEAKER_PREFIX = re.compile(r"^\s*([A-Za-z][\w-]*)\s*:\s*(.*)$")
_ACCENT_MAP = str.maketrans({
    "á": "a", "é": "e", "í": "i", "ó": "o", "ú": "u", "ü": "u",
    "Á": "a", "É": "e", "Í": "i", "Ó": "o", "Ú": "u", "Ü": "u",
    "Ñ": "ñ",
})
_KEEP = re.compile(r"[^a-z0-9ñ ]")

# small function-word lists for the line language tag; these classroom
# sessions are Spanish-dominant, so unknown text defaults to Spanish
_SPANISH_WORDS = frozenset(
    "el la los las es un una que cual como donde cuanto y de en si no "
    "uno dos tres cuatro cinco seis siete ocho nueve cero numero "
    "computadora por para con del esta este aqui".split()
)
_ENGLISH_WORDS = frozenset(
    "the a an is are what how where and of in it this that to you we "
    "one two three four five six seven eight nine zero number computer "
    "here press type".split()
)


class UnparseableLine(ValueError):
    """A transcript line without a speaker prefix."""

    def __init__(self, line_number: int, text: str):
        self.line_number = line_number
        self.text = text
        super().__init__(f"line {line_number}: no speaker prefix in {text!r}")


@dataclass(frozen=True)
class TranscriptLine:
    speaker_id: str
    raw_text: str
    normalized_text: str
    language: str  # "es" | "en" | "mixed"


def normalize_text(text: str) -> str:
    """Lowercase, strip accents, drop punctuation; idempotent."""
    lowered = text.lower().translate(_ACCENT_MAP)
    kept = _KEEP.sub(" ", lowered)
    return " ".join(kept.split())


def tag_language(normalized: str) -> str:
    words = set(normalized.split())
    has_es = bool(words & _SPANISH_WORDS)
    has_en = bool(words & _ENGLISH_WORDS)
    if has_es and has_en:
        return "mixed"
    if has_en:
        return "en"
    return "es"


def preprocess_transcript(text) -> list[TranscriptLine]:
    """Parse and normalize transcript lines; unparseable lines are logged
    with their line number and skipped."""
    if isinstance(text, str):
        raw_lines = text.splitlines()
    else:
        raw_lines = list(text)
    out: list[TranscriptLine] = []
    for number, raw in enumerate(raw_lines, start=1):
        if not raw.strip():
            continue
        match = _SPEAKER_PREFIX.match(raw)
        if match is None:
            logger.warning("%s", UnparseableLine(number, raw.strip()))
            continue
        speaker, body = match.group(1), match.group(2)
        normalized = normalize_text(body)
        if not normalized:
            continue
        out.append(TranscriptLine(
            speaker_id=speaker,
            raw_text=body.strip(),
            normalized_text=normalized,
            language=tag_language(normalized),
        ))
    return out
