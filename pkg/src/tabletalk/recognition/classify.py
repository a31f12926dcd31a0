"""Minimum-distance bilingual keyword classifier.

A phoneme hypothesis is compared against every lexicon pronunciation by
token-level edit distance; the closest keyword wins when its distance
stays within tau * len(its phonemes), otherwise the hypothesis falls into
the rejection class ("Others").  Ties break by lexicon order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..dataset.transcript import normalize_text
from .distance import levenshtein
from .g2p import pronounce

REJECTION_CLASS = "Others"
DEFAULT_TAU = 0.5

# keyword list used in the number-representation lessons
DEFAULT_KEYWORDS = (
    "uno", "dos", "tres", "cuatro", "cinco", "cero", "computadora", "numero",
)


@dataclass
class KeywordLexicon:
    entries: dict[str, str]  # keyword -> phoneme token string
    rejection_class: str = REJECTION_CLASS
    tau: float = DEFAULT_TAU

    def __post_init__(self):
        cleaned: dict[str, str] = {}
        for keyword, phonemes in self.entries.items():
            key = normalize_text(keyword)
            if not key or not phonemes.strip():
                raise ValueError(f"empty keyword or phonemes: {keyword!r}")
            if key in cleaned:
                raise ValueError(f"duplicate keyword after normalization: {key!r}")
            cleaned[key] = " ".join(phonemes.split())
        self.entries = cleaned

    @property
    def classes(self):
        return list(self.entries) + [self.rejection_class]

    @classmethod
    def default(cls, tau: float = DEFAULT_TAU) -> "KeywordLexicon":
        return cls({kw: pronounce(kw) for kw in DEFAULT_KEYWORDS}, tau=tau)

    @classmethod
    def load(cls, path, tau: float = DEFAULT_TAU) -> "KeywordLexicon":
        """Read 'keyword<TAB>phoneme string' lines."""
        entries: dict[str, str] = {}
        with open(path, "r", encoding="utf-8") as fh:
            for number, raw in enumerate(fh, start=1):
                line = raw.rstrip("\n")
                if not line.strip() or line.lstrip().startswith("#"):
                    continue
                if "\t" not in line:
                    raise ValueError(f"{path}:{number}: expected keyword<TAB>phonemes")
                keyword, phonemes = line.split("\t", 1)
                entries[keyword.strip()] = phonemes.strip()
        return cls(entries, tau=tau)

    def dump(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            for keyword, phonemes in self.entries.items():
                fh.write(f"{keyword}\t{phonemes}\n")


def classify_keyword(hypothesis: str, lexicon: KeywordLexicon) -> str:
    """Label for one phoneme-string hypothesis (or raw text; it is
    normalized first)."""
    if not lexicon.entries:
        raise ValueError("empty lexicon")
    tokens = normalize_text(hypothesis).split()
    best_keyword = None
    best_distance = None
    for keyword, phonemes in lexicon.entries.items():
        distance = levenshtein(tokens, phonemes.split())
        if best_distance is None or distance < best_distance:
            best_keyword, best_distance = keyword, distance
    limit = lexicon.tau * len(lexicon.entries[best_keyword].split())
    if best_distance <= limit:
        return best_keyword
    return lexicon.rejection_class
