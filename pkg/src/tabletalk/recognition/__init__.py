"""Mel features, keyword classification, and evaluation metrics."""

from .classify import (
    DEFAULT_KEYWORDS,
    DEFAULT_TAU,
    KeywordLexicon,
    REJECTION_CLASS,
    classify_keyword,
)
from .distance import levenshtein
from .g2p import ENGLISH_PRONUNCIATIONS, g2p_spanish, pronounce
from .mel import (
    MelConfig,
    MelSpectrogram,
    SignalTooShort,
    hz_to_mel,
    mel_band_edges_hz,
    mel_filterbank,
    mel_spectrogram,
    mel_to_hz,
)
from .metrics import (
    ConfusionStats,
    EmptyReference,
    REFERENCE_GOOGLE_ACCURACY,
    REFERENCE_SENTENCE_ACCURACY,
    UnknownLabel,
    character_error_rate,
    macro_average_rates,
    macro_averages,
    metrics_jsonable,
    score_keywords,
    write_metrics_csv,
    write_metrics_json,
)

__all__ = [
    "ConfusionStats",
    "DEFAULT_KEYWORDS",
    "DEFAULT_TAU",
    "ENGLISH_PRONUNCIATIONS",
    "EmptyReference",
    "KeywordLexicon",
    "MelConfig",
    "MelSpectrogram",
    "REFERENCE_GOOGLE_ACCURACY",
    "REFERENCE_SENTENCE_ACCURACY",
    "REJECTION_CLASS",
    "SignalTooShort",
    "UnknownLabel",
    "character_error_rate",
    "classify_keyword",
    "g2p_spanish",
    "hz_to_mel",
    "levenshtein",
    "macro_average_rates",
    "macro_averages",
    "mel_band_edges_hz",
    "mel_filterbank",
    "mel_spectrogram",
    "mel_to_hz",
    "metrics_jsonable",
    "pronounce",
    "score_keywords",
    "write_metrics_csv",
    "write_metrics_json",
]
