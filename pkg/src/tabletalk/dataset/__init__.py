"""Transcripts to labeled simulated-classroom audio corpora."""

from .build import (
    DatasetManifest,
    SpeakerNotInGeometry,
    build_dataset,
    render_session,
    scene_layout_for,
)
from .schedule import (
    InfeasibleOverlap,
    NoiseEvent,
    ScheduledUtterance,
    SessionScript,
    overlap_fraction,
    schedule_session,
)
from .transcript import (
    TranscriptLine,
    UnparseableLine,
    normalize_text,
    preprocess_transcript,
    tag_language,
)
from .tts import (
    CachingTTS,
    HttpTTS,
    MockTTS,
    QuotaExceeded,
    ServiceUnavailable,
    TtsError,
    cache_key,
    synthesize_utterance,
    voice_for_language,
)

__all__ = [
    "CachingTTS",
    "DatasetManifest",
    "HttpTTS",
    "InfeasibleOverlap",
    "MockTTS",
    "NoiseEvent",
    "QuotaExceeded",
    "ScheduledUtterance",
    "ServiceUnavailable",
    "SessionScript",
    "SpeakerNotInGeometry",
    "TranscriptLine",
    "TtsError",
    "UnparseableLine",
    "build_dataset",
    "cache_key",
    "normalize_text",
    "overlap_fraction",
    "preprocess_transcript",
    "render_session",
    "scene_layout_for",
    "schedule_session",
    "synthesize_utterance",
    "tag_language",
    "voice_for_language",
]
