"""Text-to-speech backends: an HTTP service adapter and an offline mock.

The mock emits a deterministic tone sequence (80 ms per character) keyed by
the text hash, so the whole pipeline runs and reproduces offline.  The real
service client is a thin adapter behind the same interface; results are
cached by SHA-256 of (normalized text, voice, sample rate) either way.
"""

from __future__ import annotations

import hashlib
import io
import logging
import os
import time
import wave
from pathlib import Path

import numpy as np

from ..acoustics import AudioSignal
from .transcript import TranscriptLine, normalize_text

logger = logging.getLogger(__name__)

SECONDS_PER_CHAR = 0.08
DEFAULT_VOICES = {"es": "es-f1", "en": "en-f1", "mixed": "es-f1"}


class TtsError(Exception):
    pass


class ServiceUnavailable(TtsError):
    pass


class QuotaExceeded(TtsError):
    pass


def voice_for_language(language: str) -> str:
    return DEFAULT_VOICES.get(language, DEFAULT_VOICES["es"])


def cache_key(text: str, voice: str, sample_rate_hz: int) -> str:
    blob = f"{normalize_text(text)}|{voice}|{sample_rate_hz}".encode("utf-8")
    return hashlib.sha256(blob).hexdigest()


class MockTTS:
    """Offline placeholder synthesizer: one tone segment per character."""

    amplitude = 0.22
    ramp_s = 0.005

    def __init__(self):
        self.calls = 0

    def synthesize(self, text: str, voice: str, sample_rate_hz: int) -> np.ndarray:
        if not text:
            raise ValueError("cannot synthesize empty text")
        self.calls += 1
        digest = hashlib.sha256(f"{voice}|{text}".encode("utf-8")).digest()
        seg_len = round(SECONDS_PER_CHAR * sample_rate_hz)
        ramp = min(round(self.ramp_s * sample_rate_hz), seg_len // 2)
        envelope = np.ones(seg_len)
        if ramp > 0:
            fade = 0.5 * (1.0 - np.cos(np.pi * np.arange(ramp) / ramp))
            envelope[:ramp] = fade
            envelope[-ramp:] = fade[::-1]
        t = np.arange(seg_len) / sample_rate_hz

        segments = []
        for index, char in enumerate(text):
            if char == " ":
                segments.append(np.zeros(seg_len))
                continue
            freq = 180.0 + 8.0 * digest[(index + ord(char)) % len(digest)]
            segments.append(self.amplitude * envelope * np.sin(2 * np.pi * freq * t))
        return np.concatenate(segments)


class HttpTTS:
    """Adapter for a POST-a-JSON, get-a-WAV speech service.

    Endpoint and credentials come from TABLETALK_TTS_URL and
    TABLETALK_TTS_TOKEN unless given explicitly.  503 maps to
    ServiceUnavailable and 429 to QuotaExceeded so the retry policy can
    tell them apart.  max_requests_per_s throttles outgoing calls.
    """

    def __init__(self, endpoint=None, token=None, timeout_s=60.0,
                 max_requests_per_s=5.0, clock=time.monotonic, sleep=time.sleep):
        self.endpoint = endpoint or os.environ.get("TABLETALK_TTS_URL")
        self.token = token or os.environ.get("TABLETALK_TTS_TOKEN")
        self.timeout_s = timeout_s
        self._min_interval = 1.0 / max_requests_per_s if max_requests_per_s else 0.0
        self._clock = clock
        self._sleep = sleep
        self._last_request = None
        if not self.endpoint:
            raise TtsError("no TTS endpoint configured (TABLETALK_TTS_URL)")
        import requests

        self._session = requests.Session()
        if self.token:
            self._session.headers["Authorization"] = f"Bearer {self.token}"

    def _throttle(self):
        if self._min_interval and self._last_request is not None:
            wait = self._min_interval - (self._clock() - self._last_request)
            if wait > 0:
                self._sleep(wait)
        self._last_request = self._clock()

    def synthesize(self, text: str, voice: str, sample_rate_hz: int) -> np.ndarray:
        if not text:
            raise ValueError("cannot synthesize empty text")
        self._throttle()
        response = self._session.post(
            self.endpoint,
            json={"text": text, "voice": voice, "sample_rate": sample_rate_hz},
            timeout=self.timeout_s,
        )
        if response.status_code == 503:
            raise ServiceUnavailable(f"{self.endpoint} returned 503")
        if response.status_code == 429:
            raise QuotaExceeded(f"{self.endpoint} returned 429")
        response.raise_for_status()
        with wave.open(io.BytesIO(response.content)) as fh:
            frames = fh.readframes(fh.getnframes())
            rate = fh.getframerate()
        samples = np.frombuffer(frames, dtype="<i2").astype(np.float64) / 32768.0
        if rate != sample_rate_hz:
            from scipy.signal import resample_poly

            samples = resample_poly(samples, sample_rate_hz, rate)
        return samples


class CachingTTS:
    """Cache wrapper: repeated (text, voice, rate) hits skip the backend."""

    def __init__(self, backend, cache_dir=None, max_attempts=3, backoff_s=0.5,
                 sleep=time.sleep):
        self.backend = backend
        self.cache_dir = Path(cache_dir) if cache_dir else None
        self.max_attempts = max_attempts
        self.backoff_s = backoff_s
        self._sleep = sleep
        self._memory: dict[str, np.ndarray] = {}
        if self.cache_dir:
            self.cache_dir.mkdir(parents=True, exist_ok=True)

    def synthesize(self, text: str, voice: str, sample_rate_hz: int) -> np.ndarray:
        key = cache_key(text, voice, sample_rate_hz)
        if key in self._memory:
            return self._memory[key]
        if self.cache_dir:
            path = self.cache_dir / f"{key}.npy"
            if path.exists():
                samples = np.load(path)
                self._memory[key] = samples
                return samples

        last_error = None
        for attempt in range(self.max_attempts):
            try:
                samples = self.backend.synthesize(text, voice, sample_rate_hz)
                break
            except (ServiceUnavailable, QuotaExceeded) as exc:
                last_error = exc
                if attempt + 1 < self.max_attempts:
                    delay = self.backoff_s * 2 ** attempt
                    logger.warning("TTS attempt %d failed (%s); retrying in %.1fs",
                                   attempt + 1, exc, delay)
                    self._sleep(delay)
        else:
            raise last_error

        self._memory[key] = samples
        if self.cache_dir:
            np.save(self.cache_dir / f"{key}.npy", samples)
        return samples


def synthesize_utterance(line: TranscriptLine, voice=None, backend=None,
                         sample_rate_hz: int = 16000) -> AudioSignal:
    """Speech audio for one transcript line at the scene sample rate."""
    if not line.normalized_text:
        raise ValueError("utterance has empty normalized text")
    backend = backend if backend is not None else MockTTS()
    voice = voice or voice_for_language(line.language)
    samples = backend.synthesize(line.normalized_text, voice, sample_rate_hz)
    return AudioSignal(np.clip(samples, -1.0, 1.0), sample_rate_hz)
