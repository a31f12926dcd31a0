"""Log-Mel spectrogram front end.

Magnitude STFT with a periodic Hann window, triangular filterbank on the
HTK Mel scale spanning 0 to Nyquist, then log with a 1e-10 floor.
Frame count follows floor((N - window) / hop) + 1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..acoustics import AudioSignal

LOG_FLOOR = 1e-10


class SignalTooShort(ValueError):
    pass


@dataclass(frozen=True)
class MelConfig:
    n_bands: int = 40
    frame_length_ms: float = 25.0
    hop_ms: float = 10.0
    n_fft: int | None = None  # defaults to the next power of two >= window


@dataclass(frozen=True)
class MelSpectrogram:
    values: np.ndarray  # frames x bands, log energies
    frame_length_ms: float
    hop_ms: float
    n_bands: int
    sample_rate_hz: int

    @property
    def n_frames(self):
        return self.values.shape[0]


def hz_to_mel(f):
    return 2595.0 * np.log10(1.0 + np.asarray(f, dtype=float) / 700.0)


def mel_to_hz(m):
    return 700.0 * (10.0 ** (np.asarray(m, dtype=float) / 2595.0) - 1.0)


def mel_band_edges_hz(n_bands: int, sample_rate_hz: int) -> np.ndarray:
    """n_bands + 2 edge frequencies, equally spaced on the Mel scale."""
    mels = np.linspace(hz_to_mel(0.0), hz_to_mel(sample_rate_hz / 2.0), n_bands + 2)
    return mel_to_hz(mels)


def mel_filterbank(n_bands: int, n_fft: int, sample_rate_hz: int) -> np.ndarray:
    """Triangular filters, (n_bands, n_fft // 2 + 1)."""
    edges = mel_band_edges_hz(n_bands, sample_rate_hz)
    freqs = np.fft.rfftfreq(n_fft, d=1.0 / sample_rate_hz)
    bank = np.zeros((n_bands, len(freqs)))
    for band in range(n_bands):
        lo, center, hi = edges[band], edges[band + 1], edges[band + 2]
        rising = (freqs - lo) / max(center - lo, 1e-12)
        falling = (hi - freqs) / max(hi - center, 1e-12)
        bank[band] = np.clip(np.minimum(rising, falling), 0.0, None)
    return bank


def mel_spectrogram(signal: AudioSignal, config: MelConfig = MelConfig()) -> MelSpectrogram:
    fs = signal.sample_rate_hz
    window = int(round(config.frame_length_ms * fs / 1000.0))
    hop = int(round(config.hop_ms * fs / 1000.0))
    n = len(signal.samples)
    if n < window:
        raise SignalTooShort(f"signal of {n} samples shorter than one {window}-sample window")
    n_fft = config.n_fft or 1 << (window - 1).bit_length()

    n_frames = (n - window) // hop + 1
    idx = np.arange(window)[None, :] + hop * np.arange(n_frames)[:, None]
    frames = signal.samples[idx]
    hann = 0.5 * (1.0 - np.cos(2.0 * np.pi * np.arange(window) / window))
    magnitudes = np.abs(np.fft.rfft(frames * hann, n=n_fft, axis=1))

    bank = mel_filterbank(config.n_bands, n_fft, fs)
    energies = magnitudes @ bank.T
    return MelSpectrogram(
        values=np.log(np.maximum(energies, LOG_FLOOR)),
        frame_length_ms=config.frame_length_ms,
        hop_ms=config.hop_ms,
        n_bands=config.n_bands,
        sample_rate_hz=fs,
    )
