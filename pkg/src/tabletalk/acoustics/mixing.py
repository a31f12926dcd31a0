"""Convolutional rendering of multi-speaker scenes and SNR mixing."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.signal import fftconvolve

from .room import (
    AudioSignal,
    SampleRateMismatch,
    SceneLayout,
    SilentNoise,
    compute_rir,
)

PEAK_TARGET = 0.9


@dataclass(frozen=True)
class RenderedMixture:
    signal: AudioSignal
    # gain applied for peak normalization; 1.0 means the raw sum was kept
    normalization_gain: float

    @property
    def normalized(self):
        return self.normalization_gain != 1.0


def render_mixture(
    layout: SceneLayout,
    signals: dict[str, AudioSignal],
    onsets: dict[str, int] | None = None,
    rirs: dict[str, np.ndarray] | None = None,
) -> RenderedMixture:
    """Sum of each source convolved with its RIR, shifted to its onset.

    The raw sum is linear in the inputs; only when its peak would exceed
    1.0 is it rescaled to a 0.9 peak, and the applied gain is reported so
    callers can undo or record it.
    """
    onsets = onsets or {}
    fs = layout.room.sample_rate_hz
    tracks = []
    total_len = 0
    for source_id, signal in signals.items():
        if signal.sample_rate_hz != fs:
            raise SampleRateMismatch(
                f"source {source_id!r} at {signal.sample_rate_hz} Hz, scene at {fs} Hz"
            )
        onset = int(onsets.get(source_id, 0))
        if onset < 0:
            raise ValueError(f"negative onset for source {source_id!r}")
        if rirs is not None and source_id in rirs:
            rir = np.asarray(rirs[source_id], dtype=float)
        else:
            rir = compute_rir(layout, source_id).taps
        wet = fftconvolve(signal.samples, rir)
        tracks.append((onset, wet))
        total_len = max(total_len, onset + len(wet))

    mixture = np.zeros(total_len)
    for onset, wet in tracks:
        mixture[onset:onset + len(wet)] += wet

    gain = 1.0
    peak = float(np.max(np.abs(mixture))) if total_len else 0.0
    if peak > 1.0:
        gain = PEAK_TARGET / peak
        mixture = mixture * gain
    return RenderedMixture(AudioSignal(mixture, fs), gain)


def mix_at_snr(signal: AudioSignal, noise: AudioSignal, snr_db: float) -> AudioSignal:
    """signal + g * noise with g set so the overlap-region SNR is snr_db."""
    if signal.sample_rate_hz != noise.sample_rate_hz:
        raise SampleRateMismatch(
            f"signal at {signal.sample_rate_hz} Hz, noise at {noise.sample_rate_hz} Hz"
        )
    overlap = min(len(signal), len(noise))
    if overlap == 0:
        raise ValueError("signal and noise do not overlap")
    p_signal = float(np.mean(signal.samples[:overlap] ** 2))
    p_noise = float(np.mean(noise.samples[:overlap] ** 2))
    if p_noise <= 0.0:
        raise SilentNoise("noise has zero power over the overlap region")
    gain = math.sqrt(p_signal / (p_noise * 10.0 ** (snr_db / 10.0)))
    out = np.array(signal.samples, copy=True)
    out[:overlap] += gain * noise.samples[:overlap]
    return AudioSignal(out, signal.sample_rate_hz)


def measured_snr_db(signal: AudioSignal, noisy: AudioSignal) -> float:
    """Post-hoc SNR of noisy = signal + noise over their overlap."""
    overlap = min(len(signal), len(noisy))
    residual = noisy.samples[:overlap] - signal.samples[:overlap]
    p_signal = float(np.mean(signal.samples[:overlap] ** 2))
    p_noise = float(np.mean(residual ** 2))
    if p_noise <= 0.0:
        raise SilentNoise("no residual noise to measure")
    return 10.0 * math.log10(p_signal / p_noise)
