"""Mono 16-bit PCM WAV reading and writing."""

from __future__ import annotations

import struct
import wave

import numpy as np

from .room import AudioSignal

PCM_SCALE = 32768.0


class MalformedWav(Exception):
    pass


class UnsupportedEncoding(Exception):
    pass


def write_wav(path, signal: AudioSignal) -> None:
    """Write mono 16-bit little-endian PCM; values outside [-1, 1] clip."""
    scaled = np.round(signal.samples * PCM_SCALE)
    clipped = np.clip(scaled, -32768, 32767).astype("<i2")
    with wave.open(str(path), "wb") as fh:
        fh.setnchannels(1)
        fh.setsampwidth(2)
        fh.setframerate(signal.sample_rate_hz)
        fh.writeframes(clipped.tobytes())


def read_wav(path) -> AudioSignal:
    try:
        with wave.open(str(path), "rb") as fh:
            channels = fh.getnchannels()
            width = fh.getsampwidth()
            rate = fh.getframerate()
            compression = fh.getcomptype()
            frames = fh.readframes(fh.getnframes())
    except (wave.Error, EOFError, struct.error) as exc:
        raise MalformedWav(f"{path}: {exc}") from exc
    if compression != "NONE":
        raise UnsupportedEncoding(f"{path}: compressed WAV ({compression}) not supported")
    if channels != 1 or width != 2:
        raise UnsupportedEncoding(
            f"{path}: expected mono 16-bit PCM, got {channels} ch x {8 * width} bit"
        )
    samples = np.frombuffer(frames, dtype="<i2").astype(np.float64) / PCM_SCALE
    return AudioSignal(samples, rate)
