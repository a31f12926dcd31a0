"""Shoebox image-source model and room impulse responses.

Walls mirror the source into a lattice of virtual images; each image is
delayed by its distance to the microphone and attenuated by spherical
spreading (1 / 4*pi*d) times the product of the reflection coefficients of
the walls its path touches.  Fractional sample delays are realized with an
81-tap Hann-windowed sinc kernel, so integer-sample delays reduce to exact
unit impulses.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

INCHES_TO_METERS = 0.0254
FRACTIONAL_KERNEL_TAPS = 81
KERNEL_HALF_SUPPORT = FRACTIONAL_KERNEL_TAPS // 2


class AcousticsError(Exception):
    """Base class for acoustic simulation failures."""


class SourceOutsideRoom(AcousticsError):
    pass


class CoincidentSourceMic(AcousticsError):
    pass


class SampleRateMismatch(AcousticsError):
    pass


class SilentNoise(AcousticsError):
    pass


@dataclass(frozen=True)
class RoomSpec:
    """Rectangular room with per-wall absorption.

    absorption holds the six wall coefficients alpha in [0, 1], ordered
    (x=0, x=Lx, y=0, y=Ly, z=0, z=Lz).  The wall reflection coefficient is
    beta = sqrt(1 - alpha).
    """

    dimensions_m: tuple[float, float, float] = (6.0, 5.0, 3.0)
    absorption: tuple[float, ...] = (0.35,) * 6
    max_order: int = 10
    sample_rate_hz: int = 16000
    speed_of_sound_mps: float = 343.0

    def __post_init__(self):
        if any(d <= 0 for d in self.dimensions_m):
            raise ValueError("room dimensions must be positive")
        if len(self.absorption) != 6:
            raise ValueError("absorption needs six wall coefficients")
        if any(not 0.0 <= a <= 1.0 for a in self.absorption):
            raise ValueError("absorption coefficients must lie in [0, 1]")
        if self.max_order < 0:
            raise ValueError("max_order must be >= 0")

    @property
    def reflection_coefficients(self):
        return tuple(math.sqrt(1.0 - a) for a in self.absorption)

    def contains(self, point, margin=0.0):
        return all(
            margin < p < dim - margin
            for p, dim in zip(point, self.dimensions_m)
        )


@dataclass
class SceneLayout:
    """Room plus microphone and source positions, all in meters."""

    room: RoomSpec
    mic_m: tuple[float, float, float]
    sources_m: dict[str, tuple[float, float, float]] = field(default_factory=dict)

    def __post_init__(self):
        if not self.room.contains(self.mic_m):
            raise SourceOutsideRoom(f"microphone {self.mic_m} outside the room")
        for name, pos in self.sources_m.items():
            if not self.room.contains(pos):
                raise SourceOutsideRoom(f"source {name!r} at {pos} outside the room")


def table_frame_to_room(position_in, table_center_m):
    """Inches in the table frame -> meters in the room frame (exact affine)."""
    return tuple(
        c + INCHES_TO_METERS * p for c, p in zip(table_center_m, position_in)
    )


@dataclass(frozen=True)
class AudioSignal:
    """Mono audio samples in [-1, 1] at a fixed sample rate."""

    samples: np.ndarray
    sample_rate_hz: int

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=np.float64)
        if samples.ndim != 1:
            raise ValueError("AudioSignal is mono: expected a 1-D array")
        if not np.all(np.isfinite(samples)):
            raise ValueError("AudioSignal contains NaN or Inf")
        object.__setattr__(self, "samples", samples)

    def __len__(self):
        return len(self.samples)

    @property
    def duration_s(self):
        return len(self.samples) / self.sample_rate_hz

    def power(self):
        if len(self.samples) == 0:
            return 0.0
        return float(np.mean(self.samples ** 2))


@dataclass(frozen=True)
class ImpulseResponse:
    taps: np.ndarray
    sample_rate_hz: int
    source_id: str
    direct_delay_samples: float

    def first_arrival_index(self, threshold=1e-12):
        nz = np.flatnonzero(np.abs(self.taps) > threshold)
        return int(nz[0]) if len(nz) else -1


def image_sources(room: RoomSpec, source_m, max_order=None):
    """All mirror images with up to max_order reflections.

    Returns a list of (position, coefficient) pairs; the coefficient is the
    product of the reflection coefficients of every wall on the image path.
    The direct sound is the zero-order image with coefficient 1.
    """
    if not room.contains(source_m):
        raise SourceOutsideRoom(f"source at {source_m} outside the room")
    order = room.max_order if max_order is None else int(max_order)
    betas = room.reflection_coefficients
    dims = room.dimensions_m
    src = np.asarray(source_m, dtype=float)

    # per-axis 1D images: index (p, m) -> position (-1)^p * x + 2 m L with
    # |m - p| hits on the wall at 0 and |m| hits on the wall at L
    per_axis = []
    for axis in range(3):
        length = dims[axis]
        x = src[axis]
        beta_lo, beta_hi = betas[2 * axis], betas[2 * axis + 1]
        options = []
        max_m = order // 2 + 1
        for m in range(-max_m, max_m + 1):
            for p in (0, 1):
                hits_lo = abs(m - p)
                hits_hi = abs(m)
                reflections = hits_lo + hits_hi
                if reflections > order:
                    continue
                position = (1 - 2 * p) * x + 2 * m * length
                coeff = (beta_lo ** hits_lo) * (beta_hi ** hits_hi)
                options.append((reflections, position, coeff))
        per_axis.append(options)

    images = []
    for (rx, px, cx), (ry, py, cy), (rz, pz, cz) in itertools.product(*per_axis):
        if rx + ry + rz > order:
            continue
        images.append((np.array([px, py, pz]), cx * cy * cz))
    return images


def fractional_delay_kernel(delay_samples: float, length: int):
    """Hann-windowed sinc taps for a (fractional) delay, as (taps, offsets).

    offsets are the absolute tap indices; an integer delay yields a single
    unit tap at that index.
    """
    lo = max(0, math.ceil(delay_samples - KERNEL_HALF_SUPPORT - 0.5))
    hi = min(length - 1, math.floor(delay_samples + KERNEL_HALF_SUPPORT + 0.5))
    if hi < lo:
        return np.zeros(0), np.zeros(0, dtype=int)
    n = np.arange(lo, hi + 1)
    t = n - delay_samples
    window = 0.5 * (1.0 + np.cos(2.0 * np.pi * t / FRACTIONAL_KERNEL_TAPS))
    return np.sinc(t) * window, n


def compute_rir(layout: SceneLayout, source_id: str, min_distance_m=1e-3) -> ImpulseResponse:
    """Room impulse response from one source to the scene microphone."""
    if source_id not in layout.sources_m:
        raise KeyError(f"unknown source {source_id!r}")
    room = layout.room
    mic = np.asarray(layout.mic_m, dtype=float)
    source = np.asarray(layout.sources_m[source_id], dtype=float)
    direct = float(np.linalg.norm(source - mic))
    if direct < min_distance_m:
        raise CoincidentSourceMic(
            f"source {source_id!r} within {min_distance_m} m of the microphone"
        )
    fs = room.sample_rate_hz
    c = room.speed_of_sound_mps

    images = image_sources(room, source)
    delays = np.array([np.linalg.norm(pos - mic) / c * fs for pos, _ in images])
    length = int(math.ceil(delays.max())) + KERNEL_HALF_SUPPORT + 2

    taps = np.zeros(length)
    for (pos, coeff), delay in zip(images, delays):
        if abs(coeff) < 1e-12:
            continue
        distance = delay * c / fs
        kernel, offsets = fractional_delay_kernel(delay, length)
        taps[offsets] += kernel * coeff / (4.0 * math.pi * distance)
    return ImpulseResponse(
        taps=taps,
        sample_rate_hz=fs,
        source_id=source_id,
        direct_delay_samples=direct / c * fs,
    )
