"""Shoebox acoustics: image-source RIRs, mixing, and WAV I/O."""

from .config import SceneConfig, load_scene_config, scene_config_from_jsonable
from .mixing import (
    RenderedMixture,
    measured_snr_db,
    mix_at_snr,
    render_mixture,
)
from .room import (
    AcousticsError,
    AudioSignal,
    CoincidentSourceMic,
    FRACTIONAL_KERNEL_TAPS,
    INCHES_TO_METERS,
    ImpulseResponse,
    KERNEL_HALF_SUPPORT,
    RoomSpec,
    SampleRateMismatch,
    SceneLayout,
    SilentNoise,
    SourceOutsideRoom,
    compute_rir,
    fractional_delay_kernel,
    image_sources,
    table_frame_to_room,
)
from .wavio import MalformedWav, UnsupportedEncoding, read_wav, write_wav

__all__ = [
    "AcousticsError",
    "AudioSignal",
    "CoincidentSourceMic",
    "FRACTIONAL_KERNEL_TAPS",
    "INCHES_TO_METERS",
    "ImpulseResponse",
    "KERNEL_HALF_SUPPORT",
    "MalformedWav",
    "RenderedMixture",
    "RoomSpec",
    "SampleRateMismatch",
    "SceneConfig",
    "SceneLayout",
    "SilentNoise",
    "SourceOutsideRoom",
    "UnsupportedEncoding",
    "compute_rir",
    "fractional_delay_kernel",
    "image_sources",
    "load_scene_config",
    "measured_snr_db",
    "mix_at_snr",
    "read_wav",
    "render_mixture",
    "scene_config_from_jsonable",
    "table_frame_to_room",
    "write_wav",
]
