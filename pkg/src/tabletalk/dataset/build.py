"""Dataset generation: transcripts + speaker geometry -> labeled mixtures.

Each session becomes one mixture WAV rendered at the microphone: every
utterance is synthesized, convolved with its speaker's impulse response,
placed at its scheduled onset, summed with background noise at the
configured SNR, peak-limited if needed, and recorded in a JSON-lines
manifest together with everything required to reproduce it bit-exactly.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from scipy.signal import fftconvolve

from ..acoustics import (
    AudioSignal,
    INCHES_TO_METERS,
    SceneConfig,
    SceneLayout,
    compute_rir,
    mix_at_snr,
    table_frame_to_room,
    write_wav,
)
from ..geometry import SpeakerGeometry, geometry_to_jsonable
from ..seeding import derive_seed
from .schedule import NoiseEvent, SessionScript, schedule_session
from .transcript import TranscriptLine, preprocess_transcript
from .tts import CachingTTS, MockTTS, TtsError, synthesize_utterance, voice_for_language

logger = logging.getLogger(__name__)

PEAK_TARGET = 0.9
NOISE_SOURCE_ID = "background"
NOISE_HEIGHT_M = 1.5
ROOM_MARGIN_M = 0.05


class SpeakerNotInGeometry(ValueError):
    def __init__(self, speaker_id):
        self.speaker_id = speaker_id
        super().__init__(
            f"transcript speaker {speaker_id!r} has no position in the geometry"
        )


@dataclass
class DatasetManifest:
    entries: list[dict]

    def write(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            for entry in self.entries:
                fh.write(json.dumps(entry, sort_keys=True) + "\n")

    @classmethod
    def load(cls, path) -> "DatasetManifest":
        with open(path, "r", encoding="utf-8") as fh:
            return cls([json.loads(line) for line in fh if line.strip()])

    @property
    def failed_sessions(self):
        return [e["session_id"] for e in self.entries if e["status"] != "ok"]


def scene_layout_for(geometry: SpeakerGeometry, config: SceneConfig) -> SceneLayout:
    """Room layout with the microphone at the table center and one
    background-noise source behind the far table edge."""
    center = config.table_center_m
    sources = {
        speaker: table_frame_to_room(mouth, center)
        for speaker, mouth in geometry.mouths_in.items()
    }
    depth_m = geometry.table.depth_in * INCHES_TO_METERS
    noise_y = center[1] + depth_m / 2.0 + config.noise_offset_m
    noise_y = min(noise_y, config.room.dimensions_m[1] - ROOM_MARGIN_M)
    sources[NOISE_SOURCE_ID] = (center[0], noise_y, NOISE_HEIGHT_M)
    return SceneLayout(room=config.room, mic_m=center, sources_m=sources)


def render_session(
    script: SessionScript,
    audio: dict[int, AudioSignal],
    layout: SceneLayout,
    noise_seed: int,
    snr_db: float,
):
    """Mix one scheduled session; returns (AudioSignal, normalization_gain).

    audio maps utterance index -> synthesized signal (failed utterances are
    simply absent).
    """
    fs = layout.room.sample_rate_hz
    rirs = {
        source: compute_rir(layout, source).taps
        for source in layout.sources_m
    }
    max_rir = max(len(t) for t in rirs.values())
    end_sample = max(
        (int(round(u.onset_s * fs)) + len(audio[i]))
        for i, u in enumerate(script.utterances) if i in audio
    )
    dry_len = end_sample
    wet_len = dry_len + max_rir - 1

    speech = np.zeros(wet_len)
    by_speaker: dict[str, np.ndarray] = {}
    for index, utterance in enumerate(script.utterances):
        if index not in audio:
            continue
        track = by_speaker.setdefault(utterance.speaker_id, np.zeros(dry_len))
        onset = int(round(utterance.onset_s * fs))
        samples = audio[index].samples
        track[onset:onset + len(samples)] += samples
    for speaker, dry in by_speaker.items():
        wet = fftconvolve(dry, rirs[speaker])
        speech[:len(wet)] += wet

    mixture = AudioSignal(np.clip(speech, -64.0, 64.0), fs)
    rng = np.random.default_rng(noise_seed)
    noise_dry = rng.standard_normal(dry_len)
    noise_wet = fftconvolve(noise_dry, rirs[NOISE_SOURCE_ID])[:wet_len]
    mixture = mix_at_snr(mixture, AudioSignal(np.clip(noise_wet, -64.0, 64.0), fs), snr_db)

    gain = 1.0
    peak = float(np.max(np.abs(mixture.samples))) if wet_len else 0.0
    if peak > 1.0:
        gain = PEAK_TARGET / peak
        mixture = AudioSignal(mixture.samples * gain, fs)
    return mixture, gain


def build_dataset(
    sessions: dict[str, str | list[str]],
    geometry: SpeakerGeometry,
    config: SceneConfig,
    out_dir,
    seed: int,
    tts_backend=None,
    cache_dir=None,
) -> DatasetManifest:
    """Render every session to a WAV + manifest under out_dir.

    Fully reproducible: all randomness derives from (seed, session id), and
    manifest paths are relative to out_dir.  A session is marked failed
    when more than half of its utterances fail to synthesize.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    fs = config.room.sample_rate_hz
    if isinstance(tts_backend, CachingTTS):
        backend = tts_backend
    else:
        backend = CachingTTS(tts_backend if tts_backend is not None else MockTTS(),
                             cache_dir=cache_dir)
    geometry_doc = geometry_to_jsonable(geometry)
    entries = []

    for session_id in sorted(sessions):
        lines = preprocess_transcript(sessions[session_id])
        for line in lines:
            if line.speaker_id not in geometry.mouths_in:
                raise SpeakerNotInGeometry(line.speaker_id)

        audio: dict[int, AudioSignal] = {}
        failures = []
        for index, line in enumerate(lines):
            try:
                audio[index] = synthesize_utterance(
                    line, backend=backend, sample_rate_hz=fs)
            except TtsError as exc:
                logger.warning("session %s utterance %d failed: %s",
                               session_id, index, exc)
                failures.append(index)

        status = "ok"
        if len(lines) == 0:
            status = "failed"
        elif len(failures) > len(lines) / 2.0:
            status = "failed"

        entry = {
            "session_id": session_id,
            "status": status,
            "seed": seed,
            "sample_rate_hz": fs,
            "background_snr_db": config.background_snr_db,
            "overlap_fraction_target": config.overlap_fraction,
            "geometry": geometry_doc,
            "utterances": [],
        }

        if status == "ok":
            # failed utterances drop out of the schedule; survivors keep order
            kept = [i for i in range(len(lines)) if i in audio]
            kept_lines = [lines[i] for i in kept]
            durations = [audio[i].duration_s for i in kept]
            script = schedule_session(
                kept_lines, durations, config.overlap_fraction,
                derive_seed(seed, session_id, "schedule"),
            )
            layout = scene_layout_for(geometry, config)
            mixture, gain = render_session(
                script,
                {k: audio[i] for k, i in enumerate(kept)},
                layout,
                derive_seed(seed, session_id, "noise"),
                config.background_snr_db,
            )
            wav_name = f"{session_id}.wav"
            write_wav(out_dir / wav_name, mixture)

            entry["wav"] = wav_name
            entry["duration_s"] = round(mixture.duration_s, 6)
            entry["normalization_gain"] = gain
            entry["overlap_fraction_realized"] = round(script.overlap_fraction, 6)
            entry["noise_events"] = [{
                "kind": "gaussian",
                "onset_s": 0.0,
                "duration_s": round(mixture.duration_s, 6),
                "snr_db": config.background_snr_db,
            }]
            scheduled = {i: u for i, u in zip(kept, script.utterances)}
            for index, line in enumerate(lines):
                item = {
                    "speaker": line.speaker_id,
                    "raw_text": line.raw_text,
                    "text": line.normalized_text,
                    "language": line.language,
                    "voice": voice_for_language(line.language),
                }
                if index in scheduled:
                    item["status"] = "ok"
                    item["onset_s"] = round(scheduled[index].onset_s, 6)
                    item["duration_s"] = round(scheduled[index].duration_s, 6)
                else:
                    item["status"] = "failed"
                entry["utterances"].append(item)
        else:
            entry["utterances"] = [
                {
                    "speaker": line.speaker_id,
                    "raw_text": line.raw_text,
                    "text": line.normalized_text,
                    "language": line.language,
                    "status": "failed" if index in failures else "unrendered",
                }
                for index, line in enumerate(lines)
            ]

        entries.append(entry)

    manifest = DatasetManifest(entries)
    manifest.write(out_dir / "manifest.jsonl")
    return manifest
