import numpy as np
import pytest

from tabletalk.acoustics import read_wav, scene_config_from_jsonable
from tabletalk.dataset import (
    CachingTTS,
    DatasetManifest,
    MockTTS,
    ServiceUnavailable,
    SpeakerNotInGeometry,
    build_dataset,
)
from tabletalk.geometry import TableModel, baseline_geometry


def small_config():
    # low order keeps unit-test rendering fast
    return scene_config_from_jsonable({"max_order": 2, "overlap_fraction": 0.0})


class FailByText:
    """Persistently fails synthesis for texts containing marked words."""

    def __init__(self, bad_words=(), fail_all=False):
        self.bad_words = set(bad_words)
        self.fail_all = fail_all

    def synthesize(self, text, voice, rate):
        if self.fail_all or self.bad_words & set(text.split()):
            raise ServiceUnavailable("synthetic outage")
        return MockTTS().synthesize(text, voice, rate)


def no_sleep_tts(backend):
    return CachingTTS(backend, sleep=lambda _t: None)


class TestBuildDataset:
    def test_single_utterance_session(self, tmp_path):
        geometry = baseline_geometry(TableModel(48.0, 36.0), 1)
        manifest = build_dataset(
            {"sess01": "S0: uno dos tres"}, geometry, small_config(),
            tmp_path, seed=7)
        assert len(manifest.entries) == 1
        entry = manifest.entries[0]
        assert entry["status"] == "ok"
        wav = read_wav(tmp_path / entry["wav"])
        utterance_s = entry["utterances"][0]["duration_s"]
        # mixture covers the utterance plus the impulse-response tail
        assert wav.duration_s >= utterance_s
        assert wav.duration_s < utterance_s + 1.0
        assert (tmp_path / "manifest.jsonl").exists()

    def test_reproducible_bytes(self, tmp_path):
        geometry = baseline_geometry(TableModel(48.0, 36.0), 2)
        transcript = "S0: uno dos\nS1: cuatro cinco\nS0: tres"
        dirs = [tmp_path / "a", tmp_path / "b"]
        for d in dirs:
            build_dataset({"s": transcript}, geometry, small_config(), d, seed=123)
        assert (dirs[0] / "s.wav").read_bytes() == (dirs[1] / "s.wav").read_bytes()
        assert (dirs[0] / "manifest.jsonl").read_bytes() == \
            (dirs[1] / "manifest.jsonl").read_bytes()

    def test_different_seed_changes_output(self, tmp_path):
        geometry = baseline_geometry(TableModel(48.0, 36.0), 2)
        transcript = "S0: uno dos\nS1: cuatro"
        build_dataset({"s": transcript}, geometry, small_config(), tmp_path / "a", seed=1)
        build_dataset({"s": transcript}, geometry, small_config(), tmp_path / "b", seed=2)
        assert (tmp_path / "a/s.wav").read_bytes() != (tmp_path / "b/s.wav").read_bytes()

    def test_missing_speaker_named(self, tmp_path):
        geometry = baseline_geometry(TableModel(48.0, 36.0), 1)  # S0 only
        with pytest.raises(SpeakerNotInGeometry) as excinfo:
            build_dataset({"s": "S3: hola"}, geometry, small_config(),
                          tmp_path, seed=1)
        assert "S3" in str(excinfo.value)

    def test_partial_failures_kept_session_ok(self, tmp_path):
        geometry = baseline_geometry(TableModel(48.0, 36.0), 2)
        transcript = "S0: uno\nS1: dos\nS0: tres\nS1: cuatro\nS0: cinco"
        manifest = build_dataset(
            {"s": transcript}, geometry, small_config(), tmp_path, seed=5,
            tts_backend=no_sleep_tts(FailByText({"dos", "cuatro"})))
        entry = manifest.entries[0]
        assert entry["status"] == "ok"
        statuses = [u["status"] for u in entry["utterances"]]
        assert statuses.count("failed") == 2
        assert statuses.count("ok") == 3

    def test_majority_failures_fail_session(self, tmp_path):
        geometry = baseline_geometry(TableModel(48.0, 36.0), 1)
        manifest = build_dataset(
            {"s": "S0: uno\nS0: dos\nS0: tres"}, geometry, small_config(),
            tmp_path, seed=5, tts_backend=no_sleep_tts(FailByText(fail_all=True)))
        assert manifest.entries[0]["status"] == "failed"
        assert manifest.failed_sessions == ["s"]

    def test_manifest_closure_and_reload(self, tmp_path):
        geometry = baseline_geometry(TableModel(48.0, 36.0), 2)
        sessions = {f"s{i:02d}": "S0: uno dos\nS1: tres" for i in range(3)}
        manifest = build_dataset(sessions, geometry, small_config(), tmp_path, seed=9)
        reloaded = DatasetManifest.load(tmp_path / "manifest.jsonl")
        assert reloaded.entries == manifest.entries
        for entry in reloaded.entries:
            assert (tmp_path / entry["wav"]).exists()

    def test_fifty_four_one_minute_sessions_under_budget(self, tmp_path):
        # defaults (reflection order 10); one minute of speech per session
        import time

        geometry = baseline_geometry(TableModel(48.0, 36.0), 4)
        config = scene_config_from_jsonable({"overlap_fraction": 0.2})
        base_lines = [
            f"S{i % 4}: cuenta {i} uno dos tres cuatro cinco en la computadora"
            for i in range(14)  # ~750 chars -> ~60 s of mock speech
        ]
        sessions = {
            f"session_{i:02d}": "\n".join(
                line + f" turno {i}" for line in base_lines)
            for i in range(54)
        }
        start = time.perf_counter()
        manifest = build_dataset(sessions, geometry, config, tmp_path, seed=3)
        elapsed = time.perf_counter() - start
        assert elapsed < 300.0
        assert len(manifest.entries) == 54
        assert manifest.failed_sessions == []
        for entry in manifest.entries:
            scheduled = max(u["onset_s"] + u["duration_s"]
                            for u in entry["utterances"])
            assert entry["duration_s"] >= scheduled
            assert entry["duration_s"] <= scheduled * 1.05 + 1.0

    def test_scheduled_durations_accounted(self, tmp_path):
        geometry = baseline_geometry(TableModel(48.0, 36.0), 2)
        config = scene_config_from_jsonable(
            {"max_order": 2, "overlap_fraction": 0.2})
        transcript = "\n".join(
            f"S{i % 2}: palabra numero {i} de la sesion" for i in range(12))
        manifest = build_dataset({"s": transcript}, geometry, config,
                                 tmp_path, seed=11)
        entry = manifest.entries[0]
        scheduled_end = max(
            u["onset_s"] + u["duration_s"] for u in entry["utterances"])
        assert entry["duration_s"] >= scheduled_end
        assert entry["duration_s"] < scheduled_end * 1.05 + 1.0
        assert 0.15 <= entry["overlap_fraction_realized"] <= 0.25
