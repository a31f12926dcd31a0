"""Acceptance suite: one test per criterion, each printing PASS/FAIL.

Run with `pytest tests/test_acceptance.py -v -s` to see the criterion
lines and timings.
"""

import csv
import math
import time
from functools import lru_cache

import numpy as np
import pytest

from pinhole import PinholeCamera, random_camera, random_collinear_quad_3d
from scenes import ClassroomScene, classroom_camera

from tabletalk.acoustics import (
    KERNEL_HALF_SUPPORT,
    RoomSpec,
    SceneLayout,
    compute_rir,
    image_sources,
    read_wav,
    scene_config_from_jsonable,
)
from tabletalk.dataset import build_dataset
from tabletalk.geometry import (
    CollinearQuad,
    CollinearityViolation,
    DegenerateQuad,
    InversionSingularity,
    PixelPoint,
    cross_ratio,
    estimate_cd,
    estimate_speakers,
    estimate_table,
    geometry_error,
)
from tabletalk.recognition import (
    DEFAULT_KEYWORDS,
    KeywordLexicon,
    MelConfig,
    classify_keyword,
    g2p_spanish,
    levenshtein,
    macro_average_rates,
    mel_spectrogram,
    score_keywords,
    write_metrics_csv,
)


def report(name: str, ok: bool, detail: str = ""):
    status = "PASS" if ok else "FAIL"
    print(f"{status} {name}" + (f" ({detail})" if detail else ""))
    assert ok, f"{name}: {detail}"


def quad_from_pixels(pixels, ab, bc):
    pts = [PixelPoint(float(u), float(v), name)
           for (u, v), name in zip(pixels, "abcd")]
    return CollinearQuad(*pts, ab=ab, bc=bc)


class TestAcceptance:
    def test_c1_cross_ratio_oracle_suite(self):
        """estimate_cd recovers CD within 1e-6 in over >= 1000 random poses."""
        start = time.perf_counter()
        rng = np.random.default_rng(20240521)
        recovered = 0
        attempts = 0
        worst = 0.0
        while recovered < 1000 and attempts < 20000:
            attempts += 1
            ab = rng.uniform(2.0, 25.0)
            bc = rng.uniform(2.0, 25.0)
            cd = rng.uniform(0.5, 40.0)
            points = random_collinear_quad_3d(rng, ab, bc, cd)
            camera = random_camera(rng, points.mean(axis=0))
            try:
                pixels = camera.project(points)
            except ValueError:
                continue
            if np.abs(pixels).max() > 1e5:
                continue
            quad = quad_from_pixels(pixels, ab, bc)
            try:
                r = cross_ratio(quad)
            except (DegenerateQuad, CollinearityViolation):
                continue
            if abs(r * bc - ab - bc) < 1e-6:
                continue  # near-degenerate inversion excluded per criterion
            got = estimate_cd(quad)
            worst = max(worst, abs(got - cd))
            recovered += 1
        elapsed = time.perf_counter() - start
        report(
            "C1 cross-ratio oracle suite",
            recovered >= 1000 and worst < 1e-6 and elapsed < 10.0,
            f"{recovered} poses, worst error {worst:.2e} in, {elapsed:.2f}s",
        )

    def test_c2_table1_arithmetic(self):
        """Published estimation/baseline columns reproduce all errors."""
        truth = {"S0": 36.70, "S1": 35.59, "S2": 42.12, "S3": 34.99}
        ours = {"S0": 34.16, "S1": 41.27, "S2": 43.88, "S3": 29.29}
        base = {"S0": 19.74, "S1": 24.32, "S2": 27.79, "S3": 27.79}
        expected_ours = {"S0": 6.92, "S1": 15.96, "S2": 4.18, "S3": 16.29}

        errors, mean_ours = geometry_error(ours, truth)
        _, mean_base = geometry_error(base, truth)
        per_ok = all(abs(errors[s] - expected_ours[s]) <= 0.01 for s in truth)
        ok = per_ok and abs(mean_ours - 10.84) <= 0.01 and abs(mean_base - 33.12) <= 0.01
        report(
            "C2 Table-1 arithmetic reproduction",
            ok,
            f"means {mean_ours:.4f}% vs 10.84%, {mean_base:.4f}% vs 33.12%",
        )

    def test_c3_table2_aggregation(self):
        """Macro averages over published per-class rows within 0.005."""
        ours = [(0.50, 0.95), (0.24, 0.91), (0.63, 0.92), (0.30, 0.99),
                (0.25, 0.99), (0.36, 0.93), (0.25, 0.99), (0.27, 0.97),
                (0.65, 0.67)]
        reference = [(0.13, 1.00), (0.06, 1.00), (0.00, 1.00), (0.00, 1.00),
                     (0.23, 1.00), (0.00, 1.00), (0.25, 1.00), (0.45, 1.00),
                     (1.00, 0.13)]
        sens_a, spec_a = macro_average_rates(ours)
        sens_b, spec_b = macro_average_rates(reference)
        ok = (abs(sens_a - 0.38) <= 0.005 and abs(spec_a - 0.92) <= 0.005
              and abs(sens_b - 0.24) <= 0.005 and abs(spec_b - 0.90) <= 0.005)
        report(
            "C3 Table-2 aggregation reproduction",
            ok,
            f"ours {sens_a:.4f}/{spec_a:.4f}, reference {sens_b:.4f}/{spec_b:.4f}",
        )

    def test_c4_rir_physics_suite(self):
        """Arrival indices, image counts, energy monotonicity, superposition."""
        start = time.perf_counter()
        rng = np.random.default_rng(7)

        # first-arrival index over 100 random placements
        room = RoomSpec(dimensions_m=(6.0, 5.0, 3.0), max_order=1)
        arrivals_ok = True
        placements = 0
        while placements < 100:
            mic = rng.uniform(0.3, 0.7, size=3) * room.dimensions_m
            src = rng.uniform(0.2, 0.8, size=3) * room.dimensions_m
            if np.linalg.norm(mic - src) < 0.05:
                continue
            placements += 1
            layout = SceneLayout(room=room, mic_m=tuple(mic),
                                 sources_m={"s": tuple(src)})
            rir = compute_rir(layout, "s")
            if abs(rir.first_arrival_index() - round(rir.direct_delay_samples)) \
                    > KERNEL_HALF_SUPPORT + 1:
                arrivals_ok = False

        # order-1 image count
        count_ok = len(image_sources(RoomSpec(max_order=1), (2.0, 2.0, 1.0))) == 7

        # energy non-increasing as absorption grows
        energies = []
        for alpha in np.linspace(0.05, 0.95, 7):
            spec = RoomSpec(dimensions_m=(6.0, 5.0, 3.0),
                            absorption=(float(alpha),) * 6, max_order=3)
            layout = SceneLayout(room=spec, mic_m=(3.0, 2.5, 1.5),
                                 sources_m={"s": (1.0, 1.2, 1.1)})
            energies.append(float(np.sum(compute_rir(layout, "s").taps ** 2)))
        energy_ok = all(a >= b - 1e-15 for a, b in zip(energies, energies[1:]))

        # superposition of disjoint source subsets
        from tabletalk.acoustics import AudioSignal, render_mixture

        layout = SceneLayout(
            room=RoomSpec(dimensions_m=(6.0, 5.0, 3.0), max_order=2),
            mic_m=(3.0, 2.5, 1.2),
            sources_m={f"s{i}": (1.5 + 0.8 * i, 1.5, 1.2) for i in range(3)},
        )
        signals = {
            f"s{i}": AudioSignal(0.05 * rng.standard_normal(2000), 16000)
            for i in range(3)
        }
        onsets = {"s0": 0, "s1": 500, "s2": 800}
        full = render_mixture(layout, signals, onsets).signal.samples
        parts = np.zeros_like(full)
        for name in signals:
            track = render_mixture(layout, {name: signals[name]},
                                   {name: onsets[name]}).signal.samples
            parts[:len(track)] += track
        superposition_ok = float(np.max(np.abs(full - parts))) < 1e-9

        elapsed = time.perf_counter() - start
        report(
            "C4 RIR physics suite",
            arrivals_ok and count_ok and energy_ok and superposition_ok
            and elapsed < 30.0,
            f"100 placements, counts/energy/superposition ok, {elapsed:.2f}s",
        )

    def _one_minute_transcript(self):
        fillers = ["ahora escribe", "mira la pantalla", "pon el", "dame el",
                   "aqui esta el", "cuenta hasta", "busca el"]
        lines = []
        keywords = list(DEFAULT_KEYWORDS)
        i = 0
        total_chars = 0
        while total_chars < 750:
            speaker = f"S{i % 4}"
            body = f"{fillers[i % len(fillers)]} {keywords[i % len(keywords)]} " \
                   f"{keywords[(i + 3) % len(keywords)]}"
            lines.append(f"{speaker}: {body}")
            total_chars += len(body)
            i += 1
        return "\n".join(lines)

    def _run_pipeline(self, tmp_path, tag: str):
        out_dir = tmp_path / tag
        scene = ClassroomScene()
        scene.add_speaker("S0", "near", -10.0, 9.0)
        scene.add_speaker("S1", "near", 14.0, 11.0)
        scene.add_speaker("S2", "left", 3.0, 10.0)
        scene.add_speaker("S3", "right", -6.0, 12.5)
        annotation = scene.annotate(classroom_camera())

        table = estimate_table(annotation)
        geometry = estimate_speakers(annotation, table)

        config = scene_config_from_jsonable({"overlap_fraction": 0.2})
        manifest = build_dataset({"lesson": self._one_minute_transcript()},
                                 geometry, config, out_dir, seed=2024)
        entry = manifest.entries[0]
        mixture = read_wav(out_dir / entry["wav"])

        features = mel_spectrogram(mixture, MelConfig())
        expected_frames = (len(mixture.samples) - 400) // 160 + 1
        assert features.n_frames == expected_frames

        # keyword decisions: per reference word, a seeded noisy phoneme
        # hypothesis (the recognition network itself is out of scope)
        lexicon = KeywordLexicon.default()
        rng = np.random.default_rng(77)
        decisions = []
        for utterance in entry["utterances"]:
            for word in utterance["text"].split():
                tokens = g2p_spanish(word).split()
                if rng.random() < 0.4 and len(tokens) > 1:
                    victim = int(rng.integers(len(tokens)))
                    if rng.random() < 0.5:
                        tokens = tokens[:victim] + tokens[victim + 1:]
                    else:
                        tokens[victim] = "a"
                predicted = classify_keyword(" ".join(tokens), lexicon)
                true = word if word in lexicon.entries else "Others"
                decisions.append((predicted, true))
        stats = score_keywords(decisions, lexicon.classes)
        write_metrics_csv(stats, out_dir / "metrics.csv")
        return out_dir, entry

    def test_c5_end_to_end_desk_scale(self, tmp_path):
        """Annotation -> geometry -> mock session -> WAV -> Mel -> metrics."""
        start = time.perf_counter()
        dir_a, entry = self._run_pipeline(tmp_path, "run_a")
        first_elapsed = time.perf_counter() - start
        dir_b, _ = self._run_pipeline(tmp_path, "run_b")

        wav_same = (dir_a / entry["wav"]).read_bytes() == \
            (dir_b / entry["wav"]).read_bytes()
        manifest_same = (dir_a / "manifest.jsonl").read_bytes() == \
            (dir_b / "manifest.jsonl").read_bytes()
        metrics_same = (dir_a / "metrics.csv").read_bytes() == \
            (dir_b / "metrics.csv").read_bytes()
        duration = entry["duration_s"]
        report(
            "C5 end-to-end desk-scale pipeline",
            wav_same and manifest_same and metrics_same
            and first_elapsed < 60.0 and duration > 30.0,
            f"{duration:.1f}s mixture, run {first_elapsed:.1f}s, bit-identical",
        )

    def test_c6_levenshtein_metric_properties(self):
        """10,000 random pairs (len <= 12): symmetry, triangle, DP oracle."""

        @lru_cache(maxsize=None)
        def oracle(a, b):
            if not a:
                return len(b)
            if not b:
                return len(a)
            return min(
                oracle(a[:-1], b) + 1,
                oracle(a, b[:-1]) + 1,
                oracle(a[:-1], b[:-1]) + (a[-1] != b[-1]),
            )

        rng = np.random.default_rng(13)
        alphabet = np.array(list("abcdef"))

        def random_string():
            n = int(rng.integers(0, 13))
            return "".join(rng.choice(alphabet, size=n))

        start = time.perf_counter()
        ok = True
        for _ in range(10_000):
            a, b, c = random_string(), random_string(), random_string()
            d_ab = levenshtein(a, b)
            ok &= d_ab == oracle(a, b)
            ok &= d_ab == levenshtein(b, a)
            ok &= (d_ab == 0) == (a == b)
            ok &= levenshtein(a, c) <= d_ab + levenshtein(b, c)
            if not ok:
                break
        elapsed = time.perf_counter() - start
        report("C6 Levenshtein metric properties", ok,
               f"10000 triples, {elapsed:.1f}s")

    def test_c7_real_recording_accuracy_out_of_scope(self):
        """The 27.92% vs 26.12% sentence accuracies need the original
        classroom recordings and the trained phoneme network; they are
        recorded as reference constants, not reproduced."""
        from tabletalk.recognition import (
            REFERENCE_GOOGLE_ACCURACY,
            REFERENCE_SENTENCE_ACCURACY,
        )

        documented = (REFERENCE_SENTENCE_ACCURACY == pytest.approx(0.2792)
                      and REFERENCE_GOOGLE_ACCURACY == pytest.approx(0.2612))
        report(
            "C7 real-recording accuracy documented as out of scope",
            documented,
            "27.92% / 26.12% kept as reference data only",
        )
