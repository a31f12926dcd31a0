"""Command-line entry points for the pipeline stages.

Exit codes: 0 success, 2 input parse error, 3 geometry estimation error,
4 dataset generation with failed sessions.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from ..acoustics import load_scene_config, scene_config_from_jsonable
from ..dataset import build_dataset
from ..geometry import (
    AnnotationFormatError,
    GeometryError,
    baseline_geometry,
    estimate_speakers,
    estimate_table_detailed,
    geometry_error,
    geometry_json_str,
    load_annotation,
    load_geometry,
)
from ..recognition import (
    KeywordLexicon,
    metrics_jsonable,
    score_keywords,
    write_metrics_csv,
    write_metrics_json,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_GEOMETRY = 3
EXIT_DATASET = 4


def _fail(code: int, message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def print_error_table(estimated, truth, out=None):
    """Per-speaker distances and percentage errors, one row per speaker."""
    out = out if out is not None else sys.stdout
    errors, mean = geometry_error(estimated, truth)
    distances = getattr(estimated, "distances_in", estimated)
    print(f"{'Speaker':<10}{'Ground Truth':>14}{'Estimation':>13}{'Error':>10}",
          file=out)
    for speaker in sorted(errors):
        print(f"{speaker:<10}{truth[speaker]:>14.2f}{distances[speaker]:>13.2f}"
              f"{errors[speaker]:>9.2f}%", file=out)
    mean_truth = sum(truth.values()) / len(truth)
    mean_est = sum(distances[s] for s in truth) / len(truth)
    print(f"{'Average':<10}{mean_truth:>14.2f}{mean_est:>13.2f}{mean:>9.2f}%",
          file=out)
    return mean


def cmd_estimate(args) -> int:
    try:
        annotation = load_annotation(args.annotation)
    except AnnotationFormatError as exc:
        return _fail(EXIT_PARSE, str(exc))

    try:
        table, diagnostics = estimate_table_detailed(annotation)
        if args.baseline:
            n = len(annotation.speaker_ids) or 4
            geometry = baseline_geometry(table, n)
        else:
            geometry = estimate_speakers(annotation, table)
    except GeometryError as exc:
        return _fail(EXIT_GEOMETRY, str(exc))

    for warning in diagnostics["warnings"]:
        print(f"warning: {warning}", file=sys.stderr)

    payload = geometry_json_str(geometry)
    if args.out:
        Path(args.out).write_text(payload, encoding="utf-8")
        print(f"geometry written to {args.out}")
    else:
        print(payload, end="")

    if args.truth:
        try:
            truth = {k: float(v) for k, v in
                     json.loads(Path(args.truth).read_text()).items()}
        except (OSError, ValueError) as exc:
            return _fail(EXIT_PARSE, f"cannot read truth file {args.truth}: {exc}")
        try:
            print_error_table(geometry, truth)
        except GeometryError as exc:
            return _fail(EXIT_GEOMETRY, str(exc))
    return EXIT_OK


def _load_sessions(transcript_path: Path) -> dict[str, str]:
    if transcript_path.is_dir():
        files = sorted(transcript_path.glob("*.txt"))
        if not files:
            raise FileNotFoundError(f"no *.txt transcripts under {transcript_path}")
        return {f.stem: f.read_text(encoding="utf-8") for f in files}
    return {transcript_path.stem: transcript_path.read_text(encoding="utf-8")}


def cmd_simulate(args) -> int:
    try:
        geometry = load_geometry(args.geometry)
    except (OSError, ValueError, KeyError) as exc:
        return _fail(EXIT_PARSE, f"cannot read geometry {args.geometry}: {exc}")
    try:
        sessions = _load_sessions(Path(args.transcript))
    except (OSError, FileNotFoundError) as exc:
        return _fail(EXIT_PARSE, str(exc))
    try:
        config = load_scene_config(args.config) if args.config \
            else scene_config_from_jsonable(None)
    except (OSError, ValueError) as exc:
        return _fail(EXIT_PARSE, f"cannot read config {args.config}: {exc}")

    try:
        manifest = build_dataset(sessions, geometry, config, args.out_dir,
                                 seed=args.seed)
    except ValueError as exc:
        return _fail(EXIT_PARSE, str(exc))

    ok = [e for e in manifest.entries if e["status"] == "ok"]
    total_minutes = sum(e.get("duration_s", 0.0) for e in ok) / 60.0
    overlaps = [e["overlap_fraction_realized"] for e in ok]
    mean_overlap = sum(overlaps) / len(overlaps) if overlaps else 0.0
    print(f"sessions: {len(ok)}/{len(manifest.entries)} rendered, "
          f"{total_minutes:.2f} minutes, overlap {mean_overlap:.3f}")
    print(f"manifest: {Path(args.out_dir) / 'manifest.jsonl'}")
    if manifest.failed_sessions:
        return _fail(EXIT_DATASET,
                     "failed sessions: " + ", ".join(manifest.failed_sessions))
    return EXIT_OK


def read_decisions_csv(path) -> list[tuple[str, str]]:
    decisions = []
    with open(path, "r", encoding="utf-8", newline="") as fh:
        for number, row in enumerate(csv.reader(fh), start=1):
            if not row or (number == 1 and [c.strip().lower() for c in row]
                           == ["predicted", "true"]):
                continue
            if len(row) != 2:
                raise ValueError(f"{path}:{number}: expected 'predicted,true', got {row!r}")
            decisions.append((row[0].strip(), row[1].strip()))
    if not decisions:
        raise ValueError(f"{path}: no decisions found")
    return decisions


def cmd_evaluate(args) -> int:
    try:
        lexicon = KeywordLexicon.load(args.lexicon) if args.lexicon \
            else KeywordLexicon.default()
    except (OSError, ValueError) as exc:
        return _fail(EXIT_PARSE, f"cannot read lexicon: {exc}")
    try:
        decisions = read_decisions_csv(args.decisions)
    except (OSError, ValueError) as exc:
        return _fail(EXIT_PARSE, str(exc))

    from ..recognition import UnknownLabel

    try:
        stats = score_keywords(decisions, lexicon.classes)
    except UnknownLabel as exc:
        return _fail(EXIT_PARSE, str(exc))

    out_csv = Path(args.out_prefix + ".csv")
    out_json = Path(args.out_prefix + ".json")
    write_metrics_csv(stats, out_csv)
    write_metrics_json(stats, out_json)
    summary = metrics_jsonable(stats)
    for label, row in summary["per_class"].items():
        sens = "-" if row["sensitivity"] is None else f"{row['sensitivity']:.2f}"
        spec = "-" if row["specificity"] is None else f"{row['specificity']:.2f}"
        print(f"{label:<14}{sens:>6}{spec:>6}")
    print(f"{'Average':<14}{summary['macro_sensitivity']:>6.2f}"
          f"{summary['macro_specificity']:>6.2f}")
    print(f"metrics written to {out_csv} and {out_json}")
    return EXIT_OK


def cmd_serve(args) -> int:
    from .http import serve

    serve(port=args.port, frames_dir=args.frames_dir,
          annotations_dir=args.annotations_dir, static_dir=args.static_dir)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tabletalk",
        description="speaker geometry, classroom audio simulation, and "
                    "keyword-recognition metrics",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("estimate", help="annotation JSON -> geometry JSON")
    p.add_argument("annotation", help="annotation JSON path")
    p.add_argument("--baseline", action="store_true",
                   help="use the equidistant baseline instead of cross-ratios")
    p.add_argument("--truth", help="JSON of true speaker distances (inches)")
    p.add_argument("--out", help="write geometry JSON here instead of stdout")
    p.set_defaults(func=cmd_estimate)

    p = sub.add_parser("simulate", help="geometry + transcripts -> audio dataset")
    p.add_argument("geometry", help="geometry JSON path")
    p.add_argument("transcript", help="transcript file or directory of *.txt")
    p.add_argument("--config", help="scene config JSON")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out-dir", default="dataset_out")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("evaluate", help="decisions CSV -> metrics CSV/JSON")
    p.add_argument("decisions", help="CSV of predicted,true labels")
    p.add_argument("--lexicon", help="keyword<TAB>phonemes file "
                                     "(default: built-in keyword list)")
    p.add_argument("--out-prefix", default="metrics")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("serve", help="HTTP service for the annotation UI")
    p.add_argument("--port", type=int, default=8765)
    p.add_argument("--frames-dir", default=".")
    p.add_argument("--annotations-dir", default="annotations")
    p.add_argument("--static-dir", default=None)
    p.set_defaults(func=cmd_serve)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
