"""Evaluation metrics: per-keyword sensitivity/specificity and CER.

Each class is scored one-vs-rest from (predicted, true) decision pairs.
A rate whose denominator is zero is reported as absent (None), never as
zero, and absent rates stay out of the macro averages.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass

from .distance import levenshtein

# reference accuracies reported on 517 real classroom sentences; these
# required the original recordings and trained network, so they are kept
# as documentation only and are not reproducible here
REFERENCE_SENTENCE_ACCURACY = 0.2792
REFERENCE_GOOGLE_ACCURACY = 0.2612


class UnknownLabel(ValueError):
    pass


class EmptyReference(ValueError):
    pass


@dataclass(frozen=True)
class ConfusionStats:
    label: str
    tp: int
    fp: int
    tn: int
    fn: int

    @property
    def sensitivity(self):
        denom = self.tp + self.fn
        return self.tp / denom if denom else None

    @property
    def specificity(self):
        denom = self.tn + self.fp
        return self.tn / denom if denom else None

    @property
    def total(self):
        return self.tp + self.fp + self.tn + self.fn


def character_error_rate(hypothesis: str, reference: str):
    """(CER, accuracy) with CER = edit distance / reference length."""
    if not reference:
        raise EmptyReference("reference text is empty")
    cer = levenshtein(hypothesis, reference) / len(reference)
    return cer, max(0.0, 1.0 - cer)


def score_keywords(decisions, classes) -> dict[str, ConfusionStats]:
    """One-vs-rest confusion counts per class from (predicted, true) pairs."""
    classes = list(classes)
    known = set(classes)
    for predicted, true in decisions:
        if predicted not in known:
            raise UnknownLabel(f"predicted label {predicted!r} not in classes")
        if true not in known:
            raise UnknownLabel(f"true label {true!r} not in classes")
    stats = {}
    for label in classes:
        tp = sum(1 for p, t in decisions if p == label and t == label)
        fp = sum(1 for p, t in decisions if p == label and t != label)
        fn = sum(1 for p, t in decisions if p != label and t == label)
        tn = len(decisions) - tp - fp - fn
        stats[label] = ConfusionStats(label, tp, fp, tn, fn)
    return stats


def macro_average(values):
    """Unweighted mean over defined (non-None) rates; None if all absent."""
    defined = [v for v in values if v is not None]
    return sum(defined) / len(defined) if defined else None


def macro_averages(stats: dict[str, ConfusionStats]):
    sensitivity = macro_average(s.sensitivity for s in stats.values())
    specificity = macro_average(s.specificity for s in stats.values())
    return sensitivity, specificity


def macro_average_rates(rows):
    """Macro averages straight from published per-class (sens, spec) rows."""
    sens = macro_average(r[0] for r in rows)
    spec = macro_average(r[1] for r in rows)
    return sens, spec


def _fmt(rate):
    return "" if rate is None else f"{rate:.2f}"


def write_metrics_csv(stats: dict[str, ConfusionStats], path) -> None:
    """Per-keyword table in the published layout plus an Average row."""
    sens, spec = macro_averages(stats)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["Keywords", "Sensitivity", "Specificity"])
        for label, s in stats.items():
            writer.writerow([label, _fmt(s.sensitivity), _fmt(s.specificity)])
        writer.writerow(["Average", _fmt(sens), _fmt(spec)])


def metrics_jsonable(stats: dict[str, ConfusionStats]) -> dict:
    sens, spec = macro_averages(stats)
    return {
        "per_class": {
            label: {
                "tp": s.tp, "fp": s.fp, "tn": s.tn, "fn": s.fn,
                "sensitivity": s.sensitivity,
                "specificity": s.specificity,
            }
            for label, s in stats.items()
        },
        "macro_sensitivity": sens,
        "macro_specificity": spec,
    }


def write_metrics_json(stats: dict[str, ConfusionStats], path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(metrics_jsonable(stats), fh, indent=2, sort_keys=True)
        fh.write("\n")
