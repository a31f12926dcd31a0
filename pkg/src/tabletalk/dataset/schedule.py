"""Session scheduling with controlled cross-talk.

The overlap fraction of a script is the share of speech time spoken while
at least one other utterance is active: the integral of multiplicity over
regions where it is >= 2, divided by the total speech time (the sum of all
utterance durations).  Consecutive utterances are slid into each other
until the realized fraction lands within +/-0.05 of the target; utterances
of one speaker never overlap themselves.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .transcript import TranscriptLine

OVERLAP_TOLERANCE = 0.05
MAX_PAIR_OVERLAP = 0.95  # share of the shorter utterance


class InfeasibleOverlap(ValueError):
    """The requested overlap fraction cannot be realized."""


@dataclass(frozen=True)
class ScheduledUtterance:
    speaker_id: str
    line: TranscriptLine
    onset_s: float
    duration_s: float

    @property
    def end_s(self):
        return self.onset_s + self.duration_s


@dataclass(frozen=True)
class NoiseEvent:
    kind: str
    onset_s: float
    duration_s: float
    snr_db: float


@dataclass
class SessionScript:
    utterances: list[ScheduledUtterance]
    noise_events: list[NoiseEvent] = field(default_factory=list)

    @property
    def duration_s(self):
        ends = [u.end_s for u in self.utterances]
        ends += [n.onset_s + n.duration_s for n in self.noise_events]
        return max(ends) if ends else 0.0

    @property
    def overlap_fraction(self):
        return overlap_fraction(
            [(u.onset_s, u.end_s) for u in self.utterances])


def overlap_fraction(intervals) -> float:
    """Exact overlapped-speech share from a boundary sweep."""
    intervals = [(s, e) for s, e in intervals if e > s]
    if not intervals:
        return 0.0
    bounds = sorted({b for s, e in intervals for b in (s, e)})
    overlapped = 0.0
    total = sum(e - s for s, e in intervals)
    for lo, hi in zip(bounds, bounds[1:]):
        multiplicity = sum(1 for s, e in intervals if s <= lo and e >= hi)
        if multiplicity >= 2:
            overlapped += (hi - lo) * multiplicity
    return overlapped / total


def _onsets_from_overlaps(durations, overlaps):
    onsets = [0.0]
    for k in range(1, len(durations)):
        onsets.append(onsets[-1] + durations[k - 1] - overlaps[k])
    return onsets


def schedule_session(
    lines: list[TranscriptLine],
    durations_s: list[float],
    overlap_fraction_target: float,
    seed: int,
) -> SessionScript:
    """Assign onsets so the realized overlap is within 0.05 of the target.

    Transcript order is preserved; each utterance may only slide into its
    predecessor, and only when the speakers differ.  Raises
    InfeasibleOverlap when the target cannot be approached (for example a
    single utterance, or a one-speaker session, with target > 0).
    """
    if not 0.0 <= overlap_fraction_target < 1.0:
        raise ValueError("overlap_fraction_target must be in [0, 1)")
    if len(lines) != len(durations_s):
        raise ValueError("one duration per line required")
    if any(d <= 0 for d in durations_s):
        raise ValueError("durations must be positive")

    n = len(lines)
    rng = np.random.default_rng(seed)
    jitter = rng.uniform(0.6, 1.4, size=max(n, 1))

    max_overlap = [0.0] * n
    for k in range(1, n):
        if lines[k].speaker_id != lines[k - 1].speaker_id:
            max_overlap[k] = MAX_PAIR_OVERLAP * min(durations_s[k - 1], durations_s[k])

    target = overlap_fraction_target
    overlaps = [0.0] * n
    if target > 0:
        for k in range(1, n):
            want = target * (durations_s[k - 1] + durations_s[k]) / 4.0
            overlaps[k] = min(want * jitter[k], max_overlap[k])

        for _ in range(40):
            onsets = _onsets_from_overlaps(durations_s, overlaps)
            realized = overlap_fraction(
                [(o, o + d) for o, d in zip(onsets, durations_s)])
            if abs(realized - target) <= OVERLAP_TOLERANCE * 0.8:
                break
            if realized <= 0.0:
                break
            factor = target / realized
            overlaps = [min(o * factor, m) for o, m in zip(overlaps, max_overlap)]

    onsets = _onsets_from_overlaps(durations_s, overlaps)
    realized = overlap_fraction([(o, o + d) for o, d in zip(onsets, durations_s)])
    if abs(realized - target) > OVERLAP_TOLERANCE:
        raise InfeasibleOverlap(
            f"requested overlap {target:.2f}, best realizable {realized:.2f}"
        )

    utterances = [
        ScheduledUtterance(line.speaker_id, line, onset, duration)
        for line, onset, duration in zip(lines, onsets, durations_s)
    ]
    return SessionScript(utterances=utterances)
