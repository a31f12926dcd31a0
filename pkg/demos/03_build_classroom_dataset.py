"""End-to-end corpus generation at desk scale.

Places four speakers around a 48 x 36 in table with the equidistant
baseline, synthesizes a short bilingual transcript with the offline mock
voices, schedules 20% cross-talk, renders the table microphone's mixture
with 10 dB background noise, and prints the manifest entry.
"""

import json
import tempfile
from pathlib import Path

from tabletalk.acoustics import scene_config_from_jsonable
from tabletalk.dataset import build_dataset
from tabletalk.geometry import TableModel, baseline_geometry

TRANSCRIPT = """\
S0: ¿Cuál es el número?
S1: El número es tres.
S2: Now type the computer number.
S3: Uno, dos, tres, cuatro.
S0: ¿Cero o cinco?
S1: Cinco. La computadora dice cinco.
"""


def main():
    geometry = baseline_geometry(TableModel(48.0, 36.0), 4)
    for speaker, distance in sorted(geometry.distances_in.items()):
        print(f"{speaker}: {distance:.2f} in from the microphone")

    config = scene_config_from_jsonable({"overlap_fraction": 0.2,
                                         "background_snr_db": 10.0})
    out_dir = Path(tempfile.mkdtemp(prefix="tabletalk_demo_"))
    manifest = build_dataset({"demo_session": TRANSCRIPT}, geometry, config,
                             out_dir, seed=7)

    entry = manifest.entries[0]
    print(f"\nrendered {entry['wav']} ({entry['duration_s']:.2f}s) in {out_dir}")
    print(f"realized overlap: {entry['overlap_fraction_realized']:.3f}")
    print("\nfirst utterances:")
    for utterance in entry["utterances"][:3]:
        print(json.dumps(utterance, indent=2, sort_keys=True))


if __name__ == "__main__":
    main()
