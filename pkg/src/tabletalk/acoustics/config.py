"""Scene configuration file: JSON mirroring RoomSpec/SceneLayout fields.

All fields are optional; unit-suffixed keys:

    {
      "room_m": [6.0, 5.0, 3.0],
      "absorption": 0.35,              // scalar or six per-wall values
      "max_order": 10,
      "sample_rate_hz": 16000,
      "speed_of_sound_mps": 343.0,
      "table_center_m": [3.0, 2.5, 0.75],
      "background_snr_db": 10.0,
      "noise_offset_m": 2.0,
      "overlap_fraction": 0.2
    }
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .room import RoomSpec


@dataclass(frozen=True)
class SceneConfig:
    room: RoomSpec
    table_center_m: tuple[float, float, float] = (3.0, 2.5, 0.75)
    background_snr_db: float = 10.0
    noise_offset_m: float = 2.0
    overlap_fraction: float = 0.2


def scene_config_from_jsonable(doc: dict | None) -> SceneConfig:
    doc = doc or {}
    absorption = doc.get("absorption", 0.35)
    if isinstance(absorption, (int, float)):
        absorption = (float(absorption),) * 6
    else:
        absorption = tuple(float(a) for a in absorption)
    room = RoomSpec(
        dimensions_m=tuple(float(d) for d in doc.get("room_m", (6.0, 5.0, 3.0))),
        absorption=absorption,
        max_order=int(doc.get("max_order", 10)),
        sample_rate_hz=int(doc.get("sample_rate_hz", 16000)),
        speed_of_sound_mps=float(doc.get("speed_of_sound_mps", 343.0)),
    )
    return SceneConfig(
        room=room,
        table_center_m=tuple(float(c) for c in doc.get("table_center_m", (3.0, 2.5, 0.75))),
        background_snr_db=float(doc.get("background_snr_db", 10.0)),
        noise_offset_m=float(doc.get("noise_offset_m", 2.0)),
        overlap_fraction=float(doc.get("overlap_fraction", 0.2)),
    )


def load_scene_config(path) -> SceneConfig:
    with open(path, "r", encoding="utf-8") as fh:
        return scene_config_from_jsonable(json.load(fh))
