"""Deterministic seed derivation for reproducible pipelines."""

from __future__ import annotations

import hashlib


def derive_seed(master_seed: int, *parts) -> int:
    """Stable 63-bit seed from a master seed and any context labels."""
    text = ":".join([str(int(master_seed))] + [str(p) for p in parts])
    digest = hashlib.sha256(text.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "little") >> 1
