"""Levenshtein edit distance with unit costs, over any token sequence."""

from __future__ import annotations


def levenshtein(a, b) -> int:
    """Minimum number of insertions, deletions, and substitutions.

    Accepts strings (character edits) or sequences of tokens; two-row
    dynamic program, O(len(a) * len(b)) time and O(min) space.
    """
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return len(a)
    previous = list(range(len(b) + 1))
    for i, token_a in enumerate(a, start=1):
        current = [i]
        for j, token_b in enumerate(b, start=1):
            substitution = previous[j - 1] + (token_a != token_b)
            current.append(min(previous[j] + 1, current[j - 1] + 1, substitution))
        previous = current
    return previous[-1]
