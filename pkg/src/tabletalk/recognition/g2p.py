"""Grapheme-to-phoneme mapping for the keyword lexicon.

Spanish orthography is near-phonemic, so a short rule set (Latin-American
seseo variant) covers it: c before e/i and z map to s, qu to k, j and soft
g to the jota (token x), ll and y to the y glide, h is silent, v equals b.
Phonemes are space-separated ASCII-ish tokens; running the rules over
their own output is a no-op.  English keywords come from an explicit
pronunciation table instead of rules.
"""

from __future__ import annotations

VOWELS = set("aeiou")

# words the rules must not touch: single phoneme tokens map to themselves
_SELF_TOKENS = {"ch", "ñ", "rr"}

ENGLISH_PRONUNCIATIONS = {
    "zero": "s i r o",
    "one": "w a n",
    "two": "t u",
    "three": "z r i",
    "four": "f o r",
    "five": "f a i b",
    "computer": "k o m p i u t e r",
    "number": "n a m b e r",
}


def _g2p_word(word: str) -> list[str]:
    if word in _SELF_TOKENS:
        return [word]
    out: list[str] = []
    i = 0
    n = len(word)
    while i < n:
        ch = word[i]
        nxt = word[i + 1] if i + 1 < n else ""
        if ch == "c" and nxt == "h":
            out.append("ch")
            i += 2
            continue
        if ch == "l" and nxt == "l":
            out.append("y")
            i += 2
            continue
        if ch == "r" and nxt == "r":
            out.append("rr")
            i += 2
            continue
        if ch == "q":
            # qu + e/i: silent u; qu + a/o: kw
            if nxt == "u" and i + 2 < n and word[i + 2] in "ei":
                out.append("k")
                i += 2
                continue
            out.append("k")
            i += 1
            continue
        if ch == "g" and nxt == "u" and i + 2 < n and word[i + 2] in "ei":
            out.append("g")  # guerra: silent u
            i += 2
            continue
        if ch == "g" and nxt in ("e", "i"):
            out.append("x")
            i += 1
            continue
        if ch == "c":
            out.append("s" if nxt in ("e", "i") else "k")
            i += 1
            continue
        if ch == "z":
            out.append("s")
            i += 1
            continue
        if ch == "j":
            out.append("x")
            i += 1
            continue
        if ch == "x":
            if n == 1:
                out.append("x")  # lone jota token stays itself
            else:
                out.extend(["k", "s"])
            i += 1
            continue
        if ch == "v":
            out.append("b")
            i += 1
            continue
        if ch == "h":
            i += 1  # silent
            continue
        if ch == "u" and out and out[-1] not in VOWELS and nxt in VOWELS:
            out.append("w")  # diphthong: cuatro, bueno
            i += 1
            continue
        out.append(ch)
        i += 1
    return out


def g2p_spanish(text: str) -> str:
    """Phoneme token string for normalized text; unknown symbols pass through."""
    words = text.split()
    tokens: list[str] = []
    for word in words:
        tokens.extend(_g2p_word(word))
    return " ".join(tokens)


def pronounce(word: str, language: str = "es") -> str:
    """Lexicon pronunciation: rule-based Spanish, table-driven English."""
    if language == "en":
        if word in ENGLISH_PRONUNCIATIONS:
            return ENGLISH_PRONUNCIATIONS[word]
    return g2p_spanish(word)
