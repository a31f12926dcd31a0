"""Keyword classification and the sensitivity/specificity table.

Simulates a noisy phoneme recognizer over the bilingual keyword list:
each spoken word is converted to phonemes, randomly corrupted, classified
by minimum edit distance, and the one-vs-rest metrics are printed in the
publication layout.
"""

import numpy as np

from tabletalk.recognition import (
    DEFAULT_KEYWORDS,
    KeywordLexicon,
    classify_keyword,
    g2p_spanish,
    macro_averages,
    score_keywords,
)

FILLER_WORDS = ["mesa", "silla", "ventana", "amigo", "clase", "tarea"]


def corrupt(tokens, rng):
    tokens = list(tokens)
    if rng.random() < 0.45 and len(tokens) > 1:
        victim = int(rng.integers(len(tokens)))
        if rng.random() < 0.5:
            del tokens[victim]
        else:
            tokens[victim] = "a"
    return tokens


def main():
    lexicon = KeywordLexicon.default()
    rng = np.random.default_rng(3)

    decisions = []
    vocabulary = list(DEFAULT_KEYWORDS) * 6 + FILLER_WORDS * 4
    for word in vocabulary:
        tokens = corrupt(g2p_spanish(word).split(), rng)
        predicted = classify_keyword(" ".join(tokens), lexicon)
        true = word if word in lexicon.entries else "Others"
        decisions.append((predicted, true))

    stats = score_keywords(decisions, lexicon.classes)
    print(f"{'Keywords':<14}{'Sensitivity':>12}{'Specificity':>12}")
    for label, s in stats.items():
        sens = "-" if s.sensitivity is None else f"{s.sensitivity:.2f}"
        spec = "-" if s.specificity is None else f"{s.specificity:.2f}"
        print(f"{label:<14}{sens:>12}{spec:>12}")
    sens, spec = macro_averages(stats)
    print(f"{'Average':<14}{sens:>12.2f}{spec:>12.2f}")


if __name__ == "__main__":
    main()
