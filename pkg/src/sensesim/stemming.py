"""Deterministic suffix-stripping stemmer.

A compact Porter-style rule set: plural endings, -ed/-ing verb forms and
-ly adverbs are stripped when the remaining base is plausible (contains a
vowel, keeps at least three characters).  The exact rule set only affects
vocabulary granularity; the same surface always maps to the same stem.
"""

_VOWELS = set("aeiouy")


def _has_vowel(word: str) -> bool:
    return any(ch in _VOWELS for ch in word)


def stem(surface: str) -> str:
    word = surface.lower()
    if len(word) <= 3:
        return word

    # Plurals.
    if word.endswith("sses"):
        word = word[:-2]
    elif word.endswith("ies") and len(word) > 4:
        word = word[:-3] + "y"
    elif word.endswith("s") and not word.endswith("ss") and not word.endswith("us"):
        word = word[:-1]

    # Verb forms.
    for suffix, min_base in (("ing", 3), ("ed", 3)):
        if word.endswith(suffix):
            base = word[: -len(suffix)]
            if len(base) >= min_base and _has_vowel(base):
                # collapse doubled final consonant: stopped -> stop
                if len(base) >= 2 and base[-1] == base[-2] and base[-1] not in _VOWELS:
                    base = base[:-1]
                word = base
            break

    # Adverbs.
    if word.endswith("ly") and len(word) > 5:
        word = word[:-2]

    # Final silent e, so taste / tastes / tasted all map to one stem.
    if len(word) >= 4 and word.endswith("e") and not word.endswith("ee"):
        word = word[:-1]

    return word
