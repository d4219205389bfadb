"""Dense, allocation-naive reference implementation of the similarity
update equations, used as an independent oracle for the engine.

Everything is plain dicts and Python loops: word similarity starts as the
identity; each iteration recomputes every sentence row as the weighted
average of word-to-sentence affinities (max similarity to a feature of the
column context), then every word row as the plain average of
sentence-to-word affinities (max similarity of each containing context to
any context containing the other word).
"""

from __future__ import annotations

import random


def reference_run(
    features: dict[str, list[str]],
    weights: dict[str, dict[str, float]],
    rows: list[str],
    iterations: int,
    epsilon: float = 0.0,
    freq: dict[str, int] | None = None,
    damping_constant: float = 0.0,
):
    """Returns a list of per-iteration (word_sims, sent_sims) snapshots.

    word_sims: {w1: {w2: value}}, sent_sims: {row: {ctx: value}}; absent
    entries mean 0.  epsilon > 0 enables the per-row freeze rule.
    """
    ctx_ids = list(features)
    vocab = sorted({w for fs in features.values() for w in fs})
    containing = {w: [c for c in ctx_ids if w in features[c]] for w in vocab}
    row_set = set(rows)

    word_sims = {w1: {w2: (1.0 if w1 == w2 else 0.0) for w2 in vocab} for w1 in vocab}
    sent_sims = {r: {c: (1.0 if r == c else 0.0) for c in ctx_ids} for r in rows}

    frozen_sent: set[str] = set()
    frozen_word: set[str] = set()
    snapshots = []
    for _ in range(iterations):
        new_sent = {}
        for r in rows:
            if r in frozen_sent:
                new_sent[r] = dict(sent_sims[r])
                continue
            new_row = {}
            for c in ctx_ids:
                if c == r:
                    new_row[c] = 1.0
                    continue
                total = 0.0
                for w, wgt in weights[r].items():
                    aff = max(word_sims[w][v] if w != v else 1.0 for v in features[c])
                    total += wgt * aff
                new_row[c] = total
            new_sent[r] = new_row

        # the word update reads the sentence similarities just computed;
        # feedback rows (columns that are not rows) stay reflexive-only
        def sent_lookup(a, b):
            if a == b:
                return 1.0
            if a in row_set:
                return new_sent[a][b]
            return 0.0

        new_words = {}
        for w1 in vocab:
            if w1 in frozen_word:
                new_words[w1] = dict(word_sims[w1])
                continue
            new_row = {}
            for w2 in vocab:
                if w2 == w1:
                    new_row[w2] = 1.0
                    continue
                ctxs = containing[w1]
                if not ctxs:
                    new_row[w2] = 0.0
                    continue
                total = 0.0
                for s in ctxs:
                    total += max(sent_lookup(s, sj) for sj in containing[w2])
                value = total / len(ctxs)
                if damping_constant > 0 and freq and freq.get(w2, 0) > 0:
                    value *= min(1.0, damping_constant / freq[w2])
                new_row[w2] = value
            new_words[w1] = new_row

        if epsilon > 0:
            for r in rows:
                if r not in frozen_sent:
                    inc = max(new_sent[r][c] - sent_sims[r][c] for c in ctx_ids)
                    if inc <= epsilon:
                        frozen_sent.add(r)
            for w in vocab:
                if w not in frozen_word:
                    inc = max(new_words[w][v] - word_sims[w][v] for v in vocab)
                    if inc <= epsilon:
                        frozen_word.add(w)

        sent_sims, word_sims = new_sent, new_words
        snapshots.append((
            {w1: dict(row) for w1, row in word_sims.items()},
            {r: dict(row) for r, row in sent_sims.items()},
        ))
        if epsilon > 0 and len(frozen_sent) == len(rows) and len(frozen_word) == len(vocab):
            break
    return snapshots


def random_corpus(rng: random.Random, max_sentences: int = 20, max_features: int = 50):
    """A random all-originals corpus with uniform per-sentence weights."""
    n_sent = rng.randint(2, max_sentences)
    n_words = rng.randint(2, max_features)
    vocab = [f"w{i}" for i in range(n_words)]
    features = {}
    for i in range(n_sent):
        size = rng.randint(1, min(6, n_words))
        features[f"c{i}"] = sorted(rng.sample(vocab, size))
    # every vocabulary word referenced by the matrix must occur somewhere
    used = sorted({w for fs in features.values() for w in fs})
    features = {c: [w for w in fs] for c, fs in features.items()}
    weights = {c: {w: 1.0 / len(set(fs)) for w in set(fs)} for c, fs in features.items()}
    rows = list(features)
    return features, weights, rows, used
