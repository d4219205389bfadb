"""Iterative fixed-point computation of word and sentence similarities.

One iteration performs two steps: (1) recompute sentence-to-sentence
similarities from the current word matrix, (2) recompute word-to-word
similarities from the sentence similarities just produced in step 1.
The word matrix starts as the identity.  A row stops updating (freezes)
in the first iteration where its maximal increase is at most epsilon;
the loop ends when every row is frozen or max_iterations is reached.

Matrix rows are the original contexts; columns are the original contexts
(group 0) and, per sense, the feedback contexts (group i > 0).  All
matrices are asymmetric, with values in [0, 1].
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from .text import Context


@dataclass
class EngineConfig:
    epsilon: float = 0.01  # 0 disables row freezing
    max_iterations: int = 10
    freq_damping_constant: float = 100.0
    damping_enabled: bool = True
    prune_threshold: float = 1e-6  # 0 keeps every entry

    def __post_init__(self):
        if self.epsilon < 0:
            raise ValueError("epsilon must be nonnegative")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be at least 1")


class WordSimMatrix:
    """Sparse asymmetric word similarity; absent entries mean 0,
    the diagonal is always 1."""

    def __init__(self, vocab: Sequence[str], rows: dict[str, dict[str, float]] | None = None, iteration: int = 0):
        self.vocab = list(vocab)
        self.rows = rows if rows is not None else {w: {w: 1.0} for w in self.vocab}
        self.iteration = iteration

    def sim(self, i: str, j: str) -> float:
        if i == j:
            return 1.0
        return self.rows.get(i, {}).get(j, 0.0)

    def row(self, i: str) -> dict[str, float]:
        return self.rows.get(i, {i: 1.0})

    def nonzero_count(self) -> int:
        return sum(len(r) for r in self.rows.values())


class SentenceSimilarities:
    """Sentence similarity rows for the original contexts, over all columns
    (originals and every sense's feedback contexts)."""

    def __init__(self, rows: dict[str, dict[str, float]]):
        self.rows = rows

    def sim(self, a: str, b: str) -> float:
        if a == b:
            return 1.0
        return self.rows.get(a, {}).get(b, 0.0)


class SentenceSimMatrix:
    """A per-sense view: rows are originals, columns are the contexts of
    one column group (sense_index 0 = originals-to-originals)."""

    def __init__(self, sense_index: int, rows: list[str], cols: list[str], source: SentenceSimilarities):
        self.sense_index = sense_index
        self.row_ids = rows
        self.col_ids = cols
        self._source = source

    def sim(self, a: str, b: str) -> float:
        return self._source.sim(a, b)


@dataclass
class TraceEntry:
    iteration: int
    kind: str  # "word" | "sentence"
    item_id: str
    max_increase: float
    frozen: bool


@dataclass
class IterationTrace:
    entries: list[TraceEntry] = field(default_factory=list)
    wall_times: list[float] = field(default_factory=list)
    iterations: int = 0
    converged: bool = False

    def to_csv(self) -> str:
        lines = ["iteration,kind,item_id,max_increase,frozen"]
        for e in self.entries:
            lines.append(f"{e.iteration},{e.kind},{e.item_id},{e.max_increase:.12g},{int(e.frozen)}")
        return "\n".join(lines) + "\n"


@dataclass
class IterationSnapshot:
    iteration: int
    words: WordSimMatrix
    sentences: SentenceSimilarities


@dataclass
class SimilarityResult:
    words: WordSimMatrix
    sentences: SentenceSimilarities
    per_sense: list[SentenceSimMatrix]
    trace: IterationTrace
    history: list[IterationSnapshot] | None = None


def _features_of(s) -> list[str]:
    if isinstance(s, Context):
        return sorted(s.stems())
    return list(s)


def init_word_similarity(vocab: Iterable[str]) -> WordSimMatrix:
    """Identity matrix: every word fully similar to itself only."""
    vocab = list(vocab)
    if not vocab:
        raise ValueError("vocabulary must be non-empty")
    return WordSimMatrix(vocab)


def affinity_word_to_sentence(w: str, s, M: WordSimMatrix) -> float:
    """Max similarity of w to any feature of the sentence; 1 when w is
    contained in it."""
    return max(M.sim(w, wi) for wi in _features_of(s))


def affinity_sentence_to_word(
    s: str, w: str, sent_sims: SentenceSimilarities, word_contexts: Mapping[str, Sequence[str]]
) -> float:
    """Max similarity of sentence s to any context containing w; 0 when w
    occurs in no context."""
    ctxs = word_contexts.get(w, ())
    if not ctxs:
        return 0.0
    return max(sent_sims.sim(s, sj) for sj in ctxs)


def update_sentence_matrices(
    M: WordSimMatrix,
    weights: Mapping[str, Mapping[str, float]],
    prev: SentenceSimilarities,
    features: Mapping[str, Sequence[str]],
    rows: Sequence[str] | None = None,
    frozen: Iterable[str] = (),
) -> SentenceSimilarities:
    """One application of the sentence update over every (row, column) pair."""
    frozen = set(frozen)
    rows = list(rows) if rows is not None else list(weights)
    new_rows: dict[str, dict[str, float]] = {}
    for r in rows:
        if r in frozen:
            new_rows[r] = dict(prev.rows.get(r, {r: 1.0}))
            continue
        row: dict[str, float] = {}
        for c in features:
            if c == r:
                row[c] = 1.0
                continue
            value = sum(
                wgt * affinity_word_to_sentence(w, features[c], M)
                for w, wgt in weights[r].items()
            )
            if value != 0.0:
                row[c] = value
        row[r] = 1.0
        new_rows[r] = row
    return SentenceSimilarities(new_rows)


def update_word_matrix(
    sent_sims: SentenceSimilarities,
    features: Mapping[str, Sequence[str]],
    prev: WordSimMatrix,
    corpus_freq: Mapping[str, int] | None = None,
    damping_constant: float = 0.0,
    frozen: Iterable[str] = (),
) -> WordSimMatrix:
    """One application of the word update: mean affinity of the contexts
    containing W1 to W2, with identical per-context weights; frequent
    columns are damped by min(1, c/freq)."""
    frozen = set(frozen)
    word_contexts: dict[str, list[str]] = {}
    for ctx_id, feats in features.items():
        for w in feats:
            word_contexts.setdefault(w, []).append(ctx_id)
    vocab = prev.vocab
    new_rows: dict[str, dict[str, float]] = {}
    for w1 in vocab:
        if w1 in frozen:
            new_rows[w1] = dict(prev.rows.get(w1, {w1: 1.0}))
            continue
        ctxs = word_contexts.get(w1, [])
        row: dict[str, float] = {}
        for w2 in vocab:
            if w2 == w1:
                row[w2] = 1.0
                continue
            if not ctxs:
                continue
            value = sum(
                affinity_sentence_to_word(s, w2, sent_sims, word_contexts) for s in ctxs
            ) / len(ctxs)
            if damping_constant > 0 and corpus_freq and corpus_freq.get(w2, 0) > 0:
                value *= min(1.0, damping_constant / corpus_freq[w2])
            if value != 0.0:
                row[w2] = value
        row[w1] = 1.0
        new_rows[w1] = row
    return WordSimMatrix(vocab, new_rows, iteration=prev.iteration + 1)


def run_iterations(
    features: Mapping[str, Sequence[str]],
    weights: Mapping[str, Mapping[str, float]],
    rows: Sequence[str],
    cfg: EngineConfig | None = None,
    column_groups: Sequence[Sequence[str]] | None = None,
    corpus_freq: Mapping[str, int] | None = None,
    keep_history: bool = False,
) -> SimilarityResult:
    """Run the full iteration loop.

    features: retained feature stems of every training context (originals
    and feedback); weights: normalized per-word weights of every row
    context; rows: the original context ids; column_groups: group 0 is the
    originals, group i the feedback contexts of sense i (defaults to a
    single all-rows group).
    """
    cfg = cfg or EngineConfig()
    ctx_ids = list(features)
    if not ctx_ids:
        raise ValueError("no training contexts")
    for r in rows:
        if r not in features:
            raise ValueError(f"row context {r} has no feature entry")
        if r not in weights:
            raise ValueError(f"row context {r} has no weights")
    if column_groups is None:
        column_groups = [list(rows)]

    ctx_index = {c: i for i, c in enumerate(ctx_ids)}
    vocab = sorted({w for feats in features.values() for w in feats})
    word_index = {w: i for i, w in enumerate(vocab)}
    n_ctx, n_words = len(ctx_ids), len(vocab)

    feat_idx = {}
    for c in ctx_ids:
        idx = np.array(sorted({word_index[w] for w in features[c]}), dtype=np.intp)
        if idx.size == 0:
            raise ValueError(f"context {c} has no retained features")
        feat_idx[c] = idx

    # contexts containing each word, and the uniform per-context weights
    member_cols: list[np.ndarray] = []
    averaging = np.zeros((n_words, n_ctx))
    for w in vocab:
        cols = np.array(
            [ctx_index[c] for c in ctx_ids if word_index[w] in set(feat_idx[c])],
            dtype=np.intp,
        )
        member_cols.append(cols)
        if cols.size:
            averaging[word_index[w], cols] = 1.0 / cols.size

    row_pos = np.array([ctx_index[r] for r in rows], dtype=np.intp)
    weight_matrix = np.zeros((len(rows), n_words))
    for k, r in enumerate(rows):
        for w, wgt in weights[r].items():
            weight_matrix[k, word_index[w]] = wgt

    damp = np.ones(n_words)
    if cfg.damping_enabled and corpus_freq:
        for w, i in word_index.items():
            f = corpus_freq.get(w, 0)
            if f > 0:
                damp[i] = min(1.0, cfg.freq_damping_constant / f)

    word_sims = np.eye(n_words)
    # sentence similarities over all contexts; non-row contexts keep their
    # one-hot rows (only reflexive similarity is known for them)
    sent_sims = np.eye(n_ctx)

    frozen_sent = np.zeros(len(rows), dtype=bool)
    frozen_word = np.zeros(n_words, dtype=bool)
    trace = IterationTrace()
    history: list[IterationSnapshot] = []

    iteration = 0
    while iteration < cfg.max_iterations:
        iteration += 1
        started = time.perf_counter()

        # step 1: sentence matrices from the previous word matrix
        aff_w2s = np.empty((n_words, n_ctx))
        for c in ctx_ids:
            aff_w2s[:, ctx_index[c]] = word_sims[:, feat_idx[c]].max(axis=1)
        candidate = weight_matrix @ aff_w2s
        new_sent = sent_sims.copy()
        active = ~frozen_sent
        new_sent[row_pos[active]] = candidate[active]
        new_sent[row_pos, row_pos] = 1.0
        f_sent = (new_sent[row_pos] - sent_sims[row_pos]).max(axis=1)
        f_sent[frozen_sent] = 0.0

        # step 2: word matrix from the sentence similarities just computed
        aff_s2w = np.zeros((n_ctx, n_words))
        for w, i in word_index.items():
            cols = member_cols[i]
            if cols.size:
                aff_s2w[:, i] = new_sent[:, cols].max(axis=1)
        candidate_w = averaging @ aff_s2w
        candidate_w *= damp[np.newaxis, :]
        np.fill_diagonal(candidate_w, 1.0)
        new_words = word_sims.copy()
        new_words[~frozen_word] = candidate_w[~frozen_word]
        f_word = (new_words - word_sims).max(axis=1)
        f_word[frozen_word] = 0.0

        sent_sims, word_sims = new_sent, new_words
        if cfg.epsilon > 0:
            frozen_sent |= f_sent <= cfg.epsilon
            frozen_word |= f_word <= cfg.epsilon

        trace.wall_times.append(time.perf_counter() - started)
        for k, r in enumerate(rows):
            trace.entries.append(TraceEntry(iteration, "sentence", r, float(f_sent[k]), bool(frozen_sent[k])))
        for w, i in word_index.items():
            trace.entries.append(TraceEntry(iteration, "word", w, float(f_word[i]), bool(frozen_word[i])))

        if keep_history:
            history.append(
                IterationSnapshot(
                    iteration,
                    _to_word_matrix(word_sims, vocab, iteration, cfg.prune_threshold),
                    _to_sentence_sims(sent_sims, ctx_ids, rows, ctx_index, cfg.prune_threshold),
                )
            )

        if frozen_sent.all() and frozen_word.all():
            trace.converged = True
            break

    trace.iterations = iteration

    words_out = _to_word_matrix(word_sims, vocab, iteration, cfg.prune_threshold)
    sents_out = _to_sentence_sims(sent_sims, ctx_ids, rows, ctx_index, cfg.prune_threshold)
    per_sense = [
        SentenceSimMatrix(i, list(rows), list(group), sents_out)
        for i, group in enumerate(column_groups)
    ]
    return SimilarityResult(
        words=words_out,
        sentences=sents_out,
        per_sense=per_sense,
        trace=trace,
        history=history if keep_history else None,
    )


def _to_word_matrix(dense: np.ndarray, vocab: list[str], iteration: int, prune: float) -> WordSimMatrix:
    rows = {}
    for i, w in enumerate(vocab):
        row = {vocab[j]: float(v) for j, v in enumerate(dense[i]) if v >= prune and v != 0.0}
        row[w] = 1.0
        rows[w] = row
    return WordSimMatrix(vocab, rows, iteration=iteration)


def _to_sentence_sims(
    dense: np.ndarray, ctx_ids: list[str], rows: Sequence[str], ctx_index: dict[str, int], prune: float
) -> SentenceSimilarities:
    out = {}
    for r in rows:
        i = ctx_index[r]
        row = {ctx_ids[j]: float(v) for j, v in enumerate(dense[i]) if v >= prune and v != 0.0}
        row[r] = 1.0
        out[r] = row
    return SentenceSimilarities(out)
