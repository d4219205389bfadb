"""Per-word weights and feature selection.

The unnormalized weight of a word in a sentence is the product of four
factors: global corpus frequency, log likelihood of appearing in the
training set, part of speech, and distance from the target occurrence.
Per sentence, weights are normalized to sum to 1.  Weights are frozen
before the similarity iteration begins.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from enum import Enum

from .errors import WeightError
from .text import Context, CorpusStats, Pos, STOPWORDS, OPEN_CLASS

DEFAULT_POS_WEIGHTS = {Pos.NOUN: 1.0, Pos.VERB: 0.6, Pos.ADJECTIVE: 0.8, Pos.OTHER: 0.0}


@dataclass(frozen=True)
class WeightFactors:
    global_freq: float = 1.0
    log_likelihood: float = 1.0
    pos: float = 1.0
    distance: float = 1.0

    def product(self) -> float:
        return self.global_freq * self.log_likelihood * self.pos * self.distance


@dataclass(frozen=True)
class Lexeme:
    stem: str
    pos: Pos
    corpus_freq: int
    training_count: int
    factors: WeightFactors


class ExclusionReason(Enum):
    RARE_COUNT = "RareCount"
    LOW_WEIGHT = "LowWeight"
    STOP_LIST = "StopList"


@dataclass
class FeatureSet:
    retained: dict[str, float]  # stem -> unnormalized base factor product
    excluded: dict[str, ExclusionReason]


@dataclass
class SelectionConfig:
    min_count: int = 2
    weight_threshold_ratio: float = 0.01  # of the maximum factor product
    filters_enabled: bool = True


def global_frequency_factor(freq: int, max5: float) -> float:
    if max5 <= 0:
        raise WeightError("max5 must be positive")
    return max(0.0, 1.0 - freq / max5)


def log_likelihood_factor(p_cond: float, p_global: float, training_count: int) -> float:
    if p_global <= 0:
        raise WeightError("global probability must be positive")
    if p_cond < 0:
        raise WeightError("conditional probability must be nonnegative")
    if p_cond == 0:
        return 0.0
    raw = max(0.0, math.log(p_cond / p_global))
    return raw * min(1.0, training_count / 10.0)


def pos_factor(pos: Pos, pos_weights: dict[Pos, float] | None = None) -> float:
    weights = pos_weights or DEFAULT_POS_WEIGHTS
    return weights[pos]


def distance_factor(token_distance: int, sentence_span: int) -> float:
    if sentence_span < 1:
        raise WeightError("sentence span must be at least 1")
    if token_distance < 0:
        raise WeightError("token distance must be nonnegative")
    return 1.0 / (1.0 + token_distance / sentence_span)


def compute_factor_table(
    training_contexts: list[Context],
    stats: CorpusStats,
    pos_weights: dict[Pos, float] | None = None,
    uniform: bool = False,
) -> dict[str, Lexeme]:
    """Base (distance-free) factors for every open-class stem in the
    training set.  With uniform=True every factor is 1 (toy mode)."""
    counts: dict[str, int] = {}
    for ctx in training_contexts:
        for _, token in ctx.flat_tokens():
            if token.pos in OPEN_CLASS:
                counts[token.stem] = counts.get(token.stem, 0) + 1
    total_training = sum(counts.values())
    if total_training == 0:
        raise WeightError("training set contains no open-class tokens")

    table: dict[str, Lexeme] = {}
    for stem_, count in counts.items():
        pos = stats.pos_of(stem_)
        corpus_freq = stats.freq.get(stem_, count)
        if uniform:
            factors = WeightFactors()
        else:
            p_cond = count / total_training
            p_global = corpus_freq / stats.total_tokens
            factors = WeightFactors(
                global_freq=global_frequency_factor(corpus_freq, stats.max5),
                log_likelihood=log_likelihood_factor(p_cond, p_global, count),
                pos=pos_factor(pos, pos_weights),
                distance=1.0,
            )
        table[stem_] = Lexeme(
            stem=stem_,
            pos=pos,
            corpus_freq=corpus_freq,
            training_count=count,
            factors=factors,
        )
    return table


def sentence_word_weights(ctx: Context, factors: dict[str, Lexeme]) -> dict[str, float]:
    """Normalized weights of the retained features of a context.

    A feature occurring several times contributes one entry, taken at its
    maximal distance factor (i.e. its occurrence closest to the target).
    """
    target_offset = ctx.target_offset()
    span = ctx.token_span()
    best_distance: dict[str, int] = {}
    for offset, token in ctx.flat_tokens():
        if token.stem not in factors:
            continue
        d = abs(offset - target_offset)
        if token.stem not in best_distance or d < best_distance[token.stem]:
            best_distance[token.stem] = d
    if not best_distance:
        raise WeightError(f"context {ctx.id} has no retained features")

    unnormalized = {}
    for stem_, d in best_distance.items():
        base = factors[stem_].factors
        fac = replace(base, distance=distance_factor(d, span))
        unnormalized[stem_] = fac.product()
    total = sum(unnormalized.values())
    if total <= 0:
        raise WeightError(f"context {ctx.id} has no features with positive weight")
    return {stem_: value / total for stem_, value in unnormalized.items()}


def select_features(
    contexts: list[Context],
    factors: dict[str, Lexeme],
    cfg: SelectionConfig | None = None,
) -> FeatureSet:
    """Apply the rare-count, stoplist and low-weight filters."""
    cfg = cfg or SelectionConfig()
    counts: dict[str, int] = {}
    for ctx in contexts:
        for _, token in ctx.flat_tokens():
            if token.stem in factors:
                counts[token.stem] = counts.get(token.stem, 0) + 1

    products = {stem_: factors[stem_].factors.product() for stem_ in counts}
    retained: dict[str, float] = {}
    excluded: dict[str, ExclusionReason] = {}
    if cfg.filters_enabled:
        max_product = max(products.values(), default=0.0)
        threshold = cfg.weight_threshold_ratio * max_product
        for stem_, product in products.items():
            if stem_ in STOPWORDS:
                excluded[stem_] = ExclusionReason.STOP_LIST
            elif counts[stem_] < cfg.min_count:
                excluded[stem_] = ExclusionReason.RARE_COUNT
            elif product < threshold or product <= 0:
                excluded[stem_] = ExclusionReason.LOW_WEIGHT
            else:
                retained[stem_] = product
    else:
        retained = dict(products)
    if not retained:
        raise WeightError("no features retained after filtering")
    return FeatureSet(retained=retained, excluded=excluded)
