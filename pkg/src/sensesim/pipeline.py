"""End-to-end training: corpus + inventory -> TrainedModel."""

from __future__ import annotations

from dataclasses import dataclass, field

from .config import PipelineConfig
from .engine import EngineConfig, SimilarityResult, WordSimMatrix, run_iterations
from .errors import SensesimError
from .inventory import (
    FeedbackConfig,
    FeedbackSets,
    SenseInventory,
    build_feedback_sets,
    parse_inventory,
)
from .tagger import (
    AssignedSense,
    UsageCluster,
    build_usage_clusters,
    classify_context,
    tag_original_contexts,
)
from .text import Context, CorpusStats, Mode, corpus_stats, extract_contexts, tokenize_and_stem
from .weights import (
    Lexeme,
    SelectionConfig,
    compute_factor_table,
    select_features,
    sentence_word_weights,
)


@dataclass
class TrainedModel:
    config: PipelineConfig
    inventory: SenseInventory
    factors: dict[str, Lexeme]  # retained features only
    words: WordSimMatrix
    clusters: list[UsageCluster]
    feedback_sizes: dict[str, int]
    surviving_nouns: dict[str, list[str]]
    # training-run artifacts; kept in memory, not persisted
    assignment: dict[str, AssignedSense] | None = None
    result: SimilarityResult | None = None
    originals: list[Context] = field(default_factory=list)
    features: dict[str, list[str]] = field(default_factory=dict)
    stats: CorpusStats | None = None

    @property
    def sense_order(self) -> list[str]:
        return self.inventory.sense_ids()

    def classify(self, ctx: Context, clusters: list[UsageCluster] | None = None):
        return classify_context(
            ctx, clusters if clusters is not None else self.clusters, self.factors, self.sense_order
        )

    def classify_line(self, line: str):
        """Classify one raw corpus line containing the target word."""
        sentences = tokenize_and_stem(line, self.config.tokenize_mode())
        contexts = extract_contexts(sentences, self.inventory.target, window=0, id_prefix="test")
        if not contexts:
            raise SensesimError(
                f"input line does not contain the target word {self.inventory.target!r}"
            )
        return self.classify(contexts[0])


def train(
    corpus_text: str,
    inventory_data: bytes | str | SenseInventory,
    config: PipelineConfig | None = None,
    keep_history: bool = False,
) -> TrainedModel:
    config = config or PipelineConfig()
    if isinstance(inventory_data, SenseInventory):
        inv = inventory_data
    else:
        inv = parse_inventory(inventory_data)

    sentences = tokenize_and_stem(corpus_text, config.tokenize_mode())
    stats = corpus_stats(sentences)
    originals = extract_contexts(sentences, inv.target, window=config.window)
    if not originals:
        raise SensesimError(f"target word {inv.target!r} does not occur in the corpus")
    fb = build_feedback_sets(
        sentences, inv, stats, FeedbackConfig(config.high_freq_cutoff, config.window)
    )
    return _train_from_parts(config, inv, stats, originals, fb, keep_history)


def _train_from_parts(
    config: PipelineConfig,
    inv: SenseInventory,
    stats: CorpusStats,
    originals: list[Context],
    fb: FeedbackSets,
    keep_history: bool = False,
) -> TrainedModel:
    feedback_contexts = [ctx for sense in inv.sense_ids() for ctx in fb.contexts[sense]]
    training = originals + feedback_contexts

    table = compute_factor_table(
        training, stats, config.pos_factor_weights(), uniform=config.toy_mode
    )
    selection = SelectionConfig(
        min_count=config.min_feature_count,
        weight_threshold_ratio=config.weight_threshold,
        filters_enabled=not config.toy_mode,
    )
    feature_set = select_features(training, table, selection)
    if not config.toy_mode:
        # The target occurs in every original context by construction and
        # so carries no sense signal; it is not a feature.  Small worked
        # examples keep it so their traces come out exact.
        feature_set.retained.pop(inv.target, None)
    retained = {stem: table[stem] for stem in feature_set.retained}
    if not retained:
        raise SensesimError("no features retained besides the target word")

    features: dict[str, list[str]] = {}
    for ctx in training:
        feats = sorted(ctx.stems() & retained.keys())
        if feats:
            features[ctx.id] = feats

    rows = [ctx.id for ctx in originals if ctx.id in features]
    if not rows:
        raise SensesimError("no original context has any retained feature")
    weights = {
        ctx.id: sentence_word_weights(ctx, retained)
        for ctx in originals
        if ctx.id in features
    }

    membership = {
        ctx.id: fb.members[ctx.span] for ctx in originals if ctx.span in fb.members
    }
    feedback_columns: dict[str, list[str]] = {}
    for sense in inv.sense_ids():
        cols = [ctx.id for ctx in originals if membership.get(ctx.id) == sense and ctx.id in features]
        cols += [ctx.id for ctx in fb.contexts[sense] if ctx.id in features]
        feedback_columns[sense] = cols

    engine_cfg = EngineConfig(
        epsilon=config.epsilon,
        max_iterations=config.max_iterations,
        freq_damping_constant=config.freq_damping_constant,
        damping_enabled=not config.toy_mode,
    )
    column_groups = [rows] + [feedback_columns[s] for s in inv.sense_ids()]
    result = run_iterations(
        features,
        weights,
        rows,
        cfg=engine_cfg,
        column_groups=column_groups,
        corpus_freq=stats.freq,
        keep_history=keep_history,
    )

    assignment = tag_original_contexts(result, feedback_columns, membership, inv.sense_ids())
    # Originals dropped for lack of retained features are unattracted.
    majority = max(inv.sense_ids(), key=lambda s: fb.size(s))
    for ctx in originals:
        if ctx.id not in features:
            assignment[ctx.id] = AssignedSense(majority, anchor_id=None, score=0.0, unattracted=True)

    clusters = build_usage_clusters(assignment, result.words, features)
    return TrainedModel(
        config=config,
        inventory=inv,
        factors=retained,
        words=result.words,
        clusters=clusters,
        feedback_sizes={s: fb.size(s) for s in inv.sense_ids()},
        surviving_nouns=dict(fb.surviving_nouns),
        assignment=assignment,
        result=result,
        originals=originals,
        features=features,
        stats=stats,
    )
