"""Pseudo-word evaluation and accuracy reporting.

A pseudo-word merges two real words into one artificial ambiguous stem;
the original identity of each occurrence is a free gold label.  The
synthetic two-topic corpus generator makes the whole pipeline testable
without a licensed corpus.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .config import PipelineConfig
from .engine import WordSimMatrix
from .errors import ClassifyError, SensesimError
from .inventory import FeedbackConfig, Sense, SenseInventory, build_feedback_sets
from .pipeline import TrainedModel, _train_from_parts
from .tagger import UsageCluster, tag_original_contexts
from .text import Context, Sentence, Token, corpus_stats, extract_contexts


@dataclass
class PseudoWord:
    w1: str
    w2: str
    merged: str
    sentences: list[Sentence]  # corpus with occurrences replaced
    inventory: SenseInventory
    sentence_labels: dict[int, set[str]]  # sentence id -> labels occurring in it


@dataclass
class SenseReport:
    sense_id: str
    sample_size: int
    feedback_size: int
    percent_correct: float


@dataclass
class EvalReport:
    per_sense: list[SenseReport]
    per_iteration: list[tuple[int, float]] = field(default_factory=list)

    @property
    def weighted_total(self) -> float:
        total = sum(r.sample_size for r in self.per_sense)
        if total == 0:
            raise SensesimError("empty evaluation report")
        return sum(r.sample_size * r.percent_correct for r in self.per_sense) / total

    @classmethod
    def from_counts(cls, rows: list[tuple[str, int, int, float]]) -> "EvalReport":
        """rows: (sense id, sample size, feedback size, percent correct)."""
        return cls([SenseReport(*row) for row in rows])

    def to_text(self) -> str:
        header = f"{'Sense':<16}{'Sample':>8}{'Feedback':>10}{'% correct':>11}"
        lines = [header, "-" * len(header)]
        for r in self.per_sense:
            lines.append(
                f"{r.sense_id:<16}{r.sample_size:>8}{r.feedback_size:>10}{r.percent_correct:>11.1f}"
            )
        lines.append("-" * len(header))
        total_n = sum(r.sample_size for r in self.per_sense)
        lines.append(f"{'total':<16}{total_n:>8}{'':>10}{self.weighted_total:>11.1f}")
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        lines = ["sense,sample_size,feedback_size,percent_correct"]
        for r in self.per_sense:
            lines.append(f"{r.sense_id},{r.sample_size},{r.feedback_size},{r.percent_correct:.1f}")
        lines.append(f"total,{sum(r.sample_size for r in self.per_sense)},,{self.weighted_total:.1f}")
        return "\n".join(lines) + "\n"


def make_pseudo_word(
    sentences: list[Sentence],
    w1: str,
    w2: str,
    w1_definition: list[str],
    w2_definition: list[str],
) -> PseudoWord:
    """Replace every occurrence of the stems w1 and w2 by a merged stem and
    build a two-sense inventory labeled by the component words."""
    if w1 == w2:
        raise SensesimError("pseudo-word components must differ")
    merged = f"{w1}+{w2}"
    labels: dict[int, set[str]] = {}
    replaced: list[Sentence] = []
    seen = {w1: False, w2: False}
    for sentence in sentences:
        tokens = []
        for token in sentence.tokens:
            if token.stem in (w1, w2):
                labels.setdefault(sentence.id, set()).add(token.stem)
                seen[token.stem] = True
                token = Token(token.surface, merged, token.pos, token.position)
            tokens.append(token)
        replaced.append(Sentence(sentence.id, sentence.doc_id, tuple(tokens)))
    for w, found in seen.items():
        if not found:
            raise SensesimError(f"pseudo-word component {w!r} does not occur in the corpus")

    def _clean(definition: list[str]) -> tuple[str, ...]:
        out = []
        for noun in definition:
            if noun not in (w1, w2, merged) and noun not in out:
                out.append(noun)
        return tuple(out)

    inventory = SenseInventory(
        target=merged,
        senses=(
            Sense(id=w1, gloss=f"pseudo-sense of {w1}", definition_nouns=_clean(w1_definition)),
            Sense(id=w2, gloss=f"pseudo-sense of {w2}", definition_nouns=_clean(w2_definition)),
        ),
    )
    return PseudoWord(w1, w2, merged, replaced, inventory, labels)


def labeled_contexts(pw: PseudoWord, originals: list[Context]) -> list[tuple[Context, str]]:
    """Gold-labeled originals; contexts whose window contains occurrences of
    both component words are excluded (their gold label is undefined)."""
    labeled = []
    for ctx in originals:
        labels: set[str] = set()
        for sid in ctx.span:
            labels |= pw.sentence_labels.get(sid, set())
        if len(labels) == 1:
            labeled.append((ctx, labels.pop()))
    return labeled


def _affinity_profile(words: WordSimMatrix, feats: list[str]) -> dict[str, float]:
    profile = {}
    for w in words.vocab:
        aff = max((words.sim(w, v) for v in feats), default=0.0)
        if aff > 0.0:
            profile[w] = aff
    return profile


def _loo_clusters(
    model: TrainedModel, held_out: str, profiles: dict[str, dict[str, float]]
) -> list[UsageCluster]:
    """The model's clusters with one original context removed."""
    out = []
    for cluster in model.clusters:
        if cluster.anchor_id == held_out:
            continue  # a self-anchored feedback member: drop its cluster
        if held_out not in cluster.members:
            out.append(cluster)
            continue
        remaining = [m for m in cluster.members if m != held_out]
        parts = [profiles[cluster.anchor_id]] + [profiles[m] for m in remaining]
        vector: dict[str, float] = {}
        for profile in parts:
            for w, aff in profile.items():
                if aff > vector.get(w, 0.0):
                    vector[w] = aff
        out.append(UsageCluster(cluster.sense_id, cluster.anchor_id, remaining, vector))
    return out


def evaluate(
    model: TrainedModel,
    labeled: list[tuple[Context, str]],
    leave_one_out: bool = True,
) -> EvalReport:
    """Per-sense and total accuracy of the model on gold-labeled contexts.

    With leave_one_out (the default for pseudo-words) each labeled context
    is removed from its usage cluster before being classified, so
    self-similarity cannot inflate the score.  When the model was trained
    with keep_history, per-iteration tagging accuracy is reported as well.
    """
    if not labeled:
        raise SensesimError("empty labeled set")
    sense_ids = model.sense_order
    profiles = None
    if leave_one_out:
        profiles = {
            ctx_id: _affinity_profile(model.words, feats)
            for ctx_id, feats in model.features.items()
        }

    correct = {s: 0 for s in sense_ids}
    size = {s: 0 for s in sense_ids}
    for ctx, gold in labeled:
        size[gold] += 1
        clusters = _loo_clusters(model, ctx.id, profiles) if leave_one_out else None
        try:
            decision = model.classify(ctx, clusters)
        except ClassifyError:
            continue  # no retained features: counts as an error
        if decision.winner == gold:
            correct[gold] += 1

    report = EvalReport(
        per_sense=[
            SenseReport(
                sense_id=s,
                sample_size=size[s],
                feedback_size=model.feedback_sizes.get(s, 0),
                percent_correct=100.0 * correct[s] / size[s] if size[s] else 0.0,
            )
            for s in sense_ids
        ]
    )
    if model.result is not None and model.result.history:
        report.per_iteration = _per_iteration_accuracy(model, labeled)
    return report


def _per_iteration_accuracy(model: TrainedModel, labeled: list[tuple[Context, str]]) -> list[tuple[int, float]]:
    """Tagging accuracy of the training originals at each iteration."""
    membership = {
        ctx_id: a.sense_id for ctx_id, a in model.assignment.items() if a.feedback_member
    }
    feedback_columns: dict[str, list[str]] = {s: [] for s in model.sense_order}
    for ctx_id, a in model.assignment.items():
        if a.feedback_member:
            feedback_columns[a.sense_id].append(ctx_id)
    for ctx_id in model.features:
        if ctx_id.startswith("fb:"):
            sense = ctx_id.split(":")[1]
            feedback_columns[sense].append(ctx_id)

    out = []
    gold_by_id = {ctx.id: gold for ctx, gold in labeled}
    for snapshot in model.result.history:
        assignment = tag_original_contexts(
            snapshot.sentences, feedback_columns, membership, model.sense_order
        )
        scored = [(cid, gold) for cid, gold in gold_by_id.items() if cid in assignment]
        if not scored:
            continue
        hits = sum(1 for cid, gold in scored if assignment[cid].sense_id == gold)
        out.append((snapshot.iteration, 100.0 * hits / len(scored)))
    return out


def evaluate_pseudo_word(
    sentences: list[Sentence],
    w1: str,
    w2: str,
    w1_definition: list[str],
    w2_definition: list[str],
    config: PipelineConfig | None = None,
    keep_history: bool = False,
) -> tuple[EvalReport, TrainedModel]:
    """Build a pseudo-word, train on the merged corpus, and evaluate with
    leave-one-out classification of the labeled contexts."""
    config = config or PipelineConfig()
    pw = make_pseudo_word(sentences, w1, w2, w1_definition, w2_definition)
    stats = corpus_stats(pw.sentences)
    originals = extract_contexts(pw.sentences, pw.merged, window=config.window)
    if not originals:
        raise SensesimError("pseudo-word has no contexts")
    fb = build_feedback_sets(
        pw.sentences, pw.inventory, stats, FeedbackConfig(config.high_freq_cutoff, config.window)
    )
    model = _train_from_parts(config, pw.inventory, stats, originals, fb, keep_history)
    labeled = labeled_contexts(pw, originals)
    report = evaluate(model, labeled, leave_one_out=True)
    return report, model


def derive_definition_words(
    sentences: list[Sentence],
    target: str,
    exclude: tuple[str, ...] = (),
    count: int = 4,
    high_freq_cutoff: float = 0.5,
) -> list[str]:
    """A stand-in dictionary entry: the nouns co-occurring most often with
    the target, skipping globally frequent ones."""
    stats = corpus_stats(sentences)
    cutoff = high_freq_cutoff * stats.max5
    cooc: dict[str, int] = {}
    for sentence in sentences:
        stems = sentence.stems()
        if target not in stems:
            continue
        for s in stems:
            if s != target and s not in exclude and stats.freq.get(s, 0) <= cutoff:
                cooc[s] = cooc.get(s, 0) + 1
    ranked = sorted(cooc.items(), key=lambda kv: (-kv[1], kv[0]))
    return [s for s, _ in ranked[:count]]


def generate_two_topic_corpus(
    seed: int = 13,
    topic_vocab: int = 30,
    contexts_per_topic: int = 60,
    background_per_topic: int = 40,
    shared_vocab: int = 6,
) -> dict:
    """A reproducible synthetic corpus of two disjoint topical vocabularies
    with shared function-like nouns and Zipf-like frequencies.

    Returns corpus text (Tagged mode), the two target words, and a derived
    definition-word list per target.
    """
    rng = random.Random(seed)
    w1, w2 = "gavel", "melon"
    topics = {
        w1: [f"law{i:02d}" for i in range(topic_vocab)],
        w2: [f"fruit{i:02d}" for i in range(topic_vocab)],
    }
    shared = [f"common{i}" for i in range(shared_vocab)]

    def zipf_sample(vocab: list[str], n: int) -> list[str]:
        weights = [1.0 / (rank + 1) for rank in range(len(vocab))]
        return rng.choices(vocab, weights=weights, k=n)

    lines = []
    for target, vocab in topics.items():
        for _ in range(contexts_per_topic):
            words = [target] + zipf_sample(vocab, rng.randint(5, 8))
            words += rng.sample(shared, rng.randint(1, 2))
            rng.shuffle(words)
            lines.append(" ".join(f"{w}_N" for w in words))
        for _ in range(background_per_topic):
            words = zipf_sample(vocab, rng.randint(4, 7))
            words += rng.sample(shared, rng.randint(0, 2))
            rng.shuffle(words)
            lines.append(" ".join(f"{w}_N" for w in words))
    rng.shuffle(lines)

    # blank line every few sentences: multiple documents
    text_lines = []
    for i, line in enumerate(lines):
        if i > 0 and i % 5 == 0:
            text_lines.append("")
        text_lines.append(line)
    definitions = {target: vocab[2:6] for target, vocab in topics.items()}
    return {
        "corpus_text": "\n".join(text_lines) + "\n",
        "w1": w1,
        "w2": w2,
        "definitions": definitions,
    }
