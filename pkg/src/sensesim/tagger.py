"""Sense assignment, usage clusters, and classification of new contexts.

After convergence each original context takes the sense of its most
similar feedback sentence.  Originals that are themselves feedback-set
members keep that sense directly.  Contexts attracted to the same
feedback sentence form a usage cluster, summarized by a generalized
affinity vector; a new context is classified by its weighted similarity
to the clusters.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .engine import SimilarityResult, WordSimMatrix
from .errors import ClassifyError, WeightError
from .text import Context
from .weights import Lexeme, sentence_word_weights


@dataclass
class AssignedSense:
    sense_id: str
    anchor_id: str | None
    score: float
    feedback_member: bool = False
    unattracted: bool = False


@dataclass
class UsageCluster:
    sense_id: str
    anchor_id: str
    members: list[str]
    affinity_vector: dict[str, float]


@dataclass
class Classification:
    winner: str
    per_sense: dict[str, float]
    per_cluster: dict[str, float] = field(default_factory=dict)


def tag_original_contexts(
    sims,
    feedback_columns: Mapping[str, Sequence[str]],
    membership: Mapping[str, str],
    sense_order: Sequence[str],
) -> dict[str, AssignedSense]:
    """Assign a sense to every original (row) context.

    sims is a SimilarityResult or a SentenceSimilarities.  Ties are broken
    deterministically: first sense in inventory order, then first anchor in
    feedback-set construction order.  Originals with zero similarity to
    every feedback sentence get the sense with the largest feedback set,
    flagged unattracted.
    """
    if isinstance(sims, SimilarityResult):
        sims = sims.sentences
    assignment: dict[str, AssignedSense] = {}
    for r in sims.rows:
        if r in membership:
            assignment[r] = AssignedSense(membership[r], anchor_id=r, score=1.0, feedback_member=True)
            continue
        best_sense, best_anchor, best_score = None, None, 0.0
        for sense in sense_order:
            for anchor in feedback_columns.get(sense, ()):
                score = sims.sim(r, anchor)
                if score > best_score:
                    best_sense, best_anchor, best_score = sense, anchor, score
        if best_sense is None:
            majority = max(sense_order, key=lambda s: (len(feedback_columns.get(s, ())), -sense_order.index(s)))
            assignment[r] = AssignedSense(majority, anchor_id=None, score=0.0, unattracted=True)
        else:
            assignment[r] = AssignedSense(best_sense, best_anchor, best_score)
    return assignment


def build_usage_clusters(
    assignment: Mapping[str, AssignedSense],
    words: WordSimMatrix,
    features: Mapping[str, Sequence[str]],
) -> list[UsageCluster]:
    """One cluster per anchor that attracted at least one original.

    The cluster's affinity vector holds, for every retained lexeme, its
    maximal similarity to any feature of any cluster sentence (anchor
    included).
    """
    grouped: dict[str, list[str]] = {}
    anchor_sense: dict[str, str] = {}
    for ctx_id, assigned in assignment.items():
        if assigned.unattracted or assigned.anchor_id is None:
            continue
        grouped.setdefault(assigned.anchor_id, []).append(ctx_id)
        anchor_sense[assigned.anchor_id] = assigned.sense_id

    clusters = []
    for anchor, members in sorted(grouped.items()):
        cluster_features: set[str] = set(features.get(anchor, ()))
        for m in members:
            cluster_features |= set(features.get(m, ()))
        vector = {}
        for w in words.vocab:
            aff = max((words.sim(w, v) for v in cluster_features), default=0.0)
            if aff > 0.0:
                vector[w] = aff
        clusters.append(
            UsageCluster(
                sense_id=anchor_sense[anchor],
                anchor_id=anchor,
                members=sorted(members),
                affinity_vector=vector,
            )
        )
    return clusters


def classify_context(
    s_new: Context,
    clusters: Sequence[UsageCluster],
    factors: Mapping[str, Lexeme],
    sense_order: Sequence[str],
) -> Classification:
    """Weighted affinity of the new context to every cluster; the winner
    is the sense of the most similar cluster."""
    try:
        word_weights = sentence_word_weights(s_new, factors)
    except WeightError as exc:
        raise ClassifyError(f"unclassifiable context {s_new.id}: {exc}") from exc

    per_cluster: dict[str, float] = {}
    per_sense: dict[str, float] = {sense: 0.0 for sense in sense_order}
    for cluster in clusters:
        score = sum(w * cluster.affinity_vector.get(stem, 0.0) for stem, w in word_weights.items())
        per_cluster[cluster.anchor_id] = score
        if score > per_sense.get(cluster.sense_id, 0.0):
            per_sense[cluster.sense_id] = score
    winner = max(sense_order, key=lambda s: (per_sense[s], -sense_order.index(s)))
    return Classification(winner=winner, per_sense=per_sense, per_cluster=per_cluster)
