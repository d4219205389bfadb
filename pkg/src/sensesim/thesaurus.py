"""Contextual thesaurus: expand a sense's definition nouns through the
learned word similarity matrix by repeated nearest-neighbor steps."""

from __future__ import annotations

from dataclasses import dataclass, field

from .pipeline import TrainedModel


@dataclass
class RelatedWordSet:
    sense_id: str
    words: set[str]
    generation: dict[str, int]  # stem -> expansion depth at which it entered
    entry_similarity: dict[str, float] = field(default_factory=dict)

    def ordered(self) -> list[str]:
        """Stems ordered by depth, then by entry similarity (descending),
        then alphabetically."""
        return sorted(
            self.words,
            key=lambda w: (self.generation[w], -self.entry_similarity.get(w, 1.0), w),
        )


def related_words(model: TrainedModel, sense_id: str, k: int, min_new: int = 1) -> RelatedWordSet:
    """Start from the sense's definition nouns; each round adds, for every
    word added in the previous round, its k most similar unseen neighbors.
    Stops when fewer than min_new new words are added in a round.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    sense = model.inventory.sense(sense_id)  # raises on unknown sense id
    words = model.words

    generation = {noun: 0 for noun in sense.definition_nouns}
    entry_similarity = {noun: 1.0 for noun in generation}
    frontier = sorted(generation)
    depth = 0
    # each round adds at least one word, so |vocabulary| bounds the rounds
    for _ in range(len(words.vocab) + 1):
        depth += 1
        added: dict[str, float] = {}
        for w in frontier:
            if w not in words.rows:
                continue
            neighbors = [
                (v, sim)
                for v, sim in words.row(w).items()
                if v != w and v not in generation and sim > 0.0
            ]
            neighbors.sort(key=lambda vs: (-vs[1], vs[0]))
            for v, sim in neighbors[:k]:
                if sim > added.get(v, 0.0):
                    added[v] = sim
        if len(added) < min_new:
            break
        for v, sim in added.items():
            generation[v] = depth
            entry_similarity[v] = sim
        frontier = sorted(added)
    return RelatedWordSet(
        sense_id=sense_id,
        words=set(generation),
        generation=generation,
        entry_similarity=entry_similarity,
    )


def format_thesaurus(model: TrainedModel, k: int, min_new: int = 1) -> str:
    """One line per sense: sense id, then tab-separated related stems."""
    lines = []
    for sense in model.inventory.senses:
        related = related_words(model, sense.id, k, min_new)
        lines.append("\t".join([sense.id] + related.ordered()))
    return "\n".join(lines) + "\n"
