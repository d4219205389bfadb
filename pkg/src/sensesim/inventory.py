"""Sense inventories and feedback-set construction.

An inventory file is JSON::

    {"target": "suit",
     "senses": [{"id": "court-action", "gloss": "...",
                 "definition_words": ["court", "action"]},
                {"id": "clothes", "gloss": "...",
                 "definition_words": ["clothes", "garment"]}]}

The feedback set of a sense is the union of the corpus contexts of its
surviving definition nouns.  Definition nouns that are too frequent or
shared between two senses are dropped; contexts landing in two senses'
feedback sets are discarded; contexts that contain the target word itself
stay original but are recorded as members of the feedback set they fall in.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import FeedbackError, InventoryError
from .stemming import stem
from .text import Context, CorpusStats, Origin, Sentence, extract_contexts


@dataclass(frozen=True)
class Sense:
    id: str
    gloss: str
    definition_nouns: tuple[str, ...]  # stemmed, deduplicated, input order


@dataclass(frozen=True)
class SenseInventory:
    target: str  # stemmed
    senses: tuple[Sense, ...]

    def sense_ids(self) -> list[str]:
        return [s.id for s in self.senses]

    def sense(self, sense_id: str) -> Sense:
        for s in self.senses:
            if s.id == sense_id:
                return s
        raise InventoryError(f"unknown sense id {sense_id!r}")


@dataclass
class FeedbackConfig:
    high_freq_cutoff: float = 0.5  # drop noun when freq > cutoff * max5
    window: int = 0


@dataclass
class FeedbackSets:
    contexts: dict[str, list[Context]]  # sense id -> feedback contexts
    members: dict[tuple[int, ...], str]  # original span -> sense id
    seed_word_map: dict[str, str]  # feedback context id -> admitting noun
    surviving_nouns: dict[str, list[str]] = field(default_factory=dict)

    def size(self, sense_id: str) -> int:
        n_members = sum(1 for s in self.members.values() if s == sense_id)
        return len(self.contexts[sense_id]) + n_members


def parse_inventory(data: bytes | str) -> SenseInventory:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as exc:
        raise InventoryError(f"inventory is not valid JSON: {exc}") from exc
    try:
        target = stem(str(obj["target"]))
        raw_senses = obj["senses"]
    except (KeyError, TypeError) as exc:
        raise InventoryError("inventory must have 'target' and 'senses' fields") from exc
    if len(raw_senses) < 2:
        raise InventoryError(f"need at least 2 senses, got {len(raw_senses)}")
    senses = []
    seen_ids = set()
    for raw in raw_senses:
        sense_id = str(raw["id"])
        if sense_id in seen_ids:
            raise InventoryError(f"duplicate sense id {sense_id!r}")
        seen_ids.add(sense_id)
        nouns: list[str] = []
        for word in raw.get("definition_words", []):
            stemmed = stem(str(word))
            if stemmed and stemmed not in nouns:
                nouns.append(stemmed)
        senses.append(Sense(id=sense_id, gloss=str(raw.get("gloss", "")), definition_nouns=tuple(nouns)))
    return SenseInventory(target=target, senses=tuple(senses))


def build_feedback_sets(
    corpus: list[Sentence],
    inv: SenseInventory,
    stats: CorpusStats,
    cfg: FeedbackConfig | None = None,
) -> FeedbackSets:
    cfg = cfg or FeedbackConfig()
    cutoff = cfg.high_freq_cutoff * stats.max5

    # Nouns appearing in two or more sense entries are dropped from all.
    noun_senses: dict[str, set[str]] = {}
    for sense in inv.senses:
        for noun in sense.definition_nouns:
            noun_senses.setdefault(noun, set()).add(sense.id)
    shared = {noun for noun, owners in noun_senses.items() if len(owners) > 1}

    surviving: dict[str, list[str]] = {}
    for sense in inv.senses:
        kept = [
            noun
            for noun in sense.definition_nouns
            if noun not in shared and stats.freq.get(noun, 0) <= cutoff
        ]
        surviving[sense.id] = kept

    # Collect per-sense contexts, one per sentence span, remembering the
    # definition noun that admitted each span.
    by_sense: dict[str, dict[tuple[int, ...], str]] = {s.id: {} for s in inv.senses}
    for sense in inv.senses:
        spans = by_sense[sense.id]
        for noun in surviving[sense.id]:
            for ctx in extract_contexts(corpus, noun, window=cfg.window):
                spans.setdefault(ctx.span, noun)

    # Spans claimed by two senses are discarded everywhere.
    span_owners: dict[tuple[int, ...], set[str]] = {}
    for sense_id, spans in by_sense.items():
        for span in spans:
            span_owners.setdefault(span, set()).add(sense_id)
    clashed = {span for span, owners in span_owners.items() if len(owners) > 1}

    by_id = {s.id: s for s in corpus}
    contexts: dict[str, list[Context]] = {s.id: [] for s in inv.senses}
    members: dict[tuple[int, ...], str] = {}
    seed_word_map: dict[str, str] = {}
    for sense in inv.senses:
        for span, noun in by_sense[sense.id].items():
            if span in clashed:
                continue
            sentences = tuple(by_id[i] for i in span)
            target_hit = None
            for s in sentences:
                for token in s.tokens:
                    if token.stem == inv.target:
                        target_hit = (s.id, token.position)
                        break
                if target_hit:
                    break
            if target_hit is not None:
                # Contains the target: stays an original example, but is a
                # member of this sense's feedback set.
                members[span] = sense.id
                continue
            ctx_id = f"fb:{sense.id}:{len(contexts[sense.id])}"
            contexts[sense.id].append(
                Context(
                    id=ctx_id,
                    sentences=sentences,
                    target_position=_first_occurrence(sentences, noun),
                    origin=Origin("feedback", sense.id),
                )
            )
            seed_word_map[ctx_id] = noun

    fb = FeedbackSets(
        contexts=contexts,
        members=members,
        seed_word_map=seed_word_map,
        surviving_nouns=surviving,
    )
    for sense in inv.senses:
        if fb.size(sense.id) == 0:
            raise FeedbackError(
                f"feedback set for sense {sense.id!r} is empty after filtering "
                f"(surviving definition nouns: {surviving[sense.id]})"
            )
    return fb


def _first_occurrence(sentences: tuple[Sentence, ...], noun: str) -> tuple[int, int]:
    for s in sentences:
        for token in s.tokens:
            if token.stem == noun:
                return (s.id, token.position)
    raise FeedbackError(f"admitting noun {noun!r} not found in its own context")
