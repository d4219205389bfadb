"""Model persistence: versioned JSON, lossless for every entry >= 1e-6."""

from __future__ import annotations

import json

from .config import PipelineConfig
from .engine import WordSimMatrix
from .errors import ModelIOError
from .inventory import Sense, SenseInventory
from .pipeline import TrainedModel
from .tagger import UsageCluster
from .text import Pos
from .weights import Lexeme, WeightFactors

FORMAT_VERSION = 1
_SAVE_THRESHOLD = 1e-6


def model_to_dict(model: TrainedModel) -> dict:
    triplets = []
    for i, row in sorted(model.words.rows.items()):
        for j, value in sorted(row.items()):
            if i != j and value >= _SAVE_THRESHOLD:
                triplets.append([i, j, value])
    return {
        "format_version": FORMAT_VERSION,
        "config": model.config.to_dict(),
        "inventory": {
            "target": model.inventory.target,
            "senses": [
                {"id": s.id, "gloss": s.gloss, "definition_words": list(s.definition_nouns)}
                for s in model.inventory.senses
            ],
        },
        "surviving_nouns": {k: list(v) for k, v in sorted(model.surviving_nouns.items())},
        "feedback_sizes": dict(sorted(model.feedback_sizes.items())),
        "features": {
            stem: {
                "pos": lex.pos.value,
                "corpus_freq": lex.corpus_freq,
                "training_count": lex.training_count,
                "global_freq": lex.factors.global_freq,
                "log_likelihood": lex.factors.log_likelihood,
                "pos_factor": lex.factors.pos,
            }
            for stem, lex in sorted(model.factors.items())
        },
        "word_matrix": {"vocab": list(model.words.vocab), "entries": triplets},
        "clusters": [
            {
                "sense": c.sense_id,
                "anchor": c.anchor_id,
                "members": list(c.members),
                "affinity": {
                    k: v for k, v in sorted(c.affinity_vector.items()) if v >= _SAVE_THRESHOLD
                },
            }
            for c in model.clusters
        ],
    }


def model_to_json(model: TrainedModel) -> str:
    return json.dumps(model_to_dict(model), sort_keys=True, separators=(",", ":")) + "\n"


def save_model(model: TrainedModel, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(model_to_json(model))


def model_from_dict(data: dict) -> TrainedModel:
    try:
        version = data["format_version"]
    except (KeyError, TypeError) as exc:
        raise ModelIOError("not a model file: missing format_version") from exc
    if version != FORMAT_VERSION:
        raise ModelIOError(f"unsupported model format version {version} (expected {FORMAT_VERSION})")
    try:
        config = PipelineConfig.from_dict(data["config"])
        inv = SenseInventory(
            target=data["inventory"]["target"],
            senses=tuple(
                Sense(s["id"], s.get("gloss", ""), tuple(s["definition_words"]))
                for s in data["inventory"]["senses"]
            ),
        )
        factors = {
            stem: Lexeme(
                stem=stem,
                pos=Pos(raw["pos"]),
                corpus_freq=raw["corpus_freq"],
                training_count=raw["training_count"],
                factors=WeightFactors(
                    global_freq=raw["global_freq"],
                    log_likelihood=raw["log_likelihood"],
                    pos=raw["pos_factor"],
                ),
            )
            for stem, raw in data["features"].items()
        }
        vocab = data["word_matrix"]["vocab"]
        rows: dict[str, dict[str, float]] = {w: {w: 1.0} for w in vocab}
        for i, j, value in data["word_matrix"]["entries"]:
            rows[i][j] = value
        words = WordSimMatrix(vocab, rows)
        clusters = [
            UsageCluster(
                sense_id=c["sense"],
                anchor_id=c["anchor"],
                members=list(c["members"]),
                affinity_vector=dict(c["affinity"]),
            )
            for c in data["clusters"]
        ]
        feedback_sizes = dict(data["feedback_sizes"])
        surviving = {k: list(v) for k, v in data["surviving_nouns"].items()}
    except (KeyError, TypeError, ValueError) as exc:
        raise ModelIOError(f"corrupt model file: {exc!r}") from exc
    return TrainedModel(
        config=config,
        inventory=inv,
        factors=factors,
        words=words,
        clusters=clusters,
        feedback_sizes=feedback_sizes,
        surviving_nouns=surviving,
    )


def load_model(path: str) -> TrainedModel:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ModelIOError(f"cannot read model file {path}: {exc}") from exc
    return model_from_dict(data)
