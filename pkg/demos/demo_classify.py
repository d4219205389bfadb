"""Train a model, save it, reload it, and classify fresh contexts.

Demonstrates the persistence round trip and the classification API that
the `sensesim classify` subcommand wraps.
"""

import json
import tempfile

from sensesim import PipelineConfig, generate_two_topic_corpus, load_model, save_model, train

data = generate_two_topic_corpus()
inventory = json.dumps(
    {
        "target": "gavel",
        "senses": [
            {"id": "court", "definition_words": data["definitions"]["gavel"][:2]},
            {"id": "tool", "definition_words": data["definitions"]["gavel"][2:]},
        ],
    }
)
model = train(data["corpus_text"], inventory, PipelineConfig())

with tempfile.NamedTemporaryFile(suffix=".json", delete=False) as fh:
    path = fh.name
save_model(model, path)
reloaded = load_model(path)
print(f"model saved to {path} and reloaded\n")

lines = [
    "gavel_N law00_N law01_N common0_N",
    "gavel_N law05_N law02_N",
    "gavel_N common1_N law03_N law04_N",
]
for line in lines:
    decision = reloaded.classify_line(line)
    scores = "  ".join(f"{s}={v:.4f}" for s, v in decision.per_sense.items())
    print(f"{line!r}\n  -> {decision.winner}  ({scores})\n")
