"""Expand sense definitions into related-word sets.

After training, each sense's definition nouns are grown through the word
similarity matrix: every round adds, for each newly added word, its k
most similar unseen neighbors, until a round adds nothing new.  The
result is a small contextual thesaurus conditioned on the target word.
"""

import json

from sensesim import PipelineConfig, generate_two_topic_corpus, related_words, train

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

for sense in model.inventory.senses:
    for k in (1, 2):
        related = related_words(model, sense.id, k=k)
        words = related.ordered()
        print(f"sense {sense.id!r}, k={k}: {len(words)} words")
        for w in words[:8]:
            depth = related.generation[w]
            sim = related.entry_similarity.get(w, 1.0)
            print(f"  depth {depth}  sim {sim:.3f}  {w}")
        print()
