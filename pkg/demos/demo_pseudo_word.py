"""Evaluate disambiguation accuracy with a pseudo-word.

Merging two unrelated words ("gavel" and "melon") into one artificial
ambiguous token gives free gold labels: every occurrence is known to come
from one component or the other.  The synthetic two-topic corpus keeps
the demo self-contained; training, tagging, and leave-one-out
classification run end to end in well under a second.
"""

from sensesim import (
    Mode,
    PipelineConfig,
    evaluate_pseudo_word,
    generate_two_topic_corpus,
    tokenize_and_stem,
)

data = generate_two_topic_corpus()
sentences = tokenize_and_stem(data["corpus_text"], Mode.TAGGED)
print(f"corpus: {len(sentences)} sentences; merging {data['w1']!r} + {data['w2']!r}")
print(f"definition words: {data['definitions']}\n")

report, model = evaluate_pseudo_word(
    sentences,
    data["w1"],
    data["w2"],
    data["definitions"][data["w1"]],
    data["definitions"][data["w2"]],
    PipelineConfig(),
    keep_history=True,
)

print(report.to_text())
if report.per_iteration:
    print("tagging accuracy by iteration:")
    for iteration, pct in report.per_iteration:
        print(f"  iteration {iteration}: {pct:.1f}%")

print(f"\nusage clusters: {len(model.clusters)}")
for cluster in model.clusters[:4]:
    print(f"  sense {cluster.sense_id}: anchor {cluster.anchor_id}, {len(cluster.members)} members")
