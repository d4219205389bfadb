"""Walk the iterative similarity computation on a three-sentence corpus.

Three tiny fragments -- "eat banana", "taste banana", "eat apple" -- are
enough to watch word and sentence similarities bootstrap each other:
after one iteration the shared word "banana" links s1 to s2, and "eat"
links s1 to s3; after two, banana and apple are more similar to each
other than taste is to apple, because they appear in similar sentences.
"""

from sensesim import EngineConfig, run_iterations

features = {
    "s1": ["eat", "banana"],
    "s2": ["taste", "banana"],
    "s3": ["eat", "apple"],
}
weights = {c: {w: 0.5 for w in fs} for c, fs in features.items()}

cfg = EngineConfig(epsilon=0.01, max_iterations=10, damping_enabled=False, prune_threshold=0.0)
result = run_iterations(features, weights, list(features), cfg, keep_history=True)

print(f"converged after {result.trace.iterations} iterations\n")
for snap in result.history:
    print(f"-- iteration {snap.iteration} --")
    print("sentence similarities (rows -> columns):")
    for r in features:
        row = "  ".join(f"{c}={snap.sentences.sim(r, c):.4f}" for c in features)
        print(f"  {r}: {row}")
    print("selected word similarities:")
    for a, b in [("banana", "apple"), ("taste", "eat"), ("taste", "apple")]:
        print(f"  sim({a}, {b}) = {snap.words.sim(a, b):.4f}")
    print()

final = result.history[-1].words
print("final ranking from banana's row:")
for w, v in sorted(final.row("banana").items(), key=lambda kv: -kv[1]):
    print(f"  {w}: {v:.4f}")
