import pytest

from sensesim import (
    EngineConfig,
    InventoryError,
    PipelineConfig,
    Sense,
    SenseInventory,
    TrainedModel,
    WordSimMatrix,
    format_thesaurus,
    related_words,
    run_iterations,
)

TOY_FEATURES = {
    "s1": ["eat", "banana"],
    "s2": ["taste", "banana"],
    "s3": ["eat", "apple"],
}
TOY_WEIGHTS = {c: {w: 0.5 for w in fs} for c, fs in TOY_FEATURES.items()}


def _toy_model():
    cfg = EngineConfig(epsilon=0.01, max_iterations=10, damping_enabled=False, prune_threshold=0.0)
    result = run_iterations(TOY_FEATURES, TOY_WEIGHTS, list(TOY_FEATURES), cfg)
    inventory = SenseInventory(
        target="banana",
        senses=(
            Sense("A", "eating sense", ("eat",)),
            Sense("B", "tasting sense", ("taste",)),
        ),
    )
    return TrainedModel(
        config=PipelineConfig(),
        inventory=inventory,
        factors={},
        words=result.words,
        clusters=[],
        feedback_sizes={},
        surviving_nouns={},
    )


def test_seed_words_have_depth_zero():
    model = _toy_model()
    related = related_words(model, "A", k=1)
    assert related.generation["eat"] == 0
    assert related.sense_id == "A"


def test_expansion_from_eat_reaches_taste_and_terminates():
    model = _toy_model()
    related = related_words(model, "A", k=1)
    assert "taste" in related.words
    # full closure of the toy vocabulary, reached in finitely many rounds
    assert related.words == {"eat", "banana", "taste", "apple"}
    # each non-seed member entered at the depth of its discovery chain
    assert related.generation["eat"] == 0
    assert all(related.generation[w] >= 1 for w in related.words - {"eat"})


def test_each_member_is_a_neighbor_of_the_previous_depth():
    model = _toy_model()
    related = related_words(model, "A", k=1)
    for w, depth in related.generation.items():
        if depth == 0:
            continue
        previous = [v for v, d in related.generation.items() if d == depth - 1]
        assert any(model.words.sim(p, w) > 0.0 for p in previous)


def test_growth_is_monotone_in_k():
    model = _toy_model()
    small = related_words(model, "A", k=1)
    large = related_words(model, "A", k=3)
    assert small.words <= large.words


def test_min_new_stops_early():
    model = _toy_model()
    eager = related_words(model, "A", k=1, min_new=1)
    # requiring 2 fresh words per round stops immediately: each round of
    # k=1 expansion from a single frontier word adds at most one
    strict = related_words(model, "A", k=1, min_new=2)
    assert strict.words == {"eat"}
    assert strict.words <= eager.words


def test_zero_similarity_matrix_gives_seeds_only():
    model = _toy_model()
    model.words = WordSimMatrix(["eat", "taste", "banana", "apple"])  # identity
    related = related_words(model, "A", k=5)
    assert related.words == {"eat"}


def test_unknown_sense_and_bad_k():
    model = _toy_model()
    with pytest.raises(InventoryError):
        related_words(model, "missing", k=1)
    with pytest.raises(ValueError):
        related_words(model, "A", k=0)


def test_ordered_output_by_depth_then_similarity():
    model = _toy_model()
    related = related_words(model, "A", k=2)
    ordered = related.ordered()
    assert ordered[0] == "eat"
    depths = [related.generation[w] for w in ordered]
    assert depths == sorted(depths)


def test_format_thesaurus_one_line_per_sense():
    model = _toy_model()
    out = format_thesaurus(model, k=1)
    lines = out.splitlines()
    assert len(lines) == 2
    assert lines[0].split("\t")[0] == "A"
    assert lines[1].split("\t")[0] == "B"
    assert lines[0].split("\t")[1] == "eat"
