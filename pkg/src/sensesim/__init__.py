"""Similarity-based word sense disambiguation.

Learns word and sentence similarity from an untagged corpus by an
iterative converging fixed-point computation, bootstraps sense-labeled
feedback sets from dictionary definitions, auto-tags the training
examples, and classifies new contexts of a polysemous word.
"""

from .config import PipelineConfig
from .engine import (
    EngineConfig,
    SentenceSimilarities,
    SentenceSimMatrix,
    SimilarityResult,
    WordSimMatrix,
    affinity_sentence_to_word,
    affinity_word_to_sentence,
    init_word_similarity,
    run_iterations,
    update_sentence_matrices,
    update_word_matrix,
)
from .errors import (
    ClassifyError,
    CorpusParseError,
    FeedbackError,
    InventoryError,
    ModelIOError,
    SensesimError,
    WeightError,
)
from .evaluation import (
    EvalReport,
    PseudoWord,
    SenseReport,
    derive_definition_words,
    evaluate,
    evaluate_pseudo_word,
    generate_two_topic_corpus,
    labeled_contexts,
    make_pseudo_word,
)
from .inventory import (
    FeedbackConfig,
    FeedbackSets,
    Sense,
    SenseInventory,
    build_feedback_sets,
    parse_inventory,
)
from .model_io import load_model, save_model
from .pipeline import TrainedModel, train
from .tagger import (
    AssignedSense,
    Classification,
    UsageCluster,
    build_usage_clusters,
    classify_context,
    tag_original_contexts,
)
from .text import (
    Context,
    CorpusStats,
    Mode,
    Origin,
    Pos,
    Sentence,
    Token,
    corpus_stats,
    extract_contexts,
    tokenize_and_stem,
)
from .thesaurus import RelatedWordSet, format_thesaurus, related_words
from .weights import (
    FeatureSet,
    Lexeme,
    SelectionConfig,
    WeightFactors,
    compute_factor_table,
    distance_factor,
    global_frequency_factor,
    log_likelihood_factor,
    pos_factor,
    select_features,
    sentence_word_weights,
)

__version__ = "0.1.0"
