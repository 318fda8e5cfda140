"""Tweet sentiment classification: normalization, n-gram features, Naive Bayes,
Maximum Entropy and a lexicon baseline."""

from ._core import (
    EmoticonTable,
    EvaluationReport,
    FeatureMode,
    FeatureVector,
    MaxEntModel,
    ModelArtifact,
    NaiveBayesModel,
    OpinionLexicon,
    Sentiment,
    TrainerConfig,
    TrainingAlgorithm,
    TweetimentError,
    Vocabulary,
    baseline_classify,
    build_vocabulary,
    corpus_stats,
    deserialize_model,
    evaluate,
    extract_bigrams,
    extract_unigrams,
    is_valid_word,
    maxent_fit,
    maxent_predict,
    maxent_prob,
    maxent_train,
    nb_predict,
    nb_train,
    normalize_tweet,
    normalize_word,
    predict,
    rank_frequency,
    replace_emoticons,
    replace_hashtags,
    replace_urls,
    replace_user_mentions,
    remove_retweet_markers,
    serialize_model,
    split_dataset,
    train_model,
    vectorize,
)

__all__ = [name for name in dir() if not name.startswith("_")]
