#include "tweetiment/pipeline.hpp"

#include "tweetiment/error.hpp"

namespace tweetiment {

ModelArtifact train_model(std::span<const NormalizedTweet> tweets,
                          std::span<const Sentiment> labels, const TrainOptions& options) {
  if (tweets.size() != labels.size()) {
    throw Error(ErrorCode::length_mismatch, "tweets and labels differ in length");
  }
  if (tweets.empty()) throw Error(ErrorCode::no_training_data, "empty training corpus");

  ModelArtifact artifact;
  artifact.metadata.n_docs = tweets.size();
  artifact.metadata.mode = options.mode;
  artifact.metadata.timestamp = options.timestamp;

  if (options.kind == ModelKind::baseline) {
    if (!options.lexicon) {
      throw Error(ErrorCode::invalid_argument, "the baseline needs an opinion lexicon");
    }
    artifact.parameters = *options.lexicon;
    return artifact;
  }

  artifact.vocabulary = build_vocabulary(tweets, options.unigrams, options.bigrams);
  std::vector<TrainingExample> corpus;
  corpus.reserve(tweets.size());
  for (std::size_t k = 0; k < tweets.size(); ++k) {
    corpus.push_back({vectorize(tweets[k], artifact.vocabulary, options.mode), labels[k]});
  }
  const auto v = artifact.vocabulary.size();
  if (options.kind == ModelKind::naive_bayes) {
    artifact.parameters = nb_train(corpus, v, options.alpha);
  } else {
    artifact.parameters = maxent_train(corpus, v, options.trainer);
    artifact.metadata.trainer = options.trainer;
  }
  return artifact;
}

Sentiment predict(const ModelArtifact& model, const NormalizedTweet& tweet) {
  return std::visit(
      [&](const auto& params) -> Sentiment {
        using P = std::decay_t<decltype(params)>;
        if constexpr (std::is_same_v<P, OpinionLexicon>) {
          return baseline_classify(tweet, params);
        } else {
          const auto doc = vectorize(tweet, model.vocabulary, model.metadata.mode);
          if constexpr (std::is_same_v<P, NaiveBayesModel>) {
            return nb_predict(params, doc).label;
          } else {
            return maxent_predict(params, doc);
          }
        }
      },
      model.parameters);
}

std::vector<Sentiment> predict_all(const ModelArtifact& model,
                                   std::span<const NormalizedTweet> tweets) {
  std::vector<Sentiment> out;
  out.reserve(tweets.size());
  for (const auto& t : tweets) out.push_back(predict(model, t));
  return out;
}

}  // namespace tweetiment
