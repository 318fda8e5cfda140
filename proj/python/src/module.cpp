#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "tweetiment/baseline.hpp"
#include "tweetiment/dataset.hpp"
#include "tweetiment/error.hpp"
#include "tweetiment/eval.hpp"
#include "tweetiment/features.hpp"
#include "tweetiment/maxent.hpp"
#include "tweetiment/model_io.hpp"
#include "tweetiment/naive_bayes.hpp"
#include "tweetiment/normalizer.hpp"
#include "tweetiment/pipeline.hpp"

namespace py = pybind11;
using namespace tweetiment;

namespace {

using Tokens = std::vector<std::string>;

NormalizedTweet as_tweet(Tokens tokens) { return NormalizedTweet{std::move(tokens)}; }

std::vector<NormalizedTweet> as_tweets(const std::vector<Tokens>& corpus) {
  std::vector<NormalizedTweet> out;
  out.reserve(corpus.size());
  for (const auto& t : corpus) out.push_back({t});
  return out;
}

std::vector<TrainingExample> as_examples(const std::vector<FeatureVector>& docs,
                                         const std::vector<Sentiment>& labels) {
  if (docs.size() != labels.size()) {
    throw Error(ErrorCode::length_mismatch, "documents and labels differ in length");
  }
  std::vector<TrainingExample> out;
  out.reserve(docs.size());
  for (std::size_t k = 0; k < docs.size(); ++k) out.push_back({docs[k], labels[k]});
  return out;
}

py::dict summary_dict(const CountSummary& s) {
  py::dict d;
  d["total"] = s.total;
  d["average"] = s.average;
  d["maximum"] = s.maximum;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "tweetiment C++ core";

  static py::exception<Error> error_type(m, "TweetimentError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error_type, e.what());
    }
  });

  py::enum_<Sentiment>(m, "Sentiment")
      .value("negative", Sentiment::negative)
      .value("positive", Sentiment::positive);

  py::enum_<FeatureMode>(m, "FeatureMode")
      .value("presence", FeatureMode::presence)
      .value("frequency", FeatureMode::frequency);

  py::enum_<TrainingAlgorithm>(m, "TrainingAlgorithm")
      .value("gis", TrainingAlgorithm::gis)
      .value("iis", TrainingAlgorithm::iis);

  // normalizer
  py::class_<EmoticonTable>(m, "EmoticonTable")
      .def(py::init<std::vector<std::string>, std::vector<std::string>>(), py::arg("positive"),
           py::arg("negative"))
      .def_static("defaults", &EmoticonTable::defaults, py::return_value_policy::reference)
      .def_static("from_files", &EmoticonTable::from_files)
      .def_property_readonly("positive_forms", &EmoticonTable::positive_forms)
      .def_property_readonly("negative_forms", &EmoticonTable::negative_forms);

  m.def(
      "normalize_tweet",
      [](std::string_view raw, const EmoticonTable* emoticons) {
        return normalize_tweet(raw, emoticons ? *emoticons : EmoticonTable::defaults()).tokens;
      },
      py::arg("raw"), py::arg("emoticons") = nullptr,
      "Normalize a raw tweet into its token list.");
  m.def("normalize_word", &normalize_word);
  m.def("is_valid_word", &is_valid_word);
  m.def("replace_urls", &replace_urls);
  m.def("replace_user_mentions", &replace_user_mentions);
  m.def("replace_hashtags", &replace_hashtags);
  m.def("remove_retweet_markers", &remove_retweet_markers);
  m.def(
      "replace_emoticons",
      [](std::string_view text, const EmoticonTable* emoticons) {
        return replace_emoticons(text, emoticons ? *emoticons : EmoticonTable::defaults());
      },
      py::arg("text"), py::arg("emoticons") = nullptr);

  // features
  m.def("extract_unigrams", [](Tokens t) { return extract_unigrams(as_tweet(std::move(t))); });
  m.def("extract_bigrams", [](Tokens t) { return extract_bigrams(as_tweet(std::move(t))); });

  py::class_<Vocabulary>(m, "Vocabulary")
      .def_property_readonly("unigram_budget", &Vocabulary::unigram_budget)
      .def_property_readonly("bigram_budget", &Vocabulary::bigram_budget)
      .def_property_readonly("unigram_count", &Vocabulary::unigram_count)
      .def_property_readonly("bigram_count", &Vocabulary::bigram_count)
      .def("__len__", &Vocabulary::size)
      .def("unigram_index", &Vocabulary::unigram_index)
      .def("bigram_index", &Vocabulary::bigram_index)
      .def("terms", [](const Vocabulary& v) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& t : v.terms()) out.emplace_back(t.kind == TermKind::unigram ? "U" : "B", t.text);
        return out;
      });

  m.def(
      "build_vocabulary",
      [](const std::vector<Tokens>& corpus, std::size_t unigrams, std::size_t bigrams) {
        return build_vocabulary(as_tweets(corpus), unigrams, bigrams);
      },
      py::arg("corpus"), py::arg("unigrams") = kDefaultUnigramBudget,
      py::arg("bigrams") = kDefaultBigramBudget);

  m.def("rank_frequency", [](const std::vector<Tokens>& corpus, bool bigrams) {
    const auto counts = count_ngrams(as_tweets(corpus));
    std::vector<std::tuple<std::size_t, std::string, std::uint64_t>> out;
    for (auto& r : rank_frequency(bigrams ? counts.bigrams : counts.unigrams)) {
      out.emplace_back(r.rank, std::move(r.term), r.count);
    }
    return out;
  }, py::arg("corpus"), py::arg("bigrams") = false);

  py::class_<FeatureVector>(m, "FeatureVector")
      .def(py::init([](FeatureMode mode, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& entries) {
             FeatureVector fv;
             fv.mode = mode;
             for (const auto& [i, v] : entries) fv.entries.push_back({i, v});
             std::sort(fv.entries.begin(), fv.entries.end(),
                       [](const auto& a, const auto& b) { return a.index < b.index; });
             return fv;
           }),
           py::arg("mode"), py::arg("entries"))
      .def_readonly("mode", &FeatureVector::mode)
      .def_property_readonly("entries", [](const FeatureVector& fv) {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
        for (const auto& e : fv.entries) out.emplace_back(e.index, e.value);
        return out;
      })
      .def("__eq__", [](const FeatureVector& a, const FeatureVector& b) { return a == b; });

  m.def("vectorize", [](Tokens t, const Vocabulary& vocab, FeatureMode mode) {
    return vectorize(as_tweet(std::move(t)), vocab, mode);
  });

  // models
  py::class_<OpinionLexicon>(m, "OpinionLexicon")
      .def(py::init<const std::vector<std::string>&, const std::vector<std::string>&>(),
           py::arg("positive"), py::arg("negative"))
      .def_static("from_files", &OpinionLexicon::from_files)
      .def("is_positive", &OpinionLexicon::is_positive)
      .def("is_negative", &OpinionLexicon::is_negative)
      .def("__len__", &OpinionLexicon::size);

  m.def("baseline_classify", [](Tokens t, const OpinionLexicon& lex) {
    return baseline_classify(as_tweet(std::move(t)), lex);
  });

  py::class_<NaiveBayesModel>(m, "NaiveBayesModel")
      .def_readonly("class_log_prior", &NaiveBayesModel::class_log_prior)
      .def_readonly("feature_log_likelihood", &NaiveBayesModel::feature_log_likelihood)
      .def_readonly("alpha", &NaiveBayesModel::alpha)
      .def_readonly("mode", &NaiveBayesModel::mode)
      .def_readonly("vocab_size", &NaiveBayesModel::vocab_size);

  m.def(
      "nb_train",
      [](const std::vector<FeatureVector>& docs, const std::vector<Sentiment>& labels,
         std::size_t vocab_size, double alpha) {
        return nb_train(as_examples(docs, labels), vocab_size, alpha);
      },
      py::arg("docs"), py::arg("labels"), py::arg("vocab_size"), py::arg("alpha") = kDefaultAlpha);
  m.def("nb_predict", [](const NaiveBayesModel& model, const FeatureVector& doc) {
    const auto p = nb_predict(model, doc);
    return std::make_pair(p.label, p.log_score);
  });

  py::class_<TrainerConfig>(m, "TrainerConfig")
      .def(py::init([](TrainingAlgorithm algorithm, std::size_t max_iterations, double tol) {
             return TrainerConfig{algorithm, max_iterations, tol};
           }),
           py::arg("algorithm") = TrainingAlgorithm::iis, py::arg("max_iterations") = 100,
           py::arg("ll_tolerance") = 1e-6)
      .def_readwrite("algorithm", &TrainerConfig::algorithm)
      .def_readwrite("max_iterations", &TrainerConfig::max_iterations)
      .def_readwrite("ll_tolerance", &TrainerConfig::ll_tolerance);

  py::class_<MaxEntModel>(m, "MaxEntModel")
      .def(py::init<std::size_t, std::vector<double>>(), py::arg("vocab_size"), py::arg("weights"))
      .def_property_readonly("vocab_size", &MaxEntModel::vocab_size)
      .def_property_readonly("weights", [](const MaxEntModel& me) { return me.weights(); })
      .def("weight", &MaxEntModel::weight);

  m.def(
      "maxent_train",
      [](const std::vector<FeatureVector>& docs, const std::vector<Sentiment>& labels,
         std::size_t vocab_size, const TrainerConfig& config) {
        return maxent_train(as_examples(docs, labels), vocab_size, config);
      },
      py::arg("docs"), py::arg("labels"), py::arg("vocab_size"), py::arg("config") = TrainerConfig{});
  m.def(
      "maxent_fit",
      [](const std::vector<FeatureVector>& docs, const std::vector<Sentiment>& labels,
         std::size_t vocab_size, const TrainerConfig& config) {
        auto fit = maxent_fit(as_examples(docs, labels), vocab_size, config);
        return py::make_tuple(std::move(fit.model), fit.log_likelihood, fit.converged);
      },
      py::arg("docs"), py::arg("labels"), py::arg("vocab_size"), py::arg("config") = TrainerConfig{});
  m.def("maxent_prob", &maxent_prob);
  m.def("maxent_predict", &maxent_predict);

  // eval
  py::class_<EvaluationReport>(m, "EvaluationReport")
      .def_readonly("model_name", &EvaluationReport::model_name)
      .def_readonly("n_docs", &EvaluationReport::n_docs)
      .def_readonly("confusion", &EvaluationReport::confusion)
      .def_readonly("accuracy", &EvaluationReport::accuracy)
      .def_readonly("baseline_accuracy", &EvaluationReport::baseline_accuracy);

  m.def(
      "evaluate",
      [](const std::vector<Sentiment>& predictions, const std::vector<Sentiment>& gold,
         std::string name) { return evaluate(predictions, gold, std::move(name)); },
      py::arg("predictions"), py::arg("gold"), py::arg("model_name") = "");

  m.def(
      "corpus_stats",
      [](const std::vector<Tokens>& corpus, std::optional<std::vector<Sentiment>> labels) {
        if (labels && labels->size() != corpus.size()) {
          throw Error(ErrorCode::length_mismatch, "tweets and labels differ in length");
        }
        CorpusStatsAccumulator acc;
        for (std::size_t k = 0; k < corpus.size(); ++k) {
          acc.add({corpus[k]}, labels ? std::optional((*labels)[k]) : std::nullopt);
        }
        const auto s = acc.finish();
        py::dict d;
        d["n_tweets"] = s.n_tweets;
        d["n_positive"] = s.n_positive;
        d["n_negative"] = s.n_negative;
        d["user_mentions"] = summary_dict(s.user_mentions);
        auto emo = summary_dict(s.emoticons);
        emo["positive"] = s.emoticons_positive;
        emo["negative"] = s.emoticons_negative;
        d["emoticons"] = emo;
        d["urls"] = summary_dict(s.urls);
        auto uni = summary_dict(s.unigrams);
        uni["unique"] = s.unigrams_unique;
        d["unigrams"] = uni;
        py::dict bi;
        bi["total"] = s.bigrams_total;
        bi["unique"] = s.bigrams_unique;
        bi["average"] = s.bigrams_average;
        d["bigrams"] = bi;
        return d;
      },
      py::arg("corpus"), py::arg("labels") = std::nullopt);

  // io / pipeline
  py::class_<ModelArtifact>(m, "ModelArtifact")
      .def_property_readonly("kind", [](const ModelArtifact& a) { return std::string(to_string(a.kind())); })
      .def_readonly("vocabulary", &ModelArtifact::vocabulary)
      .def_property_readonly("n_docs", [](const ModelArtifact& a) { return a.metadata.n_docs; })
      .def("__eq__", [](const ModelArtifact& a, const ModelArtifact& b) { return a == b; });

  m.def(
      "train_model",
      [](const std::vector<Tokens>& corpus, const std::vector<Sentiment>& labels,
         const std::string& kind, FeatureMode mode, std::size_t unigrams, std::size_t bigrams,
         double alpha, const TrainerConfig& trainer, std::optional<OpinionLexicon> lexicon) {
        TrainOptions opts;
        const auto k = parse_model_kind(kind == "nb" ? "naive_bayes" : kind);
        if (!k) throw Error(ErrorCode::invalid_argument, "unknown model kind '" + kind + "'");
        opts.kind = *k;
        opts.mode = mode;
        opts.unigrams = unigrams;
        opts.bigrams = bigrams;
        opts.alpha = alpha;
        opts.trainer = trainer;
        opts.lexicon = std::move(lexicon);
        return train_model(as_tweets(corpus), labels, opts);
      },
      py::arg("corpus"), py::arg("labels"), py::arg("kind") = "naive_bayes",
      py::arg("mode") = FeatureMode::presence, py::arg("unigrams") = kDefaultUnigramBudget,
      py::arg("bigrams") = kDefaultBigramBudget, py::arg("alpha") = kDefaultAlpha,
      py::arg("trainer") = TrainerConfig{}, py::arg("lexicon") = std::nullopt);
  m.def("predict", [](const ModelArtifact& model, Tokens t) {
    return predict(model, as_tweet(std::move(t)));
  });
  m.def("serialize_model", py::overload_cast<const ModelArtifact&>(&serialize_model));
  m.def("deserialize_model", py::overload_cast<const std::string&>(&deserialize_model));

  m.def(
      "split_dataset",
      [](std::vector<py::object> records, double ratio, std::uint64_t seed) {
        return split_dataset(std::move(records), ratio, seed);
      },
      py::arg("records"), py::arg("ratio") = kDefaultSplitRatio, py::arg("seed") = kDefaultSeed);
}
