// tweetiment: batch command line front end for the sentiment pipeline.
//
//   preprocess  raw CSV -> normalized token CSV
//   stats       corpus statistics and rank-frequency exports
//   train       fit a naive_bayes / maxent / baseline model
//   predict     model + unlabeled CSV -> tweet_id,sentiment CSV
//   eval        model + labeled CSV -> accuracy report
//   split       seeded train/test split of a labeled CSV
//
// Exit codes: 0 success, 2 usage error, 3 data error, 4 model-format error.

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tweetiment/config.hpp"
#include "tweetiment/dataset.hpp"
#include "tweetiment/error.hpp"
#include "tweetiment/eval.hpp"
#include "tweetiment/model_io.hpp"
#include "tweetiment/pipeline.hpp"

namespace {

using namespace tweetiment;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitModel = 4;

struct CommonOptions {
  std::string config_path;
  std::string emoticons_pos;
  std::string emoticons_neg;
  bool lenient = false;
};

struct Labeled {
  std::vector<std::int64_t> ids;
  std::vector<NormalizedTweet> tweets;
  std::vector<Sentiment> labels;
};

struct Unlabeled {
  std::vector<std::int64_t> ids;
  std::vector<NormalizedTweet> tweets;
};

[[noreturn]] void usage_error(const std::string& what) {
  throw Error(ErrorCode::invalid_argument, what);
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io_failure, "cannot open " + path);
  return in;
}

// Returns stdout for "" or "-".
std::ostream& open_output(const std::string& path, std::unique_ptr<std::ofstream>& holder) {
  if (path.empty() || path == "-") return std::cout;
  holder = std::make_unique<std::ofstream>(path);
  if (!*holder) throw Error(ErrorCode::io_failure, "cannot write " + path);
  return *holder;
}

EmoticonTable emoticon_table(const CommonOptions& common) {
  if (common.emoticons_pos.empty() != common.emoticons_neg.empty()) {
    usage_error("--emoticons-pos and --emoticons-neg must be given together");
  }
  if (common.emoticons_pos.empty()) return EmoticonTable::defaults();
  return EmoticonTable::from_files(common.emoticons_pos, common.emoticons_neg);
}

NormalizedTweet to_tweet(const std::string& text, bool normalized, const EmoticonTable& emoticons) {
  return normalized ? split_tokens(text) : normalize_tweet(text, emoticons);
}

Labeled read_labeled(const std::string& path, bool normalized, const CommonOptions& common) {
  auto in = open_input(path);
  const auto records = parse_labeled_csv(in, CsvOptions{common.lenient});
  const auto emoticons = emoticon_table(common);
  Labeled out;
  for (const auto& r : records) {
    out.ids.push_back(r.tweet_id);
    out.tweets.push_back(to_tweet(r.text, normalized, emoticons));
    out.labels.push_back(r.sentiment);
  }
  return out;
}

Unlabeled read_unlabeled(const std::string& path, bool normalized, const CommonOptions& common) {
  auto in = open_input(path);
  const auto records = parse_unlabeled_csv(in, CsvOptions{common.lenient});
  const auto emoticons = emoticon_table(common);
  Unlabeled out;
  for (const auto& r : records) {
    out.ids.push_back(r.tweet_id);
    out.tweets.push_back(to_tweet(r.text, normalized, emoticons));
  }
  return out;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

OpinionLexicon load_lexicon(const std::vector<std::string>& files) {
  if (files.size() != 2) usage_error("a lexicon needs <positive-file> <negative-file>");
  return OpinionLexicon::from_files(files[0], files[1]);
}

// Fills options the command line left unset from the config file. Keys are
// the long option names ("max-iter" or "max_iter").
void apply_config(CLI::App& app, const Config& config) {
  for (auto* opt : app.get_options()) {
    if (opt->count() > 0 || opt->get_lnames().empty()) continue;
    const auto& name = opt->get_lnames().front();
    if (name == "help" || name == "config") continue;
    const auto value = config.get(name);
    if (!value) continue;
    if (opt->get_type_size() == 0) {
      // flag
      if (*value == "true" || *value == "1" || *value == "yes") opt->add_result("true");
    } else if (opt->get_expected_max() > 1) {
      std::istringstream ss(*value);
      for (std::string part; ss >> part;) opt->add_result(part);
    } else {
      opt->add_result(*value);
    }
    opt->run_callback();
  }
}

int run(int argc, char** argv) {
  CLI::App app{"tweetiment: tweet sentiment classification toolkit"};
  app.require_subcommand(1);

  CommonOptions common;
  app.add_option("--config", common.config_path, "key = value config file")
      ->envname(kConfigEnvVar);
  app.add_option("--emoticons-pos", common.emoticons_pos, "positive emoticon list");
  app.add_option("--emoticons-neg", common.emoticons_neg, "negative emoticon list");
  app.add_flag("--lenient", common.lenient, "line-oriented CSV: tweet is the rest of the line");

  // preprocess
  std::string pre_in, pre_out;
  bool pre_unlabeled = false;
  auto* preprocess = app.add_subcommand("preprocess", "normalize a raw tweet CSV");
  preprocess->add_option("-i,--input", pre_in, "raw CSV")->required();
  preprocess->add_option("-o,--output", pre_out, "normalized CSV (default stdout)");
  preprocess->add_flag("--unlabeled", pre_unlabeled, "input is tweet_id,tweet");

  // stats
  std::string st_in, st_uni, st_bi, st_csv;
  bool st_unlabeled = false, st_normalized = false;
  auto* stats = app.add_subcommand("stats", "corpus statistics table");
  stats->add_option("-i,--input", st_in, "CSV input")->required();
  stats->add_flag("--unlabeled", st_unlabeled, "input is tweet_id,tweet");
  stats->add_flag("--normalized", st_normalized, "input holds preprocessed tokens");
  stats->add_option("--rank-unigrams", st_uni, "write unigram rank,term,count CSV");
  stats->add_option("--rank-bigrams", st_bi, "write bigram rank,term,count CSV");
  stats->add_option("--report-csv", st_csv, "write statistics as CSV");

  // train
  std::string tr_in, tr_out, tr_model = "nb", tr_features = "presence", tr_trainer = "iis";
  std::size_t tr_unigrams = kDefaultUnigramBudget, tr_bigrams = kDefaultBigramBudget;
  std::size_t tr_max_iter = TrainerConfig{}.max_iterations;
  double tr_tol = TrainerConfig{}.ll_tolerance, tr_alpha = kDefaultAlpha;
  std::vector<std::string> tr_lexicon;
  bool tr_normalized = false;
  auto* train = app.add_subcommand("train", "train a classifier");
  train->add_option("-i,--input", tr_in, "labeled CSV")->required();
  train->add_option("-o,--output", tr_out, "model file")->required();
  train->add_option("--model", tr_model, "nb | maxent | baseline");
  train->add_option("--features", tr_features, "presence | frequency");
  train->add_option("--unigrams", tr_unigrams, "unigram vocabulary budget");
  train->add_option("--bigrams", tr_bigrams, "bigram vocabulary budget");
  train->add_option("--trainer", tr_trainer, "gis | iis");
  train->add_option("--max-iter", tr_max_iter, "maximum scaling iterations");
  train->add_option("--tol", tr_tol, "relative log-likelihood tolerance");
  train->add_option("--alpha", tr_alpha, "naive bayes smoothing");
  train->add_option("--lexicon", tr_lexicon, "<positive> <negative> (baseline)")->expected(2);
  train->add_flag("--normalized", tr_normalized, "input holds preprocessed tokens");

  // predict
  std::string pr_model, pr_in, pr_out;
  bool pr_normalized = false;
  auto* predict_cmd = app.add_subcommand("predict", "classify an unlabeled CSV");
  predict_cmd->add_option("-m,--model-file", pr_model, "model file")->required();
  predict_cmd->add_option("-i,--input", pr_in, "unlabeled CSV")->required();
  predict_cmd->add_option("-o,--output", pr_out, "predictions CSV (default stdout)");
  predict_cmd->add_flag("--normalized", pr_normalized, "input holds preprocessed tokens");

  // eval
  std::string ev_model, ev_in, ev_csv;
  std::vector<std::string> ev_lexicon;
  bool ev_normalized = false;
  auto* eval = app.add_subcommand("eval", "score a model on a labeled CSV");
  eval->add_option("-m,--model-file", ev_model, "model file")->required();
  eval->add_option("-i,--input", ev_in, "labeled CSV")->required();
  eval->add_option("--baseline-lexicon", ev_lexicon, "<positive> <negative>")->expected(2);
  eval->add_option("--report-csv", ev_csv, "write the report as CSV");
  eval->add_flag("--normalized", ev_normalized, "input holds preprocessed tokens");

  // split
  std::string sp_in, sp_train, sp_test;
  double sp_ratio = kDefaultSplitRatio;
  std::uint64_t sp_seed = kDefaultSeed;
  bool sp_unlabeled = false;
  auto* split = app.add_subcommand("split", "seeded train/test split");
  split->add_option("-i,--input", sp_in, "CSV input")->required();
  split->add_option("--train-out", sp_train, "training CSV")->required();
  split->add_option("--test-out", sp_test, "test CSV")->required();
  split->add_option("--ratio", sp_ratio, "training fraction");
  split->add_option("--seed", sp_seed, "shuffle seed");
  split->add_flag("--unlabeled", sp_unlabeled, "input is tweet_id,tweet");

  try {
    app.parse(argc, argv);
    if (!common.config_path.empty()) {
      const auto config = Config::load(common.config_path);
      apply_config(app, config);
      for (auto* sub : app.get_subcommands()) apply_config(*sub, config);
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  if (preprocess->parsed()) {
    std::unique_ptr<std::ofstream> holder;
    auto& out = open_output(pre_out, holder);
    if (pre_unlabeled) {
      const auto data = read_unlabeled(pre_in, false, common);
      out << "tweet_id,tweet\n";
      for (std::size_t k = 0; k < data.ids.size(); ++k) {
        out << data.ids[k] << ',' << join_tokens(data.tweets[k]) << '\n';
      }
    } else {
      const auto data = read_labeled(pre_in, false, common);
      out << "tweet_id,sentiment,tweet\n";
      for (std::size_t k = 0; k < data.ids.size(); ++k) {
        out << data.ids[k] << ',' << to_int(data.labels[k]) << ',' << join_tokens(data.tweets[k])
            << '\n';
      }
    }
  } else if (stats->parsed()) {
    CorpusStatsAccumulator acc;
    if (st_unlabeled) {
      for (const auto& t : read_unlabeled(st_in, st_normalized, common).tweets) {
        acc.add(t, std::nullopt);
      }
    } else {
      const auto data = read_labeled(st_in, st_normalized, common);
      for (std::size_t k = 0; k < data.tweets.size(); ++k) acc.add(data.tweets[k], data.labels[k]);
    }
    const auto result = acc.finish();
    print_corpus_stats(std::cout, result);
    std::unique_ptr<std::ofstream> holder;
    if (!st_csv.empty()) write_corpus_stats_csv(open_output(st_csv, holder), result);
    if (!st_uni.empty()) {
      write_rank_frequency_csv(open_output(st_uni, holder), rank_frequency(acc.ngrams().unigrams));
    }
    if (!st_bi.empty()) {
      write_rank_frequency_csv(open_output(st_bi, holder), rank_frequency(acc.ngrams().bigrams));
    }
  } else if (train->parsed()) {
    TrainOptions opts;
    if (tr_model == "nb" || tr_model == "naive_bayes") {
      opts.kind = ModelKind::naive_bayes;
    } else if (tr_model == "maxent") {
      opts.kind = ModelKind::maxent;
    } else if (tr_model == "baseline") {
      opts.kind = ModelKind::baseline;
      opts.lexicon = load_lexicon(tr_lexicon);
    } else {
      usage_error("unknown --model '" + tr_model + "'");
    }
    const auto mode = parse_feature_mode(tr_features);
    if (!mode) usage_error("unknown --features '" + tr_features + "'");
    const auto algorithm = parse_training_algorithm(tr_trainer);
    if (!algorithm) usage_error("unknown --trainer '" + tr_trainer + "'");
    opts.mode = *mode;
    opts.unigrams = tr_unigrams;
    opts.bigrams = tr_bigrams;
    opts.alpha = tr_alpha;
    opts.trainer = TrainerConfig{*algorithm, tr_max_iter, tr_tol};
    opts.trainer.validate();
    opts.timestamp = utc_timestamp();

    const auto data = read_labeled(tr_in, tr_normalized, common);
    const auto model = train_model(data.tweets, data.labels, opts);
    save_model(tr_out, model);
    std::cerr << "trained " << to_string(model.kind()) << " on " << data.tweets.size()
              << " tweets, vocabulary " << model.vocabulary.size() << " terms\n";
  } else if (predict_cmd->parsed()) {
    const auto model = load_model(pr_model);
    const auto data = read_unlabeled(pr_in, pr_normalized, common);
    std::unique_ptr<std::ofstream> holder;
    auto& out = open_output(pr_out, holder);
    out << "tweet_id,sentiment\n";
    const auto labels = predict_all(model, data.tweets);
    for (std::size_t k = 0; k < labels.size(); ++k) {
      out << data.ids[k] << ',' << to_int(labels[k]) << '\n';
    }
  } else if (eval->parsed()) {
    const auto model = load_model(ev_model);
    const auto data = read_labeled(ev_in, ev_normalized, common);
    const auto predictions = predict_all(model, data.tweets);
    const std::string name(to_string(model.kind()));
    const auto report = ev_lexicon.empty()
                            ? evaluate(predictions, data.labels, name)
                            : baseline_report(data.tweets, data.labels, load_lexicon(ev_lexicon),
                                              predictions, name);
    print_report(std::cout, report);
    std::unique_ptr<std::ofstream> holder;
    if (!ev_csv.empty()) write_report_csv(open_output(ev_csv, holder), report);
  } else if (split->parsed()) {
    if (!(sp_ratio > 0.0 && sp_ratio < 1.0)) usage_error("--ratio must lie strictly between 0 and 1");
    auto in = open_input(sp_in);
    std::unique_ptr<std::ofstream> train_holder, test_holder;
    if (sp_unlabeled) {
      auto [tr, te] = split_dataset(parse_unlabeled_csv(in, CsvOptions{common.lenient}), sp_ratio,
                                    sp_seed);
      write_unlabeled_csv(open_output(sp_train, train_holder), tr);
      write_unlabeled_csv(open_output(sp_test, test_holder), te);
    } else {
      auto [tr, te] = split_dataset(parse_labeled_csv(in, CsvOptions{common.lenient}), sp_ratio,
                                    sp_seed);
      write_labeled_csv(open_output(sp_train, train_holder), tr);
      write_labeled_csv(open_output(sp_test, test_holder), te);
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "tweetiment: " << e.what() << '\n';
    switch (e.category()) {
      case ErrorCategory::usage: return kExitUsage;
      case ErrorCategory::data: return kExitData;
      case ErrorCategory::model_format: return kExitModel;
    }
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "tweetiment: " << e.what() << '\n';
    return kExitData;
  }
}
