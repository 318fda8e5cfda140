#include "tweetiment/model_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "tweetiment/error.hpp"

namespace tweetiment {
namespace {

constexpr std::string_view kModelMagic = "tweetiment-model";

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::malformed_model, what);
}

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::string next(std::string_view what) {
    std::string line;
    if (!std::getline(in_, line)) {
      throw Error(ErrorCode::truncated_model, "model ends before " + std::string(what));
    }
    // every line is written with a newline, so a missing one means the file was cut
    if (in_.eof()) throw Error(ErrorCode::truncated_model, "model ends inside " + std::string(what));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
  }

  std::vector<std::string> words(std::string_view what) {
    std::istringstream ss(next(what));
    std::vector<std::string> out;
    for (std::string w; ss >> w;) out.push_back(std::move(w));
    return out;
  }

  // "<key> <values...>"; returns the values.
  std::vector<std::string> keyed(std::string_view key, std::size_t n_values) {
    auto w = words(key);
    if (w.empty() || w.front() != key || w.size() != n_values + 1) {
      malformed("expected '" + std::string(key) + "' line with " + std::to_string(n_values) +
                " value(s)");
    }
    w.erase(w.begin());
    return w;
  }

  std::istream& stream() { return in_; }

 private:
  std::istream& in_;
};

double parse_double(const std::string& s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) malformed("bad number '" + s + "'");
  return v;
}

std::size_t parse_size(const std::string& s) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) malformed("bad count '" + s + "'");
  return v;
}

void write_parameters(std::ostream& out, const NaiveBayesModel& nb) {
  out << "alpha " << format_double(nb.alpha) << '\n'
      << "vocab_size " << nb.vocab_size << '\n'
      << "prior " << format_double(nb.class_log_prior[0]) << ' '
      << format_double(nb.class_log_prior[1]) << '\n';
  for (std::size_t i = 0; i < nb.vocab_size; ++i) {
    out << i << ' ' << format_double(nb.feature_log_likelihood[0][i]) << ' '
        << format_double(nb.feature_log_likelihood[1][i]) << '\n';
  }
}

void write_parameters(std::ostream& out, const MaxEntModel& me) {
  out << "vocab_size " << me.vocab_size() << '\n';
  for (std::size_t i = 0; i < me.vocab_size(); ++i) {
    out << i << ' ' << format_double(me.weight(i, Sentiment::negative)) << ' '
        << format_double(me.weight(i, Sentiment::positive)) << '\n';
  }
}

void write_parameters(std::ostream& out, const OpinionLexicon& lex) {
  for (const auto& [label, words] :
       {std::pair{"positive", lex.positive_words()}, std::pair{"negative", lex.negative_words()}}) {
    out << label << ' ' << words.size() << '\n';
    for (const auto& w : words) out << w << '\n';
  }
}

// Reads "<i> <neg> <pos>" rows.
std::vector<std::array<double, 2>> read_rows(LineReader& r, std::size_t n) {
  std::vector<std::array<double, 2>> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto w = r.words("parameter rows");
    if (w.size() != 3 || parse_size(w[0]) != i) malformed("bad parameter row " + std::to_string(i));
    rows[i] = {parse_double(w[1]), parse_double(w[2])};
  }
  return rows;
}

NaiveBayesModel read_naive_bayes(LineReader& r, FeatureMode mode) {
  NaiveBayesModel nb;
  nb.mode = mode;
  nb.alpha = parse_double(r.keyed("alpha", 1)[0]);
  nb.vocab_size = parse_size(r.keyed("vocab_size", 1)[0]);
  const auto prior = r.keyed("prior", 2);
  nb.class_log_prior = {parse_double(prior[0]), parse_double(prior[1])};
  for (auto& ll : nb.feature_log_likelihood) ll.resize(nb.vocab_size);
  const auto rows = read_rows(r, nb.vocab_size);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    nb.feature_log_likelihood[0][i] = rows[i][0];
    nb.feature_log_likelihood[1][i] = rows[i][1];
  }
  return nb;
}

MaxEntModel read_maxent(LineReader& r) {
  const auto vocab_size = parse_size(r.keyed("vocab_size", 1)[0]);
  std::vector<double> weights;
  weights.reserve(vocab_size * kNumClasses);
  for (const auto& row : read_rows(r, vocab_size)) {
    weights.push_back(row[0]);
    weights.push_back(row[1]);
  }
  try {
    return MaxEntModel(vocab_size, std::move(weights));
  } catch (const Error& e) {
    malformed(e.what());
  }
}

OpinionLexicon read_lexicon(LineReader& r) {
  std::array<std::vector<std::string>, 2> lists;
  for (std::size_t k = 0; k < 2; ++k) {
    const auto n = parse_size(r.keyed(k == 0 ? "positive" : "negative", 1)[0]);
    for (std::size_t i = 0; i < n; ++i) lists[k].push_back(r.next("lexicon words"));
  }
  try {
    return OpinionLexicon(lists[0], lists[1]);
  } catch (const Error& e) {
    malformed(e.what());
  }
}

}  // namespace

std::string_view to_string(ModelKind kind) noexcept {
  switch (kind) {
    case ModelKind::naive_bayes: return "naive_bayes";
    case ModelKind::maxent: return "maxent";
    case ModelKind::baseline: return "baseline";
  }
  return {};
}

std::optional<ModelKind> parse_model_kind(std::string_view name) noexcept {
  if (name == "naive_bayes") return ModelKind::naive_bayes;
  if (name == "maxent") return ModelKind::maxent;
  if (name == "baseline") return ModelKind::baseline;
  return std::nullopt;
}

void serialize_model(std::ostream& out, const ModelArtifact& model) {
  const auto& meta = model.metadata;
  out << kModelMagic << " v" << model.format_version << ' ' << to_string(model.kind()) << '\n';
  out << "n_docs " << meta.n_docs << '\n';
  out << "features " << to_string(meta.mode) << '\n';
  if (meta.trainer) {
    out << "trainer " << to_string(meta.trainer->algorithm) << ' ' << meta.trainer->max_iterations
        << ' ' << format_double(meta.trainer->ll_tolerance) << '\n';
  } else {
    out << "trainer none\n";
  }
  out << "timestamp " << (meta.timestamp.empty() ? "-" : meta.timestamp) << '\n';
  out << "vocabulary " << model.vocabulary.size() << '\n';
  write_vocabulary(out, model.vocabulary);
  out << "parameters\n";
  std::visit([&](const auto& p) { write_parameters(out, p); }, model.parameters);
  out << "end\n";
}

ModelArtifact deserialize_model(std::istream& in) {
  LineReader r(in);
  ModelArtifact model;

  const auto header = r.words("header");
  if (header.empty()) throw Error(ErrorCode::truncated_model, "empty model");
  if (header.front() != kModelMagic || header.size() != 3) {
    malformed("not a tweetiment model header");
  }
  if (header[1] != "v" + std::to_string(kModelFormatVersion)) {
    throw Error(ErrorCode::unsupported_version, "model format " + header[1]);
  }
  const auto kind = parse_model_kind(header[2]);
  if (!kind) throw Error(ErrorCode::unknown_kind, "'" + header[2] + "'");

  auto& meta = model.metadata;
  meta.n_docs = parse_size(r.keyed("n_docs", 1)[0]);
  const auto mode = parse_feature_mode(r.keyed("features", 1)[0]);
  if (!mode) malformed("unknown feature mode");
  meta.mode = *mode;

  const auto trainer = r.words("trainer");
  if (trainer.size() == 2 && trainer[0] == "trainer" && trainer[1] == "none") {
    meta.trainer.reset();
  } else if (trainer.size() == 4 && trainer[0] == "trainer") {
    const auto algorithm = parse_training_algorithm(trainer[1]);
    if (!algorithm) malformed("unknown trainer '" + trainer[1] + "'");
    meta.trainer = TrainerConfig{*algorithm, parse_size(trainer[2]), parse_double(trainer[3])};
  } else {
    malformed("bad trainer line");
  }
  meta.timestamp = r.keyed("timestamp", 1)[0];
  if (meta.timestamp == "-") meta.timestamp.clear();

  const auto n_terms = parse_size(r.keyed("vocabulary", 1)[0]);
  model.vocabulary = read_vocabulary(r.stream(), n_terms);

  if (r.next("parameters") != "parameters") malformed("expected 'parameters'");
  switch (*kind) {
    case ModelKind::naive_bayes:
      model.parameters = read_naive_bayes(r, meta.mode);
      break;
    case ModelKind::maxent:
      model.parameters = read_maxent(r);
      break;
    case ModelKind::baseline:
      model.parameters = read_lexicon(r);
      break;
  }
  if (r.next("end marker") != "end") malformed("expected 'end'");

  const std::size_t param_vocab = std::visit(
      [&](const auto& p) -> std::size_t {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, NaiveBayesModel>) return p.vocab_size;
        else if constexpr (std::is_same_v<P, MaxEntModel>) return p.vocab_size();
        else return model.vocabulary.size();
      },
      model.parameters);
  if (param_vocab != model.vocabulary.size()) {
    malformed("parameter block does not match the vocabulary size");
  }
  return model;
}

std::string serialize_model(const ModelArtifact& model) {
  std::ostringstream out;
  serialize_model(out, model);
  return out.str();
}

ModelArtifact deserialize_model(const std::string& text) {
  std::istringstream in(text);
  return deserialize_model(in);
}

void save_model(const std::filesystem::path& path, const ModelArtifact& model) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io_failure, "cannot write " + path.string());
  serialize_model(out, model);
  if (!out) throw Error(ErrorCode::io_failure, "write failed for " + path.string());
}

ModelArtifact load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io_failure, "cannot open " + path.string());
  return deserialize_model(in);
}

}  // namespace tweetiment
