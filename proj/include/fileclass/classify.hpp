#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <deque>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fileclass/corpus.hpp"
#include "fileclass/errors.hpp"
#include "fileclass/featurize.hpp"
#include "fileclass/preprocess.hpp"

namespace fileclass {

/// Which text a model classifies: file names (three concatenated views)
/// or flattened directory paths.
enum class ModelKind { FNC, FPC };

inline std::string_view model_kind_name(ModelKind kind) {
  return kind == ModelKind::FNC ? "FNC" : "FPC";
}

enum class ClassWeighting { Balanced, Uniform };

struct TrainConfig {
  double c = 100.0;  // inverse regularization strength
  ClassWeighting class_weighting = ClassWeighting::Balanced;
  int max_iterations = 1000;
  double tolerance = 1e-6;  // gradient-norm stop threshold
  std::uint64_t seed = 0;   // reserved for randomized extras; training is
                            // deterministic and ignores it
};

inline void validate(const TrainConfig& config) {
  if (!(config.c > 0.0)) throw InputError("train: C must be > 0");
  if (config.max_iterations < 1) {
    throw InputError("train: max_iterations must be >= 1");
  }
  if (!(config.tolerance > 0.0)) {
    throw InputError("train: tolerance must be > 0");
  }
}

/// Balanced mode weighs each class by N_total / (2 * N_class); uniform
/// mode weighs both classes 1.
inline std::map<Label, double> class_weights(
    const std::map<Label, std::size_t>& counts, ClassWeighting mode) {
  const std::size_t n_pos =
      counts.count(Label::Positive) ? counts.at(Label::Positive) : 0;
  const std::size_t n_neg =
      counts.count(Label::Negative) ? counts.at(Label::Negative) : 0;
  if (n_pos == 0 || n_neg == 0) {
    throw DataError("class_weights: both classes need at least one sample");
  }
  if (mode == ClassWeighting::Uniform) {
    return {{Label::Positive, 1.0}, {Label::Negative, 1.0}};
  }
  const double total = static_cast<double>(n_pos + n_neg);
  return {{Label::Positive, total / (2.0 * static_cast<double>(n_pos))},
          {Label::Negative, total / (2.0 * static_cast<double>(n_neg))}};
}

struct TrainingSample {
  SparseVector x;
  Label y = Label::Negative;
};

namespace detail {

inline double stable_log1p_exp(double t) {
  // log(1 + exp(t)) without overflow.
  return t > 0.0 ? t + std::log1p(std::exp(-t)) : std::log1p(std::exp(t));
}

inline double sigmoid(double t) {
  if (t >= 0.0) {
    return 1.0 / (1.0 + std::exp(-t));
  }
  const double e = std::exp(t);
  return e / (1.0 + e);
}

inline double sample_weight(const std::map<Label, double>& weights,
                            Label label) {
  return weights.at(label);
}

}  // namespace detail

struct LossGradient {
  double loss = 0.0;
  std::vector<double> grad_weights;
  double grad_bias = 0.0;
};

/// Regularized weighted logistic loss:
///   J(w, b) = 0.5 w'w + C * sum_i s_i * log(1 + exp(-y_i (w'x_i + b)))
/// with y_i in {-1, +1} (+1 for the positive class) and s_i the class
/// weight of sample i. The bias is not penalized.
inline double loss_only(std::span<const double> weights, double bias,
                        std::span<const TrainingSample> samples,
                        const TrainConfig& config,
                        const std::map<Label, double>& weight_by_class) {
  double penalty = 0.0;
  for (const double w : weights) penalty += w * w;
  double data = 0.0;
  for (const TrainingSample& sample : samples) {
    double margin = bias;
    for (std::size_t k = 0; k < sample.x.indices.size(); ++k) {
      margin += weights[sample.x.indices[k]] * sample.x.values[k];
    }
    const double y = sample.y == Label::Positive ? 1.0 : -1.0;
    data += detail::sample_weight(weight_by_class, sample.y) *
            detail::stable_log1p_exp(-y * margin);
  }
  return 0.5 * penalty + config.c * data;
}

inline LossGradient loss_and_gradient(
    std::span<const double> weights, double bias,
    std::span<const TrainingSample> samples, const TrainConfig& config,
    const std::map<Label, double>& weight_by_class) {
  if (samples.empty()) {
    throw DataError("loss_and_gradient: no samples");
  }
  LossGradient out;
  out.grad_weights.assign(weights.begin(), weights.end());
  double penalty = 0.0;
  for (const double w : weights) penalty += w * w;
  double data = 0.0;
  for (const TrainingSample& sample : samples) {
    double margin = bias;
    for (std::size_t k = 0; k < sample.x.indices.size(); ++k) {
      margin += weights[sample.x.indices[k]] * sample.x.values[k];
    }
    const double y = sample.y == Label::Positive ? 1.0 : -1.0;
    const double s = detail::sample_weight(weight_by_class, sample.y);
    data += s * detail::stable_log1p_exp(-y * margin);
    // d/dm log(1+exp(-y m)) = -y * sigmoid(-y m)
    const double coef = config.c * s * -y * detail::sigmoid(-y * margin);
    for (std::size_t k = 0; k < sample.x.indices.size(); ++k) {
      out.grad_weights[sample.x.indices[k]] += coef * sample.x.values[k];
    }
    out.grad_bias += coef;
  }
  out.loss = 0.5 * penalty + config.c * data;
  return out;
}

/// Computes class weights from the samples themselves, per config mode.
inline LossGradient loss_and_gradient(std::span<const double> weights,
                                      double bias,
                                      std::span<const TrainingSample> samples,
                                      const TrainConfig& config) {
  std::map<Label, std::size_t> counts;
  for (const TrainingSample& sample : samples) ++counts[sample.y];
  return loss_and_gradient(weights, bias, samples, config,
                           class_weights(counts, config.class_weighting));
}

enum class PredictionSource { FNC, FPC, Fused, Iterative };

inline std::string_view prediction_source_name(PredictionSource source) {
  switch (source) {
    case PredictionSource::FNC:
      return "FNC";
    case PredictionSource::FPC:
      return "FPC";
    case PredictionSource::Fused:
      return "Fused";
    default:
      return "Iterative";
  }
}

struct Prediction {
  double p_positive = 0.0;
  double p_negative = 1.0;
  Label label = Label::Negative;
  PredictionSource source = PredictionSource::FNC;
};

inline Prediction make_prediction(double p_positive, PredictionSource source,
                                  double threshold = 0.5) {
  Prediction pred;
  pred.p_positive = p_positive;
  pred.p_negative = 1.0 - p_positive;
  pred.label = p_positive >= threshold ? Label::Positive : Label::Negative;
  pred.source = source;
  return pred;
}

/// A trained binary classifier, self-contained: the fitted TF-IDF model
/// travels with the weights so one file restores the whole pipeline.
struct LogisticModel {
  std::vector<double> weights;
  double bias = 0.0;
  TfidfModel tfidf;
  Label positive_label = Label::Positive;
  ModelKind kind = ModelKind::FNC;
  double threshold = 0.5;
};

enum class StopReason { GradientNorm, Stationary, IterationCap };

inline std::string_view stop_reason_name(StopReason reason) {
  switch (reason) {
    case StopReason::GradientNorm:
      return "gradient tolerance";
    case StopReason::Stationary:
      return "numerically stationary";
    default:
      return "iteration cap";
  }
}

struct TrainStats {
  double final_loss = 0.0;
  double gradient_norm = 0.0;
  int iterations = 0;
  bool converged = false;  // gradient norm fell below tolerance
  StopReason stop_reason = StopReason::IterationCap;
  std::vector<double> loss_history;
};

namespace detail {

/// Deterministic L-BFGS (memory 10) with Armijo backtracking from zero
/// initialization. Falls back to steepest descent when the quasi-Newton
/// direction is not a descent direction.
class LbfgsMinimizer {
 public:
  LbfgsMinimizer(std::span<const TrainingSample> samples,
                 const TrainConfig& config,
                 const std::map<Label, double>& weight_by_class,
                 std::size_t dim)
      : samples_(samples),
        config_(config),
        weight_by_class_(weight_by_class),
        dim_(dim) {}

  TrainStats minimize(std::vector<double>& weights, double& bias) {
    TrainStats stats;
    std::vector<double> theta(dim_ + 1, 0.0);
    LossGradient lg = eval(theta);
    stats.loss_history.push_back(lg.loss);
    std::vector<double> grad = pack_gradient(lg);

    std::deque<std::vector<double>> s_hist, y_hist;
    std::deque<double> rho_hist;

    int iter = 0;
    int stalled_steps = 0;
    for (; iter < config_.max_iterations; ++iter) {
      const double gnorm = norm(grad);
      stats.gradient_norm = gnorm;
      if (gnorm < config_.tolerance) {
        stats.converged = true;
        stats.stop_reason = StopReason::GradientNorm;
        break;
      }
      std::vector<double> direction =
          lbfgs_direction(grad, s_hist, y_hist, rho_hist);
      double slope = dot(grad, direction);
      if (!(slope < 0.0)) {
        // Not a descent direction; restart from steepest descent.
        s_hist.clear();
        y_hist.clear();
        rho_hist.clear();
        for (std::size_t i = 0; i < direction.size(); ++i) {
          direction[i] = -grad[i];
        }
        slope = dot(grad, direction);
        if (!(slope < 0.0)) {
          stats.stop_reason = StopReason::Stationary;
          break;  // gradient is numerically zero
        }
      }

      // Armijo backtracking.
      constexpr double kArmijo = 1e-4;
      double step = 1.0;
      std::vector<double> candidate(theta.size());
      double new_loss = std::numeric_limits<double>::infinity();
      bool accepted = false;
      for (int bt = 0; bt < 60; ++bt) {
        for (std::size_t i = 0; i < theta.size(); ++i) {
          candidate[i] = theta[i] + step * direction[i];
        }
        new_loss = loss_only(
            std::span<const double>(candidate.data(), dim_),
            candidate[dim_], samples_, config_, weight_by_class_);
        if (new_loss <= lg.loss + kArmijo * step * slope) {
          accepted = true;
          break;
        }
        step *= 0.5;
      }
      if (!accepted) {
        stats.stop_reason = StopReason::Stationary;
        break;  // line search stalled at machine precision
      }

      LossGradient new_lg = eval(candidate);
      std::vector<double> new_grad = pack_gradient(new_lg);

      // Curvature update, skipped when s'y is not safely positive.
      std::vector<double> s(theta.size()), y(theta.size());
      for (std::size_t i = 0; i < theta.size(); ++i) {
        s[i] = candidate[i] - theta[i];
        y[i] = new_grad[i] - grad[i];
      }
      const double sy = dot(s, y);
      if (sy > 1e-12 * norm(s) * norm(y)) {
        s_hist.push_back(std::move(s));
        y_hist.push_back(std::move(y));
        rho_hist.push_back(1.0 / sy);
        if (s_hist.size() > kMemory) {
          s_hist.pop_front();
          y_hist.pop_front();
          rho_hist.pop_front();
        }
      }
      const double decrease = lg.loss - new_lg.loss;
      theta.swap(candidate);
      lg = std::move(new_lg);
      grad = std::move(new_grad);
      stats.loss_history.push_back(lg.loss);

      // Once accepted decreases sit at rounding-noise level the objective
      // is numerically stationary; further steps cannot make progress.
      if (decrease <= 1e-14 * std::max(1.0, std::abs(lg.loss))) {
        if (++stalled_steps >= 3) {
          stats.stop_reason = StopReason::Stationary;
          ++iter;
          break;
        }
      } else {
        stalled_steps = 0;
      }
    }

    stats.iterations = iter;
    stats.final_loss = lg.loss;
    stats.gradient_norm = norm(grad);
    weights.assign(theta.begin(), theta.begin() + dim_);
    bias = theta[dim_];
    return stats;
  }

 private:
  static constexpr std::size_t kMemory = 10;

  LossGradient eval(const std::vector<double>& theta) {
    return loss_and_gradient(std::span<const double>(theta.data(), dim_),
                             theta[dim_], samples_, config_,
                             weight_by_class_);
  }

  std::vector<double> pack_gradient(const LossGradient& lg) const {
    std::vector<double> grad(dim_ + 1);
    std::copy(lg.grad_weights.begin(), lg.grad_weights.end(), grad.begin());
    grad[dim_] = lg.grad_bias;
    return grad;
  }

  static double dot(const std::vector<double>& a,
                    const std::vector<double>& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
  }

  static double norm(const std::vector<double>& v) {
    return std::sqrt(dot(v, v));
  }

  std::vector<double> lbfgs_direction(
      const std::vector<double>& grad,
      const std::deque<std::vector<double>>& s_hist,
      const std::deque<std::vector<double>>& y_hist,
      const std::deque<double>& rho_hist) const {
    std::vector<double> q = grad;
    const std::size_t m = s_hist.size();
    std::vector<double> alpha(m);
    for (std::size_t i = m; i-- > 0;) {
      alpha[i] = rho_hist[i] * dot(s_hist[i], q);
      for (std::size_t k = 0; k < q.size(); ++k) {
        q[k] -= alpha[i] * y_hist[i][k];
      }
    }
    if (m > 0) {
      const double gamma =
          dot(s_hist[m - 1], y_hist[m - 1]) / dot(y_hist[m - 1], y_hist[m - 1]);
      for (double& v : q) v *= gamma;
    }
    for (std::size_t i = 0; i < m; ++i) {
      const double beta = rho_hist[i] * dot(y_hist[i], q);
      for (std::size_t k = 0; k < q.size(); ++k) {
        q[k] += s_hist[i][k] * (alpha[i] - beta);
      }
    }
    for (double& v : q) v = -v;
    return q;
  }

  std::span<const TrainingSample> samples_;
  const TrainConfig& config_;
  const std::map<Label, double>& weight_by_class_;
  std::size_t dim_;
};

inline EncodedDocument encode_for_kind(ModelKind kind, std::string_view text) {
  return kind == ModelKind::FNC ? encode_name(text) : encode_path(text);
}

}  // namespace detail

/// Fits the TF-IDF vocabulary on the corpus and minimizes the weighted
/// logistic loss with a deterministic quasi-Newton scheme from zero
/// initialization, so identical inputs reproduce identical models.
/// Entries without usable text for `kind` (no name for FNC, no path or a
/// root-level path for FPC) are skipped.
inline LogisticModel train(const Corpus& corpus, ModelKind kind,
                           const NgramConfig& ngram_config,
                           const TrainConfig& train_config,
                           TrainStats* stats_out = nullptr) {
  validate(ngram_config);
  validate(train_config);

  std::vector<EncodedDocument> docs;
  std::vector<Label> labels;
  std::map<Label, std::size_t> counts;
  for (const FileEntry& entry : corpus.entries) {
    if (!entry.label) continue;
    const std::string_view text =
        kind == ModelKind::FNC ? entry.name : entry.path;
    if (text.empty()) continue;
    EncodedDocument doc = detail::encode_for_kind(kind, text);
    if (doc.degenerate()) continue;
    docs.push_back(std::move(doc));
    labels.push_back(*entry.label);
    ++counts[*entry.label];
  }
  if (docs.empty()) {
    throw DataError("train: no usable labeled entries for " +
                    std::string(model_kind_name(kind)));
  }
  if (counts.size() < 2) {
    throw DataError("train: corpus contains a single class; both pos and "
                    "neg samples are required");
  }

  LogisticModel model;
  model.kind = kind;
  model.tfidf = fit_tfidf(docs, ngram_config);

  std::vector<TrainingSample> samples(docs.size());
  for (std::size_t i = 0; i < docs.size(); ++i) {
    samples[i].x = transform(model.tfidf, docs[i]);
    samples[i].y = labels[i];
  }

  const auto weight_by_class =
      class_weights(counts, train_config.class_weighting);
  detail::LbfgsMinimizer minimizer(samples, train_config, weight_by_class,
                                   model.tfidf.vocabulary.size());
  TrainStats stats = minimizer.minimize(model.weights, model.bias);
  if (stats_out) *stats_out = std::move(stats);
  return model;
}

/// Scores raw text: a file name for FNC models, an absolute path for FPC
/// models. Degenerate documents (empty input, or a path with no
/// directory part) carry no evidence and score exactly 0.
inline Prediction predict(const LogisticModel& model,
                          std::string_view entry_text) {
  const PredictionSource source = model.kind == ModelKind::FNC
                                      ? PredictionSource::FNC
                                      : PredictionSource::FPC;
  if (entry_text.empty()) {
    return make_prediction(0.0, source, model.threshold);
  }
  const EncodedDocument doc = detail::encode_for_kind(model.kind, entry_text);
  if (doc.degenerate()) {
    return make_prediction(0.0, source, model.threshold);
  }
  const SparseVector x = transform(model.tfidf, doc);
  double margin = model.bias;
  for (std::size_t k = 0; k < x.indices.size(); ++k) {
    margin += model.weights[x.indices[k]] * x.values[k];
  }
  return make_prediction(detail::sigmoid(margin), source, model.threshold);
}

// --- Model persistence ----------------------------------------------------
//
// Versioned line-oriented UTF-8 text. Grams contain no whitespace by
// construction, so space-separated fields are unambiguous. Doubles are
// written with 17 significant digits, which round-trips exactly.

inline constexpr int kModelFormatVersion = 1;

namespace detail {

inline std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value,
                                 std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view text, std::string_view what) {
  double value = 0.0;
  const auto res =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw DataError("model file: bad " + std::string(what) + " value \"" +
                    std::string(text) + "\"");
  }
  return value;
}

inline std::uint64_t parse_u64(std::string_view text, std::string_view what) {
  std::uint64_t value = 0;
  const auto res =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw DataError("model file: bad " + std::string(what) + " value \"" +
                    std::string(text) + "\"");
  }
  return value;
}

inline std::string expect_line(std::istream& in, std::string_view what) {
  std::string line;
  if (!std::getline(in, line)) {
    throw DataError("model file: truncated before " + std::string(what));
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ' ') {
      if (i > start) fields.push_back(line.substr(start, i - start));
      start = i + 1;
    }
  }
  return fields;
}

/// Reads the next line into `line` and splits it; the views point into
/// `line`, which the caller keeps alive.
inline std::vector<std::string_view> read_fields(std::istream& in,
                                                 std::string& line,
                                                 std::string_view what) {
  line = expect_line(in, what);
  return split_fields(line);
}

}  // namespace detail

inline void save_model(const LogisticModel& model, std::ostream& out) {
  const Vocabulary& vocab = model.tfidf.vocabulary;
  out << "fcmodel " << kModelFormatVersion << '\n';
  out << "kind " << model_kind_name(model.kind) << '\n';
  out << "positive_label " << label_tag(model.positive_label) << '\n';
  out << "threshold " << detail::format_double(model.threshold) << '\n';
  out << "ngram " << model.tfidf.config.min_n << ' ' << model.tfidf.config.max_n
      << ' ' << detail::format_double(model.tfidf.config.min_df) << ' '
      << detail::format_double(model.tfidf.config.max_df) << '\n';
  out << "documents " << vocab.n_documents << '\n';
  out << "vocabulary " << vocab.size() << '\n';
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    out << vocab.grams[i] << ' ' << i << ' ' << vocab.document_frequency[i]
        << '\n';
  }
  out << "idf " << model.tfidf.idf.size() << '\n';
  for (const double v : model.tfidf.idf) {
    out << detail::format_double(v) << '\n';
  }
  out << "weights " << model.weights.size() << '\n';
  for (const double v : model.weights) {
    out << detail::format_double(v) << '\n';
  }
  out << "bias " << detail::format_double(model.bias) << '\n';
  out << "end fcmodel\n";
}

inline LogisticModel load_model(std::istream& in) {
  using detail::expect_line;
  using detail::read_fields;

  LogisticModel model;
  std::string line;
  {
    const auto fields = read_fields(in, line, "header");
    if (fields.size() != 2 || fields[0] != "fcmodel") {
      throw DataError("model file: missing fcmodel header");
    }
    if (detail::parse_u64(fields[1], "version") != kModelFormatVersion) {
      throw DataError("model file: unsupported format version " +
                      std::string(fields[1]));
    }
  }
  {
    const auto fields = read_fields(in, line, "kind");
    if (fields.size() != 2 || fields[0] != "kind") {
      throw DataError("model file: expected kind line");
    }
    if (fields[1] == "FNC") {
      model.kind = ModelKind::FNC;
    } else if (fields[1] == "FPC") {
      model.kind = ModelKind::FPC;
    } else {
      throw DataError("model file: unknown kind \"" + std::string(fields[1]) +
                      "\"");
    }
  }
  {
    const auto fields = read_fields(in, line, "positive_label");
    if (fields.size() != 2 || fields[0] != "positive_label" ||
        fields[1] != "pos") {
      throw DataError("model file: expected positive_label pos");
    }
    model.positive_label = Label::Positive;
  }
  {
    const auto fields = read_fields(in, line, "threshold");
    if (fields.size() != 2 || fields[0] != "threshold") {
      throw DataError("model file: expected threshold line");
    }
    model.threshold = detail::parse_double(fields[1], "threshold");
  }
  {
    const auto fields = read_fields(in, line, "ngram");
    if (fields.size() != 5 || fields[0] != "ngram") {
      throw DataError("model file: expected ngram line");
    }
    model.tfidf.config.min_n =
        static_cast<int>(detail::parse_u64(fields[1], "min_n"));
    model.tfidf.config.max_n =
        static_cast<int>(detail::parse_u64(fields[2], "max_n"));
    model.tfidf.config.min_df = detail::parse_double(fields[3], "min_df");
    model.tfidf.config.max_df = detail::parse_double(fields[4], "max_df");
  }
  Vocabulary& vocab = model.tfidf.vocabulary;
  {
    const auto fields = read_fields(in, line, "documents");
    if (fields.size() != 2 || fields[0] != "documents") {
      throw DataError("model file: expected documents line");
    }
    vocab.n_documents = detail::parse_u64(fields[1], "documents");
  }
  std::uint64_t vocab_size = 0;
  {
    const auto fields = read_fields(in, line, "vocabulary");
    if (fields.size() != 2 || fields[0] != "vocabulary") {
      throw DataError("model file: expected vocabulary line");
    }
    vocab_size = detail::parse_u64(fields[1], "vocabulary size");
  }
  vocab.grams.reserve(vocab_size);
  vocab.gram_to_index.reserve(vocab_size);
  vocab.document_frequency.reserve(vocab_size);
  for (std::uint64_t i = 0; i < vocab_size; ++i) {
    const auto fields = read_fields(in, line, "vocabulary entry");
    if (fields.size() != 3) {
      throw DataError("model file: bad vocabulary entry at index " +
                      std::to_string(i));
    }
    if (detail::parse_u64(fields[1], "vocabulary index") != i) {
      throw DataError("model file: vocabulary indices out of order");
    }
    vocab.grams.emplace_back(fields[0]);
    vocab.gram_to_index.emplace(vocab.grams.back(),
                                static_cast<std::uint32_t>(i));
    vocab.document_frequency.push_back(
        static_cast<std::uint32_t>(detail::parse_u64(fields[2], "df")));
  }
  if (vocab.gram_to_index.size() != vocab_size) {
    throw DataError("model file: duplicate vocabulary grams");
  }
  {
    const auto fields = read_fields(in, line, "idf");
    if (fields.size() != 2 || fields[0] != "idf" ||
        detail::parse_u64(fields[1], "idf size") != vocab_size) {
      throw DataError("model file: expected idf block");
    }
    model.tfidf.idf.reserve(vocab_size);
    for (std::uint64_t i = 0; i < vocab_size; ++i) {
      model.tfidf.idf.push_back(
          detail::parse_double(expect_line(in, "idf value"), "idf"));
    }
  }
  {
    const auto fields = read_fields(in, line, "weights");
    if (fields.size() != 2 || fields[0] != "weights" ||
        detail::parse_u64(fields[1], "weights size") != vocab_size) {
      throw DataError("model file: expected weights block");
    }
    model.weights.reserve(vocab_size);
    for (std::uint64_t i = 0; i < vocab_size; ++i) {
      model.weights.push_back(
          detail::parse_double(expect_line(in, "weight value"), "weight"));
    }
  }
  {
    const auto fields = read_fields(in, line, "bias");
    if (fields.size() != 2 || fields[0] != "bias") {
      throw DataError("model file: expected bias line");
    }
    model.bias = detail::parse_double(fields[1], "bias");
  }
  if (expect_line(in, "trailer") != "end fcmodel") {
    throw DataError("model file: missing end marker");
  }
  return model;
}

}  // namespace fileclass
