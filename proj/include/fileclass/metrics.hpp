#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fileclass/classify.hpp"
#include "fileclass/corpus.hpp"
#include "fileclass/detail/random.hpp"
#include "fileclass/errors.hpp"

namespace fileclass {

struct ConfusionMatrix {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;
  std::uint64_t tn = 0;

  std::uint64_t total() const { return tp + fp + fn + tn; }
};

// 0/0 counts as 0 for all three, so reports stay total on degenerate
// matrices.

inline double precision(const ConfusionMatrix& cm) {
  const std::uint64_t denom = cm.tp + cm.fp;
  return denom == 0 ? 0.0
                    : static_cast<double>(cm.tp) / static_cast<double>(denom);
}

inline double recall(const ConfusionMatrix& cm) {
  const std::uint64_t denom = cm.tp + cm.fn;
  return denom == 0 ? 0.0
                    : static_cast<double>(cm.tp) / static_cast<double>(denom);
}

inline double f1(const ConfusionMatrix& cm) {
  const double p = precision(cm);
  const double r = recall(cm);
  return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r);
}

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::uint64_t support = 0;
};

/// Per-class scores plus their unweighted means. macro_recall is the
/// average class recall, the headline number for imbalanced data.
struct EvalReport {
  std::map<Label, ClassMetrics> per_class;
  double macro_precision = 0.0;
  double macro_recall = 0.0;
  double macro_f1 = 0.0;
  std::uint64_t total_support = 0;
};

inline ConfusionMatrix confusion_matrix(
    const std::vector<std::pair<Prediction, Label>>& predictions,
    Label positive) {
  ConfusionMatrix cm;
  for (const auto& [pred, truth] : predictions) {
    const bool predicted = pred.label == positive;
    const bool actual = truth == positive;
    if (predicted && actual) {
      ++cm.tp;
    } else if (predicted && !actual) {
      ++cm.fp;
    } else if (!predicted && actual) {
      ++cm.fn;
    } else {
      ++cm.tn;
    }
  }
  return cm;
}

inline EvalReport evaluate(
    const std::vector<std::pair<Prediction, Label>>& predictions) {
  if (predictions.empty()) {
    throw DataError("evaluate: no predictions");
  }
  EvalReport report;
  for (const Label label : {Label::Negative, Label::Positive}) {
    const ConfusionMatrix cm = confusion_matrix(predictions, label);
    ClassMetrics m;
    m.precision = precision(cm);
    m.recall = recall(cm);
    m.f1 = f1(cm);
    m.support = cm.tp + cm.fn;
    report.per_class[label] = m;
    report.macro_precision += m.precision / 2.0;
    report.macro_recall += m.recall / 2.0;
    report.macro_f1 += m.f1 / 2.0;
    report.total_support += m.support;
  }
  return report;
}

/// Seeded, stratified train/test split: each class is shuffled and cut
/// at `fraction` separately, so both sides keep both classes. Original
/// corpus order is preserved within each side.
inline std::pair<Corpus, Corpus> split(const Corpus& corpus, double fraction,
                                       std::uint64_t seed) {
  if (!(fraction > 0.0 && fraction < 1.0)) {
    throw InputError("split: fraction must be in (0, 1)");
  }
  std::map<Label, std::vector<std::size_t>> by_class;
  for (std::size_t i = 0; i < corpus.entries.size(); ++i) {
    if (!corpus.entries[i].label) {
      throw DataError("split: corpus contains unlabeled entries");
    }
    by_class[*corpus.entries[i].label].push_back(i);
  }
  std::mt19937_64 rng(seed);
  std::vector<bool> in_train(corpus.entries.size(), false);
  for (auto& [label, indices] : by_class) {
    const auto n_train = static_cast<std::size_t>(
        std::llround(fraction * static_cast<double>(indices.size())));
    if (n_train == 0 || n_train == indices.size()) {
      throw DataError("split: class " + std::string(label_name(label)) +
                      " is too small to appear in both splits");
    }
    detail::shuffle(indices, rng);
    for (std::size_t k = 0; k < n_train; ++k) {
      in_train[indices[k]] = true;
    }
  }
  Corpus train_set, test_set;
  for (std::size_t i = 0; i < corpus.entries.size(); ++i) {
    (in_train[i] ? train_set : test_set).add(corpus.entries[i]);
  }
  return {std::move(train_set), std::move(test_set)};
}

/// Aligned text table, one block per strategy heading.
inline std::string format_report(const EvalReport& report,
                                 std::string_view heading) {
  std::string out;
  char line[160];
  std::snprintf(line, sizeof(line), "%-10s %11s %11s %11s %9s\n",
                std::string(heading).c_str(), "precision", "recall", "f1",
                "support");
  out += line;
  for (const Label label : {Label::Negative, Label::Positive}) {
    const ClassMetrics& m = report.per_class.at(label);
    std::snprintf(line, sizeof(line), "%-10s %11.4f %11.4f %11.4f %9llu\n",
                  std::string(label_name(label)).c_str(), m.precision,
                  m.recall, m.f1,
                  static_cast<unsigned long long>(m.support));
    out += line;
  }
  std::snprintf(line, sizeof(line), "%-10s %11.4f %11.4f %11.4f %9llu\n",
                "average", report.macro_precision, report.macro_recall,
                report.macro_f1,
                static_cast<unsigned long long>(report.total_support));
  out += line;
  return out;
}

}  // namespace fileclass
