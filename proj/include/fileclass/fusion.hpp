#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "fileclass/classify.hpp"
#include "fileclass/corpus.hpp"
#include "fileclass/errors.hpp"
#include "fileclass/preprocess.hpp"

namespace fileclass {

enum class FusionStrategy { TwoStandalone, SingleIterative };

inline std::string_view fusion_strategy_name(FusionStrategy strategy) {
  return strategy == FusionStrategy::TwoStandalone ? "standalone"
                                                   : "iterative";
}

/// Keeps whichever prediction is more confident the sample is positive.
/// Ties go to the path classifier (the name side wins only on a strictly
/// higher score).
inline Prediction fuse_standalone(const Prediction& fnc_pred,
                                  const Prediction& fpc_pred) {
  if (fnc_pred.source != PredictionSource::FNC ||
      fpc_pred.source != PredictionSource::FPC) {
    throw InputError("fuse_standalone: expects an FNC and an FPC prediction");
  }
  Prediction fused =
      fnc_pred.p_positive > fpc_pred.p_positive ? fnc_pred : fpc_pred;
  fused.source = PredictionSource::Fused;
  return fused;
}

/// Treats every path component (sub-directories plus file name) as a
/// standalone file name and scores each with `score_name`; the path is
/// positive as soon as any component is, and the reported confidence is
/// the component maximum. Makes exactly one call per component.
inline Prediction classify_iterative(
    const std::function<Prediction(const std::string&)>& score_name,
    std::string_view full_path) {
  const std::vector<std::string> components =
      split_path_components(full_path);
  Prediction best = make_prediction(0.0, PredictionSource::Iterative);
  bool any_positive = false;
  for (const std::string& component : components) {
    const Prediction pred = score_name(component);
    if (pred.p_positive > best.p_positive) {
      best = pred;
    }
    any_positive = any_positive || pred.label == Label::Positive;
  }
  Prediction result = make_prediction(best.p_positive,
                                      PredictionSource::Iterative);
  result.label = any_positive ? Label::Positive : Label::Negative;
  return result;
}

inline Prediction classify_iterative(const LogisticModel& fnc,
                                     std::string_view full_path) {
  if (fnc.kind != ModelKind::FNC) {
    throw InputError("classify_iterative: needs a file-name model");
  }
  return classify_iterative(
      [&fnc](const std::string& component) { return predict(fnc, component); },
      full_path);
}

namespace detail {

/// Path plus name with no duplicated final component, so entries whose
/// path already ends in the file name iterate each component once.
inline std::string join_path_and_name(const FileEntry& entry) {
  if (entry.path.empty()) return entry.name;
  if (entry.name.empty()) return entry.path;
  const std::vector<std::string> components =
      split_path_components(entry.path);
  if (!components.empty() && components.back() == entry.name) {
    return entry.path;
  }
  if (is_separator(entry.path.back())) {
    return entry.path + entry.name;
  }
  return entry.path + "/" + entry.name;
}

}  // namespace detail

/// Classifies one entry under the chosen strategy. TwoStandalone fuses
/// the name and path classifiers (either side alone when the other text
/// is missing); SingleIterative walks the full path with the name model.
inline Prediction classify_file(FusionStrategy strategy,
                                const LogisticModel& fnc,
                                const LogisticModel* fpc,
                                const FileEntry& entry) {
  if (entry.name.empty() && entry.path.empty()) {
    throw InputError("classify_file: entry has neither name nor path");
  }
  if (strategy == FusionStrategy::SingleIterative) {
    return classify_iterative(fnc, detail::join_path_and_name(entry));
  }
  if (fpc == nullptr) {
    throw InputError(
        "classify_file: standalone fusion requires a path model");
  }
  if (entry.name.empty()) {
    Prediction pred = predict(*fpc, entry.path);
    pred.source = PredictionSource::Fused;
    return pred;
  }
  if (entry.path.empty()) {
    Prediction pred = predict(fnc, entry.name);
    pred.source = PredictionSource::Fused;
    return pred;
  }
  return fuse_standalone(predict(fnc, entry.name), predict(*fpc, entry.path));
}

}  // namespace fileclass
