#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "fileclass/errors.hpp"
#include "fileclass/preprocess.hpp"

namespace fileclass {

/// Character n-gram range plus the document-frequency band a gram must
/// fall into to be kept in the vocabulary.
struct NgramConfig {
  int min_n = 2;
  int max_n = 5;
  double min_df = 0.0005;
  double max_df = 0.999;
};

inline void validate(const NgramConfig& config) {
  if (config.min_n < 1) throw InputError("ngram: min_n must be >= 1");
  if (config.max_n < config.min_n) {
    throw InputError("ngram: max_n must be >= min_n");
  }
  if (config.min_df < 0.0 || config.min_df > 1.0) {
    throw InputError("ngram: min_df must be in [0, 1]");
  }
  if (config.max_df <= 0.0 || config.max_df > 1.0) {
    throw InputError("ngram: max_df must be in (0, 1]");
  }
  if (!(config.min_df < config.max_df)) {
    throw InputError("ngram: min_df must be < max_df");
  }
}

namespace detail {

struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view sv) const {
    return std::hash<std::string_view>{}(sv);
  }
};

template <typename Value>
using StringMap =
    std::unordered_map<std::string, Value, StringHash, std::equal_to<>>;

/// Calls `fn` with every n-gram of the document, as a view into `text`.
/// Tokens are the whitespace-separated words of the document text; grams
/// never cross a token boundary. Gram positions are byte offsets, which
/// coincide with scalar windows only for ASCII views; multi-byte letters
/// survive masking, so windows are taken over scalar boundaries.
template <typename Fn>
void for_each_ngram(std::string_view text, const NgramConfig& config,
                    Fn&& fn) {
  std::size_t start = 0;
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
           c == '\v';
  };
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || is_space(text[i])) {
      if (i > start) {
        const std::string_view token = text.substr(start, i - start);
        // Scalar boundaries within the token.
        std::vector<std::size_t> bounds;
        bounds.push_back(0);
        std::size_t pos = 0;
        while (pos < token.size()) {
          utf8::decode(token, pos);
          bounds.push_back(pos);
        }
        const std::size_t len = bounds.size() - 1;  // scalars in token
        for (int n = config.min_n;
             n <= config.max_n && static_cast<std::size_t>(n) <= len; ++n) {
          for (std::size_t k = 0; k + n <= len; ++k) {
            fn(token.substr(bounds[k], bounds[k + n] - bounds[k]));
          }
        }
      }
      start = i + 1;
    }
  }
}

}  // namespace detail

/// All grams of the document with multiplicity, in token order then gram
/// length order.
inline std::vector<std::string> extract_ngrams(const EncodedDocument& doc,
                                               const NgramConfig& config) {
  validate(config);
  std::vector<std::string> grams;
  detail::for_each_ngram(doc.text, config, [&](std::string_view gram) {
    grams.emplace_back(gram);
  });
  return grams;
}

/// Gram-to-column mapping plus the document frequencies it was built
/// from. Columns are assigned in lexicographic gram order so fitted
/// models are reproducible byte for byte.
struct Vocabulary {
  std::vector<std::string> grams;  // column -> gram, lexicographic
  detail::StringMap<std::uint32_t> gram_to_index;
  std::vector<std::uint32_t> document_frequency;  // column -> df
  std::uint64_t n_documents = 0;

  std::size_t size() const { return grams.size(); }
};

struct TfidfModel {
  Vocabulary vocabulary;
  std::vector<double> idf;
  NgramConfig config;
};

/// Smoothed inverse document frequency; strictly positive for df <= n.
inline double idf_weight(std::uint64_t n_documents, std::uint64_t df) {
  return std::log((1.0 + static_cast<double>(n_documents)) /
                  (1.0 + static_cast<double>(df))) +
         1.0;
}

/// Counts document frequency per gram (once per document), prunes grams
/// whose df proportion falls outside [min_df, max_df], and indexes the
/// survivors.
inline TfidfModel fit_tfidf(const std::vector<EncodedDocument>& docs,
                            const NgramConfig& config) {
  validate(config);
  if (docs.empty()) {
    throw DataError("fit_tfidf: empty corpus");
  }
  detail::StringMap<std::uint32_t> df;
  std::unordered_set<std::string_view> seen;
  for (const EncodedDocument& doc : docs) {
    seen.clear();
    detail::for_each_ngram(doc.text, config, [&](std::string_view gram) {
      if (seen.insert(gram).second) {
        const auto it = df.find(gram);
        if (it == df.end()) {
          df.emplace(std::string(gram), 1);
        } else {
          ++it->second;
        }
      }
    });
  }

  TfidfModel model;
  model.config = config;
  Vocabulary& vocab = model.vocabulary;
  vocab.n_documents = docs.size();
  const double n = static_cast<double>(docs.size());
  for (const auto& [gram, count] : df) {
    const double proportion = static_cast<double>(count) / n;
    if (proportion >= config.min_df && proportion <= config.max_df) {
      vocab.grams.push_back(gram);
    }
  }
  if (vocab.grams.empty()) {
    throw DataError(
        "fit_tfidf: no gram survived the document-frequency thresholds; "
        "relax min_df/max_df");
  }
  std::sort(vocab.grams.begin(), vocab.grams.end());
  vocab.gram_to_index.reserve(vocab.grams.size());
  vocab.document_frequency.reserve(vocab.grams.size());
  model.idf.reserve(vocab.grams.size());
  for (std::uint32_t i = 0; i < vocab.grams.size(); ++i) {
    const std::string& gram = vocab.grams[i];
    const std::uint32_t count = df.find(gram)->second;
    vocab.gram_to_index.emplace(gram, i);
    vocab.document_frequency.push_back(count);
    model.idf.push_back(idf_weight(vocab.n_documents, count));
  }
  return model;
}

/// Sparse row vector over the vocabulary columns; indices are strictly
/// increasing and values nonzero. Unit L2 norm unless the vector is
/// all-zero.
struct SparseVector {
  std::vector<std::uint32_t> indices;
  std::vector<double> values;
  std::size_t dim = 0;

  double norm() const {
    double acc = 0.0;
    for (const double v : values) acc += v * v;
    return std::sqrt(acc);
  }
};

/// Raw in-vocabulary gram counts weighted by idf, then L2-normalized.
/// A document with no in-vocabulary gram maps to the zero vector.
inline SparseVector transform(const TfidfModel& model,
                              const EncodedDocument& doc) {
  std::vector<std::uint32_t> hits;
  detail::for_each_ngram(doc.text, model.config, [&](std::string_view gram) {
    const auto it = model.vocabulary.gram_to_index.find(gram);
    if (it != model.vocabulary.gram_to_index.end()) {
      hits.push_back(it->second);
    }
  });
  SparseVector vec;
  vec.dim = model.vocabulary.size();
  if (hits.empty()) return vec;
  std::sort(hits.begin(), hits.end());
  double norm_sq = 0.0;
  for (std::size_t i = 0; i < hits.size();) {
    std::size_t j = i;
    while (j < hits.size() && hits[j] == hits[i]) ++j;
    const double value = static_cast<double>(j - i) * model.idf[hits[i]];
    vec.indices.push_back(hits[i]);
    vec.values.push_back(value);
    norm_sq += value * value;
    i = j;
  }
  const double inv_norm = 1.0 / std::sqrt(norm_sq);
  for (double& v : vec.values) v *= inv_norm;
  return vec;
}

}  // namespace fileclass
