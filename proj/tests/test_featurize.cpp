#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fileclass/featurize.hpp"
#include "fileclass/preprocess.hpp"

using namespace fileclass;

namespace {

EncodedDocument doc_from_text(std::string text) {
  EncodedDocument doc;
  doc.views.emplace_back("raw", text);
  doc.text = std::move(text);
  return doc;
}

std::multiset<std::string> gram_multiset(const std::string& token, int min_n,
                                         int max_n) {
  NgramConfig config;
  config.min_n = min_n;
  config.max_n = max_n;
  const auto grams = extract_ngrams(doc_from_text(token), config);
  return {grams.begin(), grams.end()};
}

/// Dense reference pipeline: nested loops and plain arrays, no sharing
/// with the library implementation beyond the tokenization rule it checks.
struct DenseReference {
  std::vector<std::string> vocab;
  std::vector<double> idf;

  static std::vector<std::string> doc_grams(const std::string& text,
                                            const NgramConfig& config) {
    std::vector<std::string> grams;
    std::string token;
    const auto flush = [&]() {
      for (int n = config.min_n; n <= config.max_n; ++n) {
        if (static_cast<std::size_t>(n) > token.size()) break;
        for (std::size_t k = 0; k + n <= token.size(); ++k) {
          grams.push_back(token.substr(k, n));
        }
      }
      token.clear();
    };
    for (const char c : text) {
      if (c == ' ') {
        flush();
      } else {
        token.push_back(c);
      }
    }
    flush();
    return grams;
  }

  void fit(const std::vector<std::string>& texts, const NgramConfig& config) {
    std::map<std::string, int> df;
    for (const std::string& text : texts) {
      const auto grams = doc_grams(text, config);
      const std::set<std::string> unique(grams.begin(), grams.end());
      for (const std::string& gram : unique) ++df[gram];
    }
    const double n = static_cast<double>(texts.size());
    for (const auto& [gram, count] : df) {
      const double proportion = count / n;
      if (proportion >= config.min_df && proportion <= config.max_df) {
        vocab.push_back(gram);
      }
    }
    std::sort(vocab.begin(), vocab.end());
    for (const std::string& gram : vocab) {
      idf.push_back(std::log((1.0 + n) / (1.0 + df[gram])) + 1.0);
    }
  }

  std::vector<double> transform(const std::string& text,
                                const NgramConfig& config) const {
    std::vector<double> dense(vocab.size(), 0.0);
    for (const std::string& gram : doc_grams(text, config)) {
      const auto it = std::find(vocab.begin(), vocab.end(), gram);
      if (it != vocab.end()) {
        dense[static_cast<std::size_t>(it - vocab.begin())] += 1.0;
      }
    }
    double norm_sq = 0.0;
    for (std::size_t j = 0; j < dense.size(); ++j) {
      dense[j] *= idf[j];
      norm_sq += dense[j] * dense[j];
    }
    if (norm_sq > 0.0) {
      const double inv = 1.0 / std::sqrt(norm_sq);
      for (double& v : dense) v *= inv;
    }
    return dense;
  }
};

std::vector<double> densify(const SparseVector& vec) {
  std::vector<double> dense(vec.dim, 0.0);
  for (std::size_t k = 0; k < vec.indices.size(); ++k) {
    dense[vec.indices[k]] = vec.values[k];
  }
  return dense;
}

std::string random_token(std::mt19937_64& rng, std::size_t max_len) {
  static const std::string alphabet = "abcXY019#$";
  const std::size_t len = 1 + rng() % max_len;
  std::string out;
  for (std::size_t i = 0; i < len; ++i) {
    out.push_back(alphabet[rng() % alphabet.size()]);
  }
  return out;
}

std::string random_doc_text(std::mt19937_64& rng) {
  const std::size_t n_tokens = 1 + rng() % 3;
  std::string text;
  for (std::size_t t = 0; t < n_tokens; ++t) {
    if (t > 0) text.push_back(' ');
    text += random_token(rng, 9);
  }
  return text;
}

}  // namespace

TEST_CASE("masked-view grams match the worked example") {
  using ms = std::multiset<std::string>;
  CHECK(gram_multiset("####yoB$yXX", 2, 2) ==
        ms{"##", "##", "##", "#y", "yo", "oB", "B$", "$y", "yX", "XX"});
  CHECK(gram_multiset("####yoB$yXX", 3, 3) ==
        ms{"###", "###", "##y", "#yo", "yoB", "oB$", "B$y", "$yX", "yXX"});
  CHECK(gram_multiset("####yoB$yXX", 4, 4) ==
        ms{"####", "###y", "##yo", "#yoB", "yoB$", "oB$y", "B$yX", "$yXX"});
  CHECK(gram_multiset("####yoB$yXX", 5, 5) ==
        ms{"####y", "###yo", "##yoB", "#yoB$", "yoB$y", "oB$yX", "B$yXX"});
}

TEST_CASE("binary-view grams match the worked example") {
  using ms = std::multiset<std::string>;
  CHECK(gram_multiset("0101", 2, 2) == ms{"01", "10", "01"});
  CHECK(gram_multiset("0101", 3, 3) == ms{"010", "101"});
  CHECK(gram_multiset("0101", 4, 4) == ms{"0101"});
  CHECK(gram_multiset("0101", 5, 5).empty());
  // Full 2..5 sweep in one call.
  CHECK(gram_multiset("0101", 2, 5) ==
        ms{"01", "10", "01", "010", "101", "0101"});
}

TEST_CASE("orthographic-view grams match the worked example") {
  using ms = std::multiset<std::string>;
  CHECK(gram_multiset("PPPPccCNcCC", 2, 2) ==
        ms{"PP", "PP", "PP", "Pc", "cc", "cC", "CN", "Nc", "cC", "CC"});
  CHECK(gram_multiset("PPPPccCNcCC", 3, 3) ==
        ms{"PPP", "PPP", "PPc", "Pcc", "ccC", "cCN", "CNc", "NcC", "cCC"});
  CHECK(gram_multiset("PPPPccCNcCC", 4, 4) ==
        ms{"PPPP", "PPPc", "PPcc", "PccC", "ccCN", "cCNc", "CNcC", "NcCC"});
  CHECK(gram_multiset("PPPPccCNcCC", 5, 5) ==
        ms{"PPPPc", "PPPcc", "PPccC", "PccCN", "ccCNc", "cCNcC", "CNcCC"});
}

TEST_CASE("gram windows follow scalar boundaries, not bytes") {
  NgramConfig config;
  config.min_n = 2;
  config.max_n = 2;
  const auto grams = extract_ngrams(doc_from_text("日本語"), config);
  CHECK(grams == std::vector<std::string>{"日本", "本語"});
}

TEST_CASE("grams never cross token boundaries") {
  NgramConfig config;
  const auto grams = extract_ngrams(doc_from_text("ab cd"), config);
  for (const std::string& gram : grams) {
    CHECK(gram.find(' ') == std::string::npos);
    CHECK((gram == "ab" || gram == "cd"));
  }
}

TEST_CASE("gram count follows the window formula") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 100; ++trial) {
    NgramConfig config;
    config.min_n = 1 + static_cast<int>(rng() % 3);
    config.max_n = config.min_n + static_cast<int>(rng() % 4);
    config.min_df = 0.0;
    config.max_df = 1.0;
    const std::string token = random_token(rng, 12);
    const std::size_t len = token.size();
    std::size_t expected = 0;
    for (int n = config.min_n;
         n <= config.max_n && static_cast<std::size_t>(n) <= len; ++n) {
      expected += len - n + 1;
    }
    CHECK(extract_ngrams(doc_from_text(token), config).size() == expected);
  }
}

TEST_CASE("fit computes df and smoothed idf") {
  NgramConfig config;
  config.min_df = 0.0;
  config.max_df = 1.0;
  const TfidfModel model =
      fit_tfidf({doc_from_text("ab"), doc_from_text("ab")}, config);
  REQUIRE(model.vocabulary.size() == 1);
  CHECK(model.vocabulary.grams[0] == "ab");
  CHECK(model.vocabulary.document_frequency[0] == 2);
  CHECK(model.vocabulary.n_documents == 2);
  CHECK(model.idf[0] == 1.0);  // ln(3/3) + 1
}

TEST_CASE("df thresholds prune grams at both ends") {
  {
    NgramConfig config;
    config.min_df = 0.0;
    config.max_df = 0.7;
    const TfidfModel model =
        fit_tfidf({doc_from_text("xya"), doc_from_text("xyb"),
                   doc_from_text("xyc"), doc_from_text("xyd")},
                  config);
    // "xy" appears in all 4 documents: 1.0 > 0.7, so it is dropped.
    CHECK_FALSE(model.vocabulary.gram_to_index.contains("xy"));
    CHECK(model.vocabulary.gram_to_index.contains("ya"));
  }
  {
    // 1/10000 = 0.0001 < 0.0005 prunes a one-document gram.
    std::vector<EncodedDocument> docs;
    docs.reserve(10000);
    for (int i = 0; i < 9999; ++i) docs.push_back(doc_from_text("ab"));
    docs.push_back(doc_from_text("qz"));
    NgramConfig config;
    config.min_df = 0.0005;
    config.max_df = 1.0;
    const TfidfModel model = fit_tfidf(docs, config);
    CHECK_FALSE(model.vocabulary.gram_to_index.contains("qz"));
    CHECK(model.vocabulary.gram_to_index.contains("ab"));
  }
}

TEST_CASE("fit error paths") {
  NgramConfig config;
  CHECK_THROWS_AS(fit_tfidf({}, config), DataError);
  NgramConfig tight;
  tight.min_df = 0.9;
  tight.max_df = 0.95;
  CHECK_THROWS_WITH(
      fit_tfidf({doc_from_text("ab"), doc_from_text("cd")}, tight),
      Catch::Matchers::ContainsSubstring("relax"));
  NgramConfig bad;
  bad.min_n = 0;
  CHECK_THROWS_AS(fit_tfidf({doc_from_text("ab")}, bad), InputError);
}

TEST_CASE("transform basics") {
  NgramConfig config;
  config.min_df = 0.0;
  config.max_df = 1.0;
  const TfidfModel model =
      fit_tfidf({doc_from_text("ab"), doc_from_text("ab")}, config);

  const SparseVector oov = transform(model, doc_from_text("zz"));
  CHECK(oov.indices.empty());
  CHECK(oov.norm() == 0.0);

  const SparseVector hit = transform(model, doc_from_text("ab"));
  REQUIRE(hit.indices.size() == 1);
  CHECK(hit.indices[0] == 0);
  CHECK(hit.values[0] == 1.0);
}

TEST_CASE("equal-idf grams share magnitude after normalization") {
  NgramConfig config;
  config.min_df = 0.0;
  config.max_df = 1.0;
  const TfidfModel model =
      fit_tfidf({doc_from_text("ab ab"), doc_from_text("ab cd"),
                 doc_from_text("cd cd")},
                config);
  const SparseVector vec = transform(model, doc_from_text("ab cd"));
  REQUIRE(vec.indices.size() == 2);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(vec.values[0] - inv_sqrt2) < 1e-12);
  CHECK(std::abs(vec.values[1] - inv_sqrt2) < 1e-12);
}

TEST_CASE("transform matches the dense reference on random corpora") {
  std::mt19937_64 rng(2024);
  for (int corpus_trial = 0; corpus_trial < 10; ++corpus_trial) {
    const std::size_t n_docs = 2 + rng() % 49;
    std::vector<std::string> texts;
    std::vector<EncodedDocument> docs;
    for (std::size_t i = 0; i < n_docs; ++i) {
      texts.push_back(random_doc_text(rng));
      docs.push_back(doc_from_text(texts.back()));
    }
    NgramConfig config;
    config.min_n = 2;
    config.max_n = 4;
    config.min_df = corpus_trial % 2 == 0 ? 0.0 : 0.05;
    config.max_df = corpus_trial % 3 == 0 ? 1.0 : 0.9;

    DenseReference reference;
    reference.fit(texts, config);
    TfidfModel model;
    try {
      model = fit_tfidf(docs, config);
    } catch (const DataError&) {
      CHECK(reference.vocab.empty());
      continue;
    }
    REQUIRE(model.vocabulary.grams == reference.vocab);
    for (std::size_t j = 0; j < reference.idf.size(); ++j) {
      CHECK(std::abs(model.idf[j] - reference.idf[j]) < 1e-12);
    }
    for (std::size_t i = 0; i < n_docs; ++i) {
      const auto expected = reference.transform(texts[i], config);
      const auto actual = densify(transform(model, docs[i]));
      REQUIRE(actual.size() == expected.size());
      for (std::size_t j = 0; j < expected.size(); ++j) {
        CHECK(std::abs(actual[j] - expected[j]) < 1e-9);
      }
    }
  }
}

TEST_CASE("transform norm is zero or one") {
  std::mt19937_64 rng(31);
  NgramConfig config;
  config.min_df = 0.0;
  config.max_df = 1.0;
  std::vector<EncodedDocument> docs;
  for (int i = 0; i < 30; ++i) docs.push_back(doc_from_text(random_doc_text(rng)));
  const TfidfModel model = fit_tfidf(docs, config);
  for (int i = 0; i < 100; ++i) {
    const double norm =
        transform(model, doc_from_text(random_doc_text(rng))).norm();
    CHECK((norm == 0.0 || std::abs(norm - 1.0) < 1e-12));
  }
}

TEST_CASE("document order does not change vocabulary or idf") {
  std::mt19937_64 rng(41);
  std::vector<EncodedDocument> docs;
  for (int i = 0; i < 25; ++i) docs.push_back(doc_from_text(random_doc_text(rng)));
  NgramConfig config;
  config.min_df = 0.0;
  config.max_df = 1.0;
  const TfidfModel a = fit_tfidf(docs, config);
  std::reverse(docs.begin(), docs.end());
  const TfidfModel b = fit_tfidf(docs, config);
  CHECK(a.vocabulary.grams == b.vocabulary.grams);
  CHECK(a.vocabulary.document_frequency == b.vocabulary.document_frequency);
  CHECK(a.idf == b.idf);
}

TEST_CASE("scaling all idf values leaves transforms unchanged") {
  std::mt19937_64 rng(51);
  std::vector<EncodedDocument> docs;
  for (int i = 0; i < 25; ++i) docs.push_back(doc_from_text(random_doc_text(rng)));
  NgramConfig config;
  config.min_df = 0.0;
  config.max_df = 1.0;
  const TfidfModel model = fit_tfidf(docs, config);
  TfidfModel scaled = model;
  for (double& v : scaled.idf) v *= 3.75;
  for (int i = 0; i < 50; ++i) {
    const EncodedDocument doc = doc_from_text(random_doc_text(rng));
    const auto a = densify(transform(model, doc));
    const auto b = densify(transform(scaled, doc));
    REQUIRE(a.size() == b.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
      CHECK(std::abs(a[j] - b[j]) < 1e-12);
    }
  }
}
