// End-to-end gate for the toolkit. Each numbered check prints one
// PASS/FAIL line; the binary exits nonzero if any check fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fileclass/fileclass.hpp"

using namespace fileclass;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

class Check {
 public:
  Check(int id, std::string name) : id_(id), name_(std::move(name)) {}

  void expect(bool ok, const std::string& detail) {
    if (!ok && first_failure_.empty()) {
      first_failure_ = detail;
    }
    ok_ = ok_ && ok;
  }

  template <typename T, typename U>
  void expect_eq(const T& actual, const U& expected,
                 const std::string& what) {
    std::ostringstream ss;
    if (!(actual == expected)) {
      ss << what << ": got \"" << actual << "\", want \"" << expected
         << "\"";
    }
    expect(actual == expected, ss.str());
  }

  ~Check() {
    if (ok_) {
      std::printf("[PASS] %02d %s\n", id_, name_.c_str());
    } else {
      std::printf("[FAIL] %02d %s - %s\n", id_, name_.c_str(),
                  first_failure_.c_str());
      ++g_failures;
    }
    std::fflush(stdout);
  }

 private:
  int id_;
  std::string name_;
  bool ok_ = true;
  std::string first_failure_;
};

EncodedDocument doc_from_text(std::string text) {
  EncodedDocument doc;
  doc.views.emplace_back("raw", text);
  doc.text = std::move(text);
  return doc;
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// ---------------------------------------------------------------------------

void check_01_name_views() {
  Check check(1, "name encoding reproduces the three golden views");
  const auto t0 = Clock::now();

  const EncodedDocument a = encode_name("!!!!yoB0yXX");
  check.expect_eq(a.views[0].second, "####yoB$yXX", "masked view");
  check.expect_eq(a.views[1].second, "0101", "binary view");
  check.expect_eq(a.views[2].second, "PPPPccCNcCC", "orthographic view");
  check.expect_eq(a.text, "####yoB$yXX 0101 PPPPccCNcCC", "output text");

  const EncodedDocument b = encode_name("Hot3YoGirlOnBeach");
  check.expect_eq(b.views[0].second, "Hot$YoGirlOnBeach", "masked view");
  check.expect_eq(b.views[1].second, "101", "binary view");
  check.expect_eq(b.views[2].second, "CccNCcCcccCcCcccc",
                  "orthographic view");
  check.expect_eq(b.text, "Hot$YoGirlOnBeach 101 CccNCcCcccCcCcccc",
                  "output text");

  // Masking is one '$' per digit and length preserving, so this input
  // yields $, $$ and $$$ runs for 5, 44 and 234.
  const EncodedDocument c = encode_name("FG5F44GDSdfs234DG");
  check.expect_eq(c.views[0].second, "FG$F$$GDSdfs$$$DG", "masked view");
  check.expect_eq(c.views[1].second, "1010101", "binary view");
  check.expect_eq(c.views[2].second, "CCNCNNCCCcccNNNCC",
                  "orthographic view");
  check.expect_eq(c.text, "FG$F$$GDSdfs$$$DG 1010101 CCNCNNCCCcccNNNCC",
                  "output text");

  const double secs =
      std::chrono::duration<double>(Clock::now() - t0).count();
  check.expect(secs < 1.0, "took too long");
}

void check_02_ngram_goldens() {
  Check check(2, "n-gram extraction reproduces the golden multisets");
  const auto t0 = Clock::now();

  const auto grams_of = [](const std::string& token, int n) {
    NgramConfig config;
    config.min_n = n;
    config.max_n = n;
    auto grams = extract_ngrams(doc_from_text(token), config);
    return std::multiset<std::string>(grams.begin(), grams.end());
  };
  using ms = std::multiset<std::string>;

  const std::string masked = "####yoB$yXX";
  check.expect(grams_of(masked, 2) == ms{"##", "##", "##", "#y", "yo", "oB",
                                         "B$", "$y", "yX", "XX"},
               "masked 2-grams");
  check.expect(grams_of(masked, 3) == ms{"###", "###", "##y", "#yo", "yoB",
                                         "oB$", "B$y", "$yX", "yXX"},
               "masked 3-grams");
  check.expect(grams_of(masked, 4) == ms{"####", "###y", "##yo", "#yoB",
                                         "yoB$", "oB$y", "B$yX", "$yXX"},
               "masked 4-grams");
  check.expect(grams_of(masked, 5) == ms{"####y", "###yo", "##yoB", "#yoB$",
                                         "yoB$y", "oB$yX", "B$yXX"},
               "masked 5-grams");

  check.expect(grams_of("0101", 2) == ms{"01", "10", "01"},
               "binary 2-grams");
  check.expect(grams_of("0101", 3) == ms{"010", "101"}, "binary 3-grams");
  check.expect(grams_of("0101", 4) == ms{"0101"}, "binary 4-grams");
  check.expect(grams_of("0101", 5).empty(), "binary 5-grams");

  const std::string orth = "PPPPccCNcCC";
  check.expect(grams_of(orth, 2) == ms{"PP", "PP", "PP", "Pc", "cc", "cC",
                                       "CN", "Nc", "cC", "CC"},
               "orthographic 2-grams");
  check.expect(grams_of(orth, 3) == ms{"PPP", "PPP", "PPc", "Pcc", "ccC",
                                       "cCN", "CNc", "NcC", "cCC"},
               "orthographic 3-grams");
  check.expect(grams_of(orth, 4) == ms{"PPPP", "PPPc", "PPcc", "PccC",
                                       "ccCN", "cCNc", "CNcC", "NcCC"},
               "orthographic 4-grams");
  check.expect(grams_of(orth, 5) == ms{"PPPPc", "PPPcc", "PPccC", "PccCN",
                                       "ccCNc", "cCNcC", "CNcCC"},
               "orthographic 5-grams");

  const double secs =
      std::chrono::duration<double>(Clock::now() - t0).count();
  check.expect(secs < 1.0, "took too long");
}

void check_03_path_pipeline() {
  Check check(3, "path encoding reproduces the golden flattened strings");
  const auto t0 = Clock::now();

  check.expect_eq(
      encode_path("/Home/Downloads/MyImages/MadridTrip_05_05_2020/IMG_1.png")
          .text,
      "Home Downloads My Images Madrid Trip#$$#$$#$$$$", "pipeline row 1");

  // Digits mask to '$': the second row carries "$Series", one character
  // apart from a '#Series' rendering.
  const std::string row2 =
      encode_path("l:/Videos/Voyeur/3SeriesMyBoy/deadpixel/deadpixel--ro10.avi")
          .text;
  check.expect_eq(row2, "l# Videos Voyeur $Series My Boy deadpixel",
                  "pipeline row 2");
  check.expect(row2 != "l# Videos Voyeur #Series My Boy deadpixel",
               "digit masked as '#' instead of '$'");

  check.expect(encode_path("/a.txt").degenerate(),
               "root-level file should degenerate");

  const double secs =
      std::chrono::duration<double>(Clock::now() - t0).count();
  check.expect(secs < 1.0, "took too long");
}

void check_04_fusion_max() {
  Check check(4, "fused confidence is the max over the two classifiers");
  const Prediction worked = fuse_standalone(
      make_prediction(0.20, PredictionSource::FNC),
      make_prediction(0.40, PredictionSource::FPC));
  check.expect(worked.p_positive == 0.40, "worked example 0.20 vs 0.40");

  std::mt19937_64 rng(404);
  for (int i = 0; i < 1000; ++i) {
    const double a = uniform01(rng);
    const double b = uniform01(rng);
    const Prediction fused =
        fuse_standalone(make_prediction(a, PredictionSource::FNC),
                        make_prediction(b, PredictionSource::FPC));
    if (fused.p_positive != std::max(a, b)) {
      check.expect(false, "fused != max at trial " + std::to_string(i));
      return;
    }
  }
  check.expect(true, "");
}

void check_05_iterative_or() {
  Check check(5, "iterative labels OR per-component labels, one call each");

  SynthConfig synth_config;
  synth_config.seed = 50;
  synth_config.n_positive = 120;
  synth_config.n_negative = 480;
  const Corpus corpus = generate(synth_config);
  NgramConfig ngram;
  ngram.min_df = 0.0;
  ngram.max_df = 1.0;
  const LogisticModel fnc = train(corpus, ModelKind::FNC, ngram,
                                  TrainConfig{});

  std::mt19937_64 rng(505);
  std::vector<std::string> pool = {"Downloads", "redfox",   "IMG_01",
                                   "summer",    "r3dfox",   "Pictures",
                                   "bluecat",   "notes",    "holiday",
                                   "Backup",    "gr33nowl", "Misc"};
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t depth = 1 + rng() % 8;
    std::vector<std::string> components;
    std::string path;
    for (std::size_t i = 0; i < depth; ++i) {
      components.push_back(pool[rng() % pool.size()]);
      path += "/" + components.back();
    }
    int calls = 0;
    const Prediction pred = classify_iterative(
        [&](const std::string& component) {
          ++calls;
          return predict(fnc, component);
        },
        path);
    if (calls != static_cast<int>(depth)) {
      check.expect(false, "expected " + std::to_string(depth) +
                              " calls, made " + std::to_string(calls));
      return;
    }
    bool any = false;
    for (const std::string& component : components) {
      any = any || predict(fnc, component).label == Label::Positive;
    }
    if (pred.label != (any ? Label::Positive : Label::Negative)) {
      check.expect(false, "label differs from component OR at trial " +
                              std::to_string(trial));
      return;
    }
  }
  check.expect(true, "");
}

void check_06_tfidf_oracle() {
  Check check(6, "tf-idf transform matches a dense brute-force reference");
  std::mt19937_64 rng(606);
  const std::string alphabet = "abxy01#$";

  const auto random_text = [&]() {
    std::string text;
    const std::size_t tokens = 1 + rng() % 3;
    for (std::size_t t = 0; t < tokens; ++t) {
      if (t > 0) text.push_back(' ');
      const std::size_t len = 1 + rng() % 8;
      for (std::size_t i = 0; i < len; ++i) {
        text.push_back(alphabet[rng() % alphabet.size()]);
      }
    }
    return text;
  };

  for (int corpus_trial = 0; corpus_trial < 10; ++corpus_trial) {
    const std::size_t n_docs = 3 + rng() % 48;
    std::vector<std::string> texts;
    std::vector<EncodedDocument> docs;
    for (std::size_t i = 0; i < n_docs; ++i) {
      texts.push_back(random_text());
      docs.push_back(doc_from_text(texts.back()));
    }
    NgramConfig config;
    config.min_df = 0.0;
    config.max_df = 1.0;

    // Dense reference with nested loops.
    std::map<std::string, int> df;
    const auto doc_grams = [&](const std::string& text) {
      std::vector<std::string> grams;
      std::istringstream tokens(text);
      std::string token;
      while (tokens >> token) {
        for (int n = config.min_n; n <= config.max_n; ++n) {
          if (static_cast<std::size_t>(n) > token.size()) break;
          for (std::size_t k = 0; k + n <= token.size(); ++k) {
            grams.push_back(token.substr(k, n));
          }
        }
      }
      return grams;
    };
    for (const std::string& text : texts) {
      const auto grams = doc_grams(text);
      for (const std::string& gram :
           std::set<std::string>(grams.begin(), grams.end())) {
        ++df[gram];
      }
    }
    std::vector<std::string> vocab;
    for (const auto& [gram, count] : df) vocab.push_back(gram);
    std::sort(vocab.begin(), vocab.end());
    std::vector<double> idf;
    for (const std::string& gram : vocab) {
      idf.push_back(std::log((1.0 + static_cast<double>(n_docs)) /
                             (1.0 + df[gram])) +
                    1.0);
    }

    const TfidfModel model = fit_tfidf(docs, config);
    if (model.vocabulary.grams != vocab) {
      check.expect(false, "vocabulary mismatch");
      return;
    }
    for (std::size_t i = 0; i < n_docs; ++i) {
      std::vector<double> dense(vocab.size(), 0.0);
      for (const std::string& gram : doc_grams(texts[i])) {
        const auto it = std::lower_bound(vocab.begin(), vocab.end(), gram);
        dense[static_cast<std::size_t>(it - vocab.begin())] += 1.0;
      }
      double norm_sq = 0.0;
      for (std::size_t j = 0; j < dense.size(); ++j) {
        dense[j] *= idf[j];
        norm_sq += dense[j] * dense[j];
      }
      if (norm_sq > 0.0) {
        for (double& v : dense) v /= std::sqrt(norm_sq);
      }
      const SparseVector vec = transform(model, docs[i]);
      std::vector<double> actual(vocab.size(), 0.0);
      for (std::size_t k = 0; k < vec.indices.size(); ++k) {
        actual[vec.indices[k]] = vec.values[k];
      }
      for (std::size_t j = 0; j < dense.size(); ++j) {
        if (std::abs(actual[j] - dense[j]) >= 1e-9) {
          check.expect(false, "component off by " +
                                  std::to_string(actual[j] - dense[j]));
          return;
        }
      }
    }
  }
  check.expect(true, "");
}

void check_07_gradient() {
  Check check(7, "analytic gradient matches finite differences; convexity");
  std::mt19937_64 rng(707);
  const std::map<Label, double> uniform_weights = {{Label::Positive, 1.0},
                                                   {Label::Negative, 1.0}};
  constexpr double h = 1e-5;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t dim = 4;
    std::vector<TrainingSample> samples(5);
    for (auto& sample : samples) {
      sample.x.dim = dim;
      for (std::uint32_t j = 0; j < dim; ++j) {
        if (rng() % 2) {
          sample.x.indices.push_back(j);
          sample.x.values.push_back(uniform01(rng) * 2.0 - 1.0);
        }
      }
      if (sample.x.indices.empty()) {
        sample.x.indices.push_back(0);
        sample.x.values.push_back(0.5);
      }
      sample.y = rng() % 2 ? Label::Positive : Label::Negative;
    }
    TrainConfig config;
    config.c = trial % 2 ? 5.0 : 1.0;
    std::vector<double> w(dim);
    for (double& v : w) v = uniform01(rng) - 0.5;
    const double b = uniform01(rng) - 0.5;

    const LossGradient lg =
        loss_and_gradient(w, b, samples, config, uniform_weights);
    for (std::size_t j = 0; j <= dim; ++j) {
      std::vector<double> wp = w, wm = w;
      double bp = b, bm = b;
      if (j < dim) {
        wp[j] += h;
        wm[j] -= h;
      } else {
        bp += h;
        bm -= h;
      }
      const double fd =
          (loss_only(wp, bp, samples, config, uniform_weights) -
           loss_only(wm, bm, samples, config, uniform_weights)) /
          (2.0 * h);
      const double analytic = j < dim ? lg.grad_weights[j] : lg.grad_bias;
      const double scale = std::max({1.0, std::abs(analytic), std::abs(fd)});
      if (std::abs(analytic - fd) / scale > 1e-5) {
        check.expect(false, "gradient mismatch at trial " +
                                std::to_string(trial));
        return;
      }
    }

    // Midpoint convexity.
    std::vector<double> w1(dim), w2(dim), mid(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      w1[j] = uniform01(rng) * 4.0 - 2.0;
      w2[j] = uniform01(rng) * 4.0 - 2.0;
      mid[j] = 0.5 * (w1[j] + w2[j]);
    }
    const double j1 = loss_only(w1, 0.1, samples, config, uniform_weights);
    const double j2 = loss_only(w2, -0.3, samples, config, uniform_weights);
    const double jm = loss_only(mid, -0.1, samples, config, uniform_weights);
    if (jm > 0.5 * (j1 + j2) + 1e-9) {
      check.expect(false, "convexity violated at trial " +
                              std::to_string(trial));
      return;
    }
  }
  check.expect(true, "");
}

void check_08_separable_toy() {
  Check check(8, "training reaches accuracy 1.0 on a separable toy corpus");
  Corpus corpus;
  const std::vector<std::string> positives = {"axxb.png", "cxxd.png",
                                              "exxf.png", "gxxh.png",
                                              "ixxj.png"};
  const std::vector<std::string> negatives = {"abcd.png", "efgh.png",
                                              "ijkl.png", "mnop.png",
                                              "qrst.png"};
  for (const auto& name : positives) {
    corpus.add(FileEntry{name, "", Label::Positive});
  }
  for (const auto& name : negatives) {
    corpus.add(FileEntry{name, "", Label::Negative});
  }
  NgramConfig ngram;
  ngram.min_df = 0.0;
  ngram.max_df = 1.0;
  const LogisticModel model =
      train(corpus, ModelKind::FNC, ngram, TrainConfig{});
  std::size_t correct = 0;
  for (const FileEntry& entry : corpus.entries) {
    if (predict(model, entry.name).label == *entry.label) ++correct;
  }
  check.expect(correct == corpus.size(),
               "training accuracy " + std::to_string(correct) + "/10");
}

struct PipelineArtifacts {
  std::string fnc_bytes;
  std::string fpc_bytes;
  std::string report_text;
  double standalone_avg_recall = 0.0;
  double iterative_avg_recall = 0.0;
};

PipelineArtifacts run_pipeline() {
  SynthConfig synth_config;
  synth_config.seed = 7;
  synth_config.n_positive = 2000;
  synth_config.n_negative = 18000;
  synth_config.obfuscation_rate = 0.5;
  const Corpus corpus = generate(synth_config);
  const auto [train_set, test_set] = split(corpus, 0.8, 7);

  const NgramConfig ngram;  // 2..5 grams, df in [0.0005, 0.999]
  const TrainConfig train_config;  // C=100, balanced, <=1000 iterations
  const LogisticModel fnc = train(train_set, ModelKind::FNC, ngram,
                                  train_config);
  const LogisticModel fpc = train(train_set, ModelKind::FPC, ngram,
                                  train_config);

  std::vector<std::pair<Prediction, Label>> standalone, iterative;
  for (const FileEntry& entry : test_set.entries) {
    standalone.emplace_back(
        classify_file(FusionStrategy::TwoStandalone, fnc, &fpc, entry),
        *entry.label);
    iterative.emplace_back(
        classify_file(FusionStrategy::SingleIterative, fnc, nullptr, entry),
        *entry.label);
  }
  const EvalReport standalone_report = evaluate(standalone);
  const EvalReport iterative_report = evaluate(iterative);

  PipelineArtifacts artifacts;
  {
    std::ostringstream fnc_stream, fpc_stream;
    save_model(fnc, fnc_stream);
    save_model(fpc, fpc_stream);
    artifacts.fnc_bytes = fnc_stream.str();
    artifacts.fpc_bytes = fpc_stream.str();
  }
  artifacts.report_text = format_report(standalone_report, "standalone") +
                          "\n" +
                          format_report(iterative_report, "iterative");
  artifacts.standalone_avg_recall = standalone_report.macro_recall;
  artifacts.iterative_avg_recall = iterative_report.macro_recall;
  return artifacts;
}

const PipelineArtifacts& first_pipeline() {
  static const PipelineArtifacts artifacts = run_pipeline();
  return artifacts;
}

void check_09_end_to_end() {
  const auto t0 = Clock::now();
  const PipelineArtifacts& first = first_pipeline();
  const double secs =
      std::chrono::duration<double>(Clock::now() - t0).count();

  Check check(9, "end-to-end synthetic pipeline clears the recall bar");
  check.expect(first.standalone_avg_recall >= 0.95,
               "standalone average class recall " +
                   std::to_string(first.standalone_avg_recall));
  check.expect(
      first.standalone_avg_recall >= first.iterative_avg_recall,
      "standalone " + std::to_string(first.standalone_avg_recall) +
          " < iterative " + std::to_string(first.iterative_avg_recall));
  check.expect(secs < 300.0, "pipeline exceeded the time budget");
  std::printf("       standalone avg class recall %.4f, iterative %.4f "
              "(%.1fs)\n",
              first.standalone_avg_recall, first.iterative_avg_recall, secs);
}

void check_11_determinism() {
  const PipelineArtifacts& first = first_pipeline();
  const PipelineArtifacts second = run_pipeline();
  Check check(11, "repeated runs emit byte-identical models and reports");
  check.expect(second.fnc_bytes == first.fnc_bytes,
               "name model bytes differ between runs");
  check.expect(second.fpc_bytes == first.fpc_bytes,
               "path model bytes differ between runs");
  check.expect(second.report_text == first.report_text,
               "report bytes differ between runs");
}

void check_10_metrics_oracle() {
  Check check(10, "metric formulas match hand-computed values");
  const auto run_case = [&](std::uint64_t tp, std::uint64_t fp,
                            std::uint64_t fn, std::uint64_t tn) {
    std::vector<std::pair<Prediction, Label>> pairs;
    const auto emit = [&](std::uint64_t n, double p, Label truth) {
      for (std::uint64_t i = 0; i < n; ++i) {
        pairs.emplace_back(make_prediction(p, PredictionSource::Fused),
                           truth);
      }
    };
    emit(tp, 0.9, Label::Positive);
    emit(fp, 0.9, Label::Negative);
    emit(fn, 0.1, Label::Positive);
    emit(tn, 0.1, Label::Negative);
    const EvalReport report = evaluate(pairs);
    const double p =
        tp + fp == 0 ? 0.0 : static_cast<double>(tp) / (tp + fp);
    const double r =
        tp + fn == 0 ? 0.0 : static_cast<double>(tp) / (tp + fn);
    const double f = p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r);
    const ClassMetrics& m = report.per_class.at(Label::Positive);
    check.expect(std::abs(m.precision - p) < 1e-12, "precision mismatch");
    check.expect(std::abs(m.recall - r) < 1e-12, "recall mismatch");
    check.expect(std::abs(m.f1 - f) < 1e-12, "f1 mismatch");
    return f;
  };

  run_case(9, 0, 1, 10);
  run_case(8, 2, 0, 10);
  // precision 0.8, recall 0.9: harmonic mean 0.84705882...
  const double f = run_case(72, 18, 8, 2);
  check.expect(std::abs(f - (2.0 * (72.0 / 90.0) * (72.0 / 80.0) /
                             ((72.0 / 90.0) + (72.0 / 80.0)))) < 1e-12,
               "harmonic mean case");
  check.expect(std::abs(f - 0.8471) < 5e-5, "rounded value drifted");
}

}  // namespace

int main() {
  check_01_name_views();
  check_02_ngram_goldens();
  check_03_path_pipeline();
  check_04_fusion_max();
  check_05_iterative_or();
  check_06_tfidf_oracle();
  check_07_gradient();
  check_08_separable_toy();
  check_09_end_to_end();
  check_10_metrics_oracle();
  check_11_determinism();

  if (g_failures > 0) {
    std::printf("%d check(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all checks passed\n");
  return 0;
}
