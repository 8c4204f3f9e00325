// Command-line front end: train models, evaluate and compare fusion
// strategies, generate synthetic corpora, and scan directory trees into
// ranked triage reports. Classification uses file names and paths only;
// file contents are never opened.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fileclass/fileclass.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;  // bad flags, missing or malformed inputs
constexpr int kExitData = 3;   // single-class data, model problems

fileclass::CorpusFormat parse_format(const std::string& name) {
  if (name == "tsv") return fileclass::CorpusFormat::Tsv;
  if (name == "jsonl") return fileclass::CorpusFormat::Jsonl;
  throw fileclass::InputError("unknown corpus format: " + name);
}

fileclass::Corpus load_corpus_file(const std::string& path,
                                   const std::string& format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw fileclass::InputError("cannot open input file: " + path);
  }
  return fileclass::load_corpus(in, parse_format(format));
}

/// Models resolve against the given path first, then $FC_MODEL_DIR.
std::string resolve_model_path(const std::string& given) {
  std::error_code ec;
  if (fs::exists(given, ec)) return given;
  if (const char* dir = std::getenv("FC_MODEL_DIR");
      dir != nullptr && *dir != '\0' && fs::path(given).is_relative()) {
    const fs::path candidate = fs::path(dir) / given;
    if (fs::exists(candidate, ec)) return candidate.string();
  }
  throw fileclass::InputError("model file not found: " + given);
}

fileclass::LogisticModel load_model_file(const std::string& given) {
  const std::string path = resolve_model_path(given);
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw fileclass::InputError("cannot open model file: " + path);
  }
  return fileclass::load_model(in);
}

struct TrainOptions {
  std::string input;
  std::string output_model;
  std::string format = "tsv";
  bool dedup = false;
  fileclass::NgramConfig ngram;
  fileclass::TrainConfig train;
  std::string class_weight = "balanced";
};

int run_train(fileclass::ModelKind kind, const TrainOptions& opts) {
  fileclass::TrainConfig train_config = opts.train;
  if (opts.class_weight == "balanced") {
    train_config.class_weighting = fileclass::ClassWeighting::Balanced;
  } else if (opts.class_weight == "uniform") {
    train_config.class_weighting = fileclass::ClassWeighting::Uniform;
  } else {
    throw fileclass::InputError("unknown class weight mode: " +
                                opts.class_weight);
  }

  fileclass::Corpus corpus = load_corpus_file(opts.input, opts.format);
  if (opts.dedup) {
    const std::size_t before = corpus.size();
    corpus = fileclass::dedup_by_masked_name(corpus);
    std::cerr << "dedup: " << before << " -> " << corpus.size()
              << " entries\n";
  }

  fileclass::TrainStats stats;
  const fileclass::LogisticModel model =
      fileclass::train(corpus, kind, opts.ngram, train_config, &stats);

  std::ofstream out(opts.output_model, std::ios::binary);
  if (!out) {
    throw fileclass::InputError("cannot write model file: " +
                                opts.output_model);
  }
  fileclass::save_model(model, out);

  std::cout << "model: " << fileclass::model_kind_name(model.kind) << '\n'
            << "vocabulary size: " << model.tfidf.vocabulary.size() << '\n'
            << "final loss: " << stats.final_loss << '\n'
            << "iterations: " << stats.iterations << " ("
            << fileclass::stop_reason_name(stats.stop_reason) << ")\n";
  return kExitOk;
}

std::vector<std::pair<fileclass::Prediction, fileclass::Label>>
classify_labeled(const fileclass::Corpus& corpus,
                 fileclass::FusionStrategy strategy,
                 const fileclass::LogisticModel& fnc,
                 const fileclass::LogisticModel* fpc) {
  std::vector<std::pair<fileclass::Prediction, fileclass::Label>> pairs;
  std::size_t skipped = 0;
  for (const fileclass::FileEntry& entry : corpus.entries) {
    if (!entry.label) {
      ++skipped;
      continue;
    }
    pairs.emplace_back(fileclass::classify_file(strategy, fnc, fpc, entry),
                       *entry.label);
  }
  if (skipped > 0) {
    std::cerr << "warning: skipped " << skipped << " unlabeled entries\n";
  }
  if (pairs.empty()) {
    throw fileclass::DataError("eval: no labeled entries in input");
  }
  return pairs;
}

json metrics_to_json(std::string_view strategy, std::string_view cls,
                     const fileclass::ClassMetrics& m) {
  json line;
  line["strategy"] = std::string(strategy);
  line["class"] = std::string(cls);
  line["precision"] = m.precision;
  line["recall"] = m.recall;
  line["f1"] = m.f1;
  line["support"] = m.support;
  return line;
}

void write_report_json(std::ostream& out, const fileclass::EvalReport& report,
                       std::string_view strategy) {
  using fileclass::Label;
  for (const Label label : {Label::Negative, Label::Positive}) {
    out << metrics_to_json(strategy, fileclass::label_name(label),
                           report.per_class.at(label))
               .dump()
        << '\n';
  }
  fileclass::ClassMetrics avg;
  avg.precision = report.macro_precision;
  avg.recall = report.macro_recall;
  avg.f1 = report.macro_f1;
  avg.support = report.total_support;
  out << metrics_to_json(strategy, "average", avg).dump() << '\n';
}

struct EvalOptions {
  std::string strategy = "standalone";
  std::string fnc;
  std::string fpc;
  std::string input;
  std::string format = "tsv";
  std::string json_out;
  bool compare = false;
};

int run_eval(const EvalOptions& opts) {
  const fileclass::Corpus corpus = load_corpus_file(opts.input, opts.format);
  const fileclass::LogisticModel fnc = load_model_file(opts.fnc);
  if (fnc.kind != fileclass::ModelKind::FNC) {
    throw fileclass::DataError("--fnc model is not a file-name model");
  }
  std::optional<fileclass::LogisticModel> fpc;
  if (!opts.fpc.empty()) {
    fpc = load_model_file(opts.fpc);
    if (fpc->kind != fileclass::ModelKind::FPC) {
      throw fileclass::DataError("--fpc model is not a file-path model");
    }
  }

  std::ostringstream json_lines;
  const auto run_one = [&](fileclass::FusionStrategy strategy) {
    const auto pairs = classify_labeled(
        corpus, strategy, fnc, fpc ? &fpc.value() : nullptr);
    const fileclass::EvalReport report = fileclass::evaluate(pairs);
    std::cout << fileclass::format_report(
        report, fileclass::fusion_strategy_name(strategy));
    write_report_json(json_lines, report,
                      fileclass::fusion_strategy_name(strategy));
    return report;
  };

  if (opts.compare) {
    if (!fpc) {
      throw fileclass::DataError("--compare requires both --fnc and --fpc");
    }
    run_one(fileclass::FusionStrategy::TwoStandalone);
    std::cout << '\n';
    run_one(fileclass::FusionStrategy::SingleIterative);
  } else if (opts.strategy == "standalone") {
    if (!fpc) {
      throw fileclass::DataError(
          "standalone strategy requires --fpc; pass a path model or use "
          "--strategy iterative");
    }
    run_one(fileclass::FusionStrategy::TwoStandalone);
  } else if (opts.strategy == "iterative") {
    if (fpc) {
      std::cerr << "warning: --strategy iterative ignores --fpc\n";
      fpc.reset();
    }
    run_one(fileclass::FusionStrategy::SingleIterative);
  } else {
    throw fileclass::InputError("unknown strategy: " + opts.strategy);
  }

  if (!opts.json_out.empty()) {
    std::ofstream out(opts.json_out, std::ios::binary);
    if (!out) {
      throw fileclass::InputError("cannot write json report: " +
                                  opts.json_out);
    }
    out << json_lines.str();
  }
  return kExitOk;
}

struct ScanOptions {
  std::string root;
  std::string fnc;
  std::string fpc;
  std::string strategy = "standalone";
  double threshold = 0.0;
  std::size_t limit = 0;  // 0 = unlimited
  std::string output = "jsonl";
  std::string out_path;
};

struct ScanRecord {
  std::string path;
  std::string name;
  double p_positive = 0.0;
  fileclass::Label label = fileclass::Label::Negative;
};

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n\r") == std::string::npos) return value;
  std::string quoted = "\"";
  for (const char c : value) {
    if (c == '"') quoted += "\"\"";
    else quoted.push_back(c);
  }
  quoted.push_back('"');
  return quoted;
}

int run_scan(const ScanOptions& opts) {
  std::error_code ec;
  const fs::path root(opts.root);
  if (!fs::exists(root, ec) || !fs::is_directory(root, ec)) {
    std::cerr << "error: cannot read scan root: " << opts.root << '\n';
    return kExitUsage;
  }

  const fileclass::LogisticModel fnc = load_model_file(opts.fnc);
  std::optional<fileclass::LogisticModel> fpc;
  fileclass::FusionStrategy strategy;
  if (opts.strategy == "standalone") {
    strategy = fileclass::FusionStrategy::TwoStandalone;
    if (opts.fpc.empty()) {
      throw fileclass::DataError(
          "standalone strategy requires --fpc; pass a path model or use "
          "--strategy iterative");
    }
    fpc = load_model_file(opts.fpc);
  } else if (opts.strategy == "iterative") {
    strategy = fileclass::FusionStrategy::SingleIterative;
    if (!opts.fpc.empty()) {
      std::cerr << "warning: --strategy iterative ignores --fpc\n";
    }
  } else {
    throw fileclass::InputError("unknown strategy: " + opts.strategy);
  }

  std::string model_versions =
      "fnc=" + std::to_string(fileclass::kModelFormatVersion);
  if (fpc) {
    model_versions +=
        ",fpc=" + std::to_string(fileclass::kModelFormatVersion);
  }

  // Names and paths only; file contents are never opened.
  std::vector<ScanRecord> records;
  fs::recursive_directory_iterator it(
      root, fs::directory_options::skip_permission_denied, ec);
  if (ec) {
    std::cerr << "error: cannot read scan root: " << opts.root << " ("
              << ec.message() << ")\n";
    return kExitUsage;
  }
  const fs::recursive_directory_iterator end;
  while (it != end) {
    const fs::directory_entry& dirent = *it;
    std::error_code entry_ec;
    const bool regular = dirent.is_regular_file(entry_ec);
    if (entry_ec) {
      std::cerr << "warning: skipping " << dirent.path().string() << ": "
                << entry_ec.message() << '\n';
    } else if (regular) {
      fileclass::FileEntry entry;
      entry.name = dirent.path().filename().string();
      entry.path = dirent.path().string();
      const fileclass::Prediction pred = fileclass::classify_file(
          strategy, fnc, fpc ? &fpc.value() : nullptr, entry);
      records.push_back(
          ScanRecord{entry.path, entry.name, pred.p_positive, pred.label});
    }
    it.increment(entry_ec);
    if (entry_ec) {
      std::cerr << "warning: stopping descent: " << entry_ec.message()
                << '\n';
      break;
    }
  }

  // Ranked triage order: most suspicious first, ties broken by path so
  // repeated runs emit identical bytes.
  std::sort(records.begin(), records.end(),
            [](const ScanRecord& a, const ScanRecord& b) {
              if (a.p_positive != b.p_positive) {
                return a.p_positive > b.p_positive;
              }
              return a.path < b.path;
            });

  std::ofstream file_out;
  std::ostream* out = &std::cout;
  if (!opts.out_path.empty()) {
    file_out.open(opts.out_path, std::ios::binary);
    if (!file_out) {
      throw fileclass::InputError("cannot write output file: " +
                                  opts.out_path);
    }
    out = &file_out;
  }

  std::size_t emitted = 0;
  const bool csv = opts.output == "csv";
  if (!csv && opts.output != "jsonl") {
    throw fileclass::InputError("unknown output format: " + opts.output);
  }
  if (csv) {
    *out << "p_positive,label,path,name\n";
  }
  for (const ScanRecord& rec : records) {
    if (rec.p_positive < opts.threshold) continue;
    if (opts.limit > 0 && emitted >= opts.limit) break;
    if (csv) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.6f", rec.p_positive);
      *out << buf << ',' << fileclass::label_tag(rec.label) << ','
           << csv_field(rec.path) << ',' << csv_field(rec.name) << '\n';
    } else {
      json line;
      line["path"] = rec.path;
      line["name"] = rec.name;
      line["p_positive"] = rec.p_positive;
      line["label"] = std::string(fileclass::label_tag(rec.label));
      line["strategy"] = opts.strategy;
      line["model_versions"] = model_versions;
      *out << line.dump() << '\n';
    }
    ++emitted;
  }
  return kExitOk;
}

struct SynthOptions {
  fileclass::SynthConfig config;
  std::string keywords;
  std::string out_path;
};

int run_synth(const SynthOptions& opts) {
  fileclass::SynthConfig config = opts.config;
  if (!opts.keywords.empty()) {
    config.keyword_list.clear();
    std::stringstream ss(opts.keywords);
    std::string word;
    while (std::getline(ss, word, ',')) {
      if (!word.empty()) config.keyword_list.push_back(word);
    }
  }
  const fileclass::Corpus corpus = fileclass::generate(config);
  std::ofstream out(opts.out_path, std::ios::binary);
  if (!out) {
    throw fileclass::InputError("cannot write output file: " + opts.out_path);
  }
  fileclass::save_corpus(corpus, out, fileclass::CorpusFormat::Tsv);
  std::cout << "wrote " << corpus.size() << " entries ("
            << corpus.count(fileclass::Label::Positive) << " pos, "
            << corpus.count(fileclass::Label::Negative) << " neg) to "
            << opts.out_path << '\n';
  return kExitOk;
}

struct SplitOptions {
  std::string input;
  std::string format = "tsv";
  double fraction = 0.8;
  std::uint64_t seed = 0;
  std::string train_out;
  std::string test_out;
};

int run_split(const SplitOptions& opts) {
  const fileclass::Corpus corpus = load_corpus_file(opts.input, opts.format);
  const auto [train_set, test_set] =
      fileclass::split(corpus, opts.fraction, opts.seed);
  const auto write = [&](const fileclass::Corpus& part,
                         const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw fileclass::InputError("cannot write output file: " + path);
    }
    fileclass::save_corpus(part, out, parse_format(opts.format));
  };
  write(train_set, opts.train_out);
  write(test_set, opts.test_out);
  std::cout << "train: " << train_set.size() << " entries, test: "
            << test_set.size() << " entries\n";
  return kExitOk;
}

void add_ngram_flags(CLI::App* cmd, fileclass::NgramConfig& ngram) {
  cmd->add_option("--min-n", ngram.min_n, "Smallest gram length")
      ->capture_default_str();
  cmd->add_option("--max-n", ngram.max_n, "Largest gram length")
      ->capture_default_str();
  cmd->add_option("--min-df", ngram.min_df,
                  "Minimum document-frequency proportion")
      ->capture_default_str();
  cmd->add_option("--max-df", ngram.max_df,
                  "Maximum document-frequency proportion")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "fileclass - file triage by name and path\n"
      "Trains and applies character n-gram classifiers over file names "
      "and absolute paths; file contents are never read."};
  app.require_subcommand(1);

  TrainOptions train_opts;
  const auto add_train = [&](const std::string& name,
                             const std::string& desc) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    cmd->add_option("--input", train_opts.input,
                    "Labeled corpus (tsv: label<TAB>name<TAB>path)")
        ->required();
    cmd->add_option("--output-model", train_opts.output_model,
                    "Where to write the .fcmodel file")
        ->required();
    cmd->add_option("--format", train_opts.format, "Corpus format")
        ->check(CLI::IsMember({"tsv", "jsonl"}))
        ->capture_default_str();
    add_ngram_flags(cmd, train_opts.ngram);
    cmd->add_option("--c", train_opts.train.c,
                    "Inverse regularization strength")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--class-weight", train_opts.class_weight,
                    "balanced or uniform")
        ->check(CLI::IsMember({"balanced", "uniform"}))
        ->capture_default_str();
    cmd->add_option("--max-iterations", train_opts.train.max_iterations,
                    "Optimizer iteration cap")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--tolerance", train_opts.train.tolerance,
                    "Gradient-norm stop threshold")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_flag("--dedup", train_opts.dedup,
                  "Drop entries whose masked names repeat");
    return cmd;
  };
  CLI::App* train_name =
      add_train("train-name", "Train the file-name classifier (FNC)");
  CLI::App* train_path =
      add_train("train-path", "Train the file-path classifier (FPC)");

  EvalOptions eval_opts;
  CLI::App* eval_cmd =
      app.add_subcommand("eval", "Evaluate models on a labeled test set");
  eval_cmd->add_option("--strategy", eval_opts.strategy,
                       "standalone or iterative")
      ->check(CLI::IsMember({"standalone", "iterative"}))
      ->capture_default_str();
  eval_cmd->add_option("--fnc", eval_opts.fnc, "File-name model")->required();
  eval_cmd->add_option("--fpc", eval_opts.fpc, "File-path model");
  eval_cmd->add_option("--input", eval_opts.input, "Labeled test corpus")
      ->required();
  eval_cmd->add_option("--format", eval_opts.format, "Corpus format")
      ->check(CLI::IsMember({"tsv", "jsonl"}))
      ->capture_default_str();
  eval_cmd->add_option("--json", eval_opts.json_out,
                       "Write the report as JSON lines to this file");
  eval_cmd->add_flag("--compare", eval_opts.compare,
                     "Run both strategies and print both reports");

  ScanOptions scan_opts;
  CLI::App* scan_cmd = app.add_subcommand(
      "scan", "Walk a directory tree and rank files by suspicion");
  scan_cmd->add_option("root", scan_opts.root, "Directory to scan")
      ->required();
  scan_cmd->add_option("--fnc", scan_opts.fnc, "File-name model")->required();
  scan_cmd->add_option("--fpc", scan_opts.fpc, "File-path model");
  scan_cmd->add_option("--strategy", scan_opts.strategy,
                       "standalone or iterative")
      ->check(CLI::IsMember({"standalone", "iterative"}))
      ->capture_default_str();
  scan_cmd->add_option("--threshold", scan_opts.threshold,
                       "Only emit records with p_positive >= threshold")
      ->capture_default_str();
  scan_cmd->add_option("--limit", scan_opts.limit,
                       "Emit at most this many records (0 = all)")
      ->capture_default_str();
  scan_cmd->add_option("--output", scan_opts.output, "jsonl or csv")
      ->check(CLI::IsMember({"jsonl", "csv"}))
      ->capture_default_str();
  scan_cmd->add_option("--out", scan_opts.out_path,
                       "Output file (default: stdout)");

  SynthOptions synth_opts;
  CLI::App* synth_cmd = app.add_subcommand(
      "synth", "Generate a labeled synthetic corpus as TSV");
  synth_cmd->add_option("--seed", synth_opts.config.seed, "Generator seed")
      ->capture_default_str();
  synth_cmd->add_option("--positives", synth_opts.config.n_positive,
                        "Number of positive entries")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  synth_cmd->add_option("--negatives", synth_opts.config.n_negative,
                        "Number of negative entries")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  synth_cmd->add_option("--obfuscation-rate",
                        synth_opts.config.obfuscation_rate,
                        "Probability of leet swaps and punctuation prefixes")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  synth_cmd->add_option("--depth-min", synth_opts.config.depth_min,
                        "Minimum path depth")
      ->capture_default_str();
  synth_cmd->add_option("--depth-max", synth_opts.config.depth_max,
                        "Maximum path depth")
      ->capture_default_str();
  synth_cmd->add_option("--keywords", synth_opts.keywords,
                        "Comma-separated planted keywords");
  synth_cmd->add_option("--out", synth_opts.out_path, "Output TSV file")
      ->required();

  SplitOptions split_opts;
  CLI::App* split_cmd = app.add_subcommand(
      "split", "Deterministic stratified train/test split");
  split_cmd->add_option("--input", split_opts.input, "Labeled corpus")
      ->required();
  split_cmd->add_option("--format", split_opts.format, "Corpus format")
      ->check(CLI::IsMember({"tsv", "jsonl"}))
      ->capture_default_str();
  split_cmd->add_option("--fraction", split_opts.fraction,
                        "Training fraction")
      ->capture_default_str();
  split_cmd->add_option("--seed", split_opts.seed, "Shuffle seed")
      ->capture_default_str();
  split_cmd->add_option("--train-out", split_opts.train_out,
                        "Training output file")
      ->required();
  split_cmd->add_option("--test-out", split_opts.test_out,
                        "Test output file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (train_name->parsed()) {
      return run_train(fileclass::ModelKind::FNC, train_opts);
    }
    if (train_path->parsed()) {
      return run_train(fileclass::ModelKind::FPC, train_opts);
    }
    if (eval_cmd->parsed()) return run_eval(eval_opts);
    if (scan_cmd->parsed()) return run_scan(scan_opts);
    if (synth_cmd->parsed()) return run_synth(synth_opts);
    if (split_cmd->parsed()) return run_split(split_opts);
  } catch (const fileclass::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const fileclass::DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitOk;
}
