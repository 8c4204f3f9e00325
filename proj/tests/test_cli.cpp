#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#ifndef FILECLASS_CLI_PATH
#error "FILECLASS_CLI_PATH must point at the built binary"
#endif

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

/// Shared scratch space: one synthetic corpus and one trained model pair
/// for the whole test binary.
struct CliWorkspace {
  fs::path dir;
  fs::path corpus_tsv;
  fs::path train_tsv;
  fs::path test_tsv;
  fs::path fnc_model;
  fs::path fpc_model;

  RunResult run(const std::string& args, const std::string& env = "") {
    const fs::path out_file = dir / "stdout.txt";
    const fs::path err_file = dir / "stderr.txt";
    std::string cmd = env.empty() ? "" : env + " ";
    cmd += std::string(FILECLASS_CLI_PATH) + " " + args + " > " +
           out_file.string() + " 2> " + err_file.string();
    const int status = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out_file);
    result.err = slurp(err_file);
    return result;
  }

  static CliWorkspace& instance() {
    static CliWorkspace ws = [] {
      CliWorkspace w;
      w.dir = fs::temp_directory_path() /
              ("fileclass_cli_" + std::to_string(::getpid()));
      fs::remove_all(w.dir);
      fs::create_directories(w.dir);
      w.corpus_tsv = w.dir / "corpus.tsv";
      w.train_tsv = w.dir / "train.tsv";
      w.test_tsv = w.dir / "test.tsv";
      w.fnc_model = w.dir / "fnc.fcmodel";
      w.fpc_model = w.dir / "fpc.fcmodel";

      REQUIRE(w.run("synth --seed 3 --positives 250 --negatives 1000 "
                    "--obfuscation-rate 0.5 --out " +
                    w.corpus_tsv.string())
                  .exit_code == 0);
      REQUIRE(w.run("split --input " + w.corpus_tsv.string() +
                    " --fraction 0.8 --seed 1 --train-out " +
                    w.train_tsv.string() + " --test-out " +
                    w.test_tsv.string())
                  .exit_code == 0);
      REQUIRE(w.run("train-name --input " + w.train_tsv.string() +
                    " --output-model " + w.fnc_model.string())
                  .exit_code == 0);
      REQUIRE(w.run("train-path --input " + w.train_tsv.string() +
                    " --output-model " + w.fpc_model.string())
                  .exit_code == 0);
      return w;
    }();
    return ws;
  }
};

}  // namespace

TEST_CASE("synth output is deterministic and loadable") {
  CliWorkspace& ws = CliWorkspace::instance();
  const fs::path again = ws.dir / "corpus_again.tsv";
  REQUIRE(ws.run("synth --seed 3 --positives 250 --negatives 1000 "
                 "--obfuscation-rate 0.5 --out " +
                 again.string())
              .exit_code == 0);
  CHECK(slurp(again) == slurp(ws.corpus_tsv));
}

TEST_CASE("synth rejects zero counts") {
  CliWorkspace& ws = CliWorkspace::instance();
  const RunResult res =
      ws.run("synth --positives 0 --out " + (ws.dir / "x.tsv").string());
  CHECK(res.exit_code == 2);
}

TEST_CASE("train usage and validation errors exit 2") {
  CliWorkspace& ws = CliWorkspace::instance();
  CHECK(ws.run("train-name --output-model x.fcmodel").exit_code == 2);
  CHECK(ws.run("train-name --input /no/such/file.tsv --output-model " +
               (ws.dir / "x.fcmodel").string())
            .exit_code == 2);
  CHECK(ws.run("train-name --input " + ws.train_tsv.string() +
               " --output-model " + (ws.dir / "x.fcmodel").string() +
               " --c 0")
            .exit_code == 2);
}

TEST_CASE("single-class data exits 3") {
  CliWorkspace& ws = CliWorkspace::instance();
  const fs::path single = ws.dir / "single.tsv";
  spit(single, "pos\ta.png\t/d/a.png\npos\tb.png\t/d/b.png\n");
  const RunResult res =
      ws.run("train-name --input " + single.string() + " --output-model " +
             (ws.dir / "single.fcmodel").string());
  CHECK(res.exit_code == 3);
  CHECK(res.err.find("single class") != std::string::npos);
}

TEST_CASE("training is byte-reproducible") {
  CliWorkspace& ws = CliWorkspace::instance();
  const fs::path again = ws.dir / "fnc_again.fcmodel";
  REQUIRE(ws.run("train-name --input " + ws.train_tsv.string() +
                 " --output-model " + again.string())
              .exit_code == 0);
  CHECK(slurp(again) == slurp(ws.fnc_model));
}

TEST_CASE("train reports vocabulary size and final loss") {
  CliWorkspace& ws = CliWorkspace::instance();
  const RunResult res =
      ws.run("train-name --input " + ws.train_tsv.string() +
             " --output-model " + (ws.dir / "report.fcmodel").string());
  REQUIRE(res.exit_code == 0);
  CHECK(res.out.find("vocabulary size:") != std::string::npos);
  CHECK(res.out.find("final loss:") != std::string::npos);
}

TEST_CASE("train-name --dedup collapses masked duplicates") {
  CliWorkspace& ws = CliWorkspace::instance();
  const fs::path dup = ws.dir / "dup.tsv";
  std::string rows;
  for (int i = 10; i < 60; ++i) {
    rows += "neg\tIMG" + std::to_string(i) + ".png\t/d/a\n";
  }
  rows += "pos\txredfoxy.png\t/d/b\n";
  rows += "pos\tzredfoxq.png\t/d/b\n";
  spit(dup, rows);
  const RunResult res = ws.run(
      "train-name --input " + dup.string() + " --output-model " +
      (ws.dir / "dup.fcmodel").string() + " --min-df 0 --max-df 1 --dedup");
  REQUIRE(res.exit_code == 0);
  // 50 masked-identical negatives collapse to one.
  CHECK(res.err.find("52 -> 3") != std::string::npos);
}

TEST_CASE("eval requires a path model for standalone fusion") {
  CliWorkspace& ws = CliWorkspace::instance();
  const RunResult res = ws.run("eval --strategy standalone --fnc " +
                               ws.fnc_model.string() + " --input " +
                               ws.test_tsv.string());
  CHECK(res.exit_code == 3);
}

TEST_CASE("eval iterative warns about an ignored path model") {
  CliWorkspace& ws = CliWorkspace::instance();
  const RunResult res = ws.run("eval --strategy iterative --fnc " +
                               ws.fnc_model.string() + " --fpc " +
                               ws.fpc_model.string() + " --input " +
                               ws.test_tsv.string());
  REQUIRE(res.exit_code == 0);
  CHECK(res.err.find("ignores --fpc") != std::string::npos);
}

TEST_CASE("eval prints a report and writes json lines") {
  CliWorkspace& ws = CliWorkspace::instance();
  const fs::path json_path = ws.dir / "report.jsonl";
  const RunResult res = ws.run("eval --strategy standalone --fnc " +
                               ws.fnc_model.string() + " --fpc " +
                               ws.fpc_model.string() + " --input " +
                               ws.test_tsv.string() + " --json " +
                               json_path.string());
  REQUIRE(res.exit_code == 0);
  CHECK(res.out.find("standalone") != std::string::npos);
  CHECK(res.out.find("average") != std::string::npos);

  std::ifstream in(json_path);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    const auto obj = nlohmann::json::parse(line);
    CHECK(obj.contains("precision"));
    CHECK(obj.contains("recall"));
    ++lines;
  }
  CHECK(lines == 3);  // negative, positive, average
}

TEST_CASE("eval --compare emits exactly two strategy blocks") {
  CliWorkspace& ws = CliWorkspace::instance();
  const RunResult res = ws.run("eval --compare --fnc " +
                               ws.fnc_model.string() + " --fpc " +
                               ws.fpc_model.string() + " --input " +
                               ws.test_tsv.string());
  REQUIRE(res.exit_code == 0);
  CHECK(res.out.find("standalone") != std::string::npos);
  CHECK(res.out.find("iterative") != std::string::npos);
  std::size_t blocks = 0, pos = 0;
  while ((pos = res.out.find("average", pos)) != std::string::npos) {
    ++blocks;
    pos += 7;
  }
  CHECK(blocks == 2);
}

TEST_CASE("scan ranks a planted name first and honors limit/threshold") {
  CliWorkspace& ws = CliWorkspace::instance();
  const fs::path tree = ws.dir / "tree";
  fs::create_directories(tree / "d");
  fs::create_directories(tree / "Pictures");
  spit(tree / "d" / "redf0x_7yo.jpg", "x");
  spit(tree / "Pictures" / "IMG_2041.jpg", "x");
  spit(tree / "Pictures" / "garden_notes.png", "x");
  spit(tree / "holiday_summer.png", "x");

  const RunResult res = ws.run("scan " + tree.string() + " --fnc " +
                               ws.fnc_model.string() + " --fpc " +
                               ws.fpc_model.string());
  REQUIRE(res.exit_code == 0);
  std::istringstream lines(res.out);
  std::string first_line;
  REQUIRE(std::getline(lines, first_line));
  const auto first = nlohmann::json::parse(first_line);
  CHECK(first.at("name").get<std::string>() == "redf0x_7yo.jpg");
  CHECK(first.at("strategy").get<std::string>() == "standalone");
  CHECK(first.at("model_versions").get<std::string>() == "fnc=1,fpc=1");

  // Confidence must be non-increasing down the report.
  double prev = 2.0;
  int records = 1;
  double p = first.at("p_positive").get<double>();
  prev = p;
  std::string line;
  while (std::getline(lines, line)) {
    const auto obj = nlohmann::json::parse(line);
    const double cur = obj.at("p_positive").get<double>();
    CHECK(cur <= prev);
    prev = cur;
    ++records;
  }
  CHECK(records == 4);

  const RunResult limited = ws.run("scan " + tree.string() + " --fnc " +
                                   ws.fnc_model.string() + " --fpc " +
                                   ws.fpc_model.string() + " --limit 2");
  int limited_count = 0;
  std::istringstream limited_lines(limited.out);
  while (std::getline(limited_lines, line)) ++limited_count;
  CHECK(limited_count == 2);

  const RunResult thresholded =
      ws.run("scan " + tree.string() + " --fnc " + ws.fnc_model.string() +
             " --fpc " + ws.fpc_model.string() + " --threshold 0.5");
  std::istringstream t_lines(thresholded.out);
  while (std::getline(t_lines, line)) {
    const auto obj = nlohmann::json::parse(line);
    CHECK(obj.at("p_positive").get<double>() >= 0.5);
  }
}

TEST_CASE("scan emits csv with the documented column order") {
  CliWorkspace& ws = CliWorkspace::instance();
  const fs::path tree = ws.dir / "tree_csv";
  fs::create_directories(tree);
  spit(tree / "IMG_100.jpg", "x");
  const RunResult res = ws.run("scan " + tree.string() + " --fnc " +
                               ws.fnc_model.string() +
                               " --strategy iterative --output csv");
  REQUIRE(res.exit_code == 0);
  CHECK(res.out.rfind("p_positive,label,path,name\n", 0) == 0);
}

TEST_CASE("scan classifies files whose contents are unreadable") {
  CliWorkspace& ws = CliWorkspace::instance();
  const fs::path tree = ws.dir / "tree_perm";
  fs::create_directories(tree);
  spit(tree / "locked_report.png", "x");
  fs::permissions(tree / "locked_report.png", fs::perms::none);
  const RunResult res = ws.run("scan " + tree.string() + " --fnc " +
                               ws.fnc_model.string() +
                               " --strategy iterative");
  REQUIRE(res.exit_code == 0);
  CHECK(res.out.find("locked_report.png") != std::string::npos);
  fs::permissions(tree / "locked_report.png", fs::perms::owner_all);
}

TEST_CASE("scan on an empty directory emits nothing, exit 0") {
  CliWorkspace& ws = CliWorkspace::instance();
  const fs::path tree = ws.dir / "tree_empty";
  fs::create_directories(tree);
  const RunResult res = ws.run("scan " + tree.string() + " --fnc " +
                               ws.fnc_model.string() +
                               " --strategy iterative");
  CHECK(res.exit_code == 0);
  CHECK(res.out.empty());
}

TEST_CASE("scan with an unreadable root exits 2") {
  CliWorkspace& ws = CliWorkspace::instance();
  const RunResult res = ws.run("scan /no/such/dir --fnc " +
                               ws.fnc_model.string() +
                               " --strategy iterative");
  CHECK(res.exit_code == 2);
}

TEST_CASE("models resolve through FC_MODEL_DIR") {
  CliWorkspace& ws = CliWorkspace::instance();
  const fs::path model_dir = ws.dir / "models";
  fs::create_directories(model_dir);
  fs::copy_file(ws.fnc_model, model_dir / "env_fnc.fcmodel",
                fs::copy_options::overwrite_existing);
  const RunResult res =
      ws.run("eval --strategy iterative --fnc env_fnc.fcmodel --input " +
                 ws.test_tsv.string(),
             "FC_MODEL_DIR=" + model_dir.string());
  CHECK(res.exit_code == 0);
  const RunResult missing =
      ws.run("eval --strategy iterative --fnc env_fnc.fcmodel --input " +
             ws.test_tsv.string());
  CHECK(missing.exit_code == 2);
}

TEST_CASE("eval rejects a model of the wrong kind") {
  CliWorkspace& ws = CliWorkspace::instance();
  const RunResult res = ws.run("eval --strategy iterative --fnc " +
                               ws.fpc_model.string() + " --input " +
                               ws.test_tsv.string());
  CHECK(res.exit_code == 3);
  CHECK(res.err.find("not a file-name model") != std::string::npos);
}

TEST_CASE("repeated scans emit identical bytes") {
  CliWorkspace& ws = CliWorkspace::instance();
  const fs::path tree = ws.dir / "tree_repeat";
  fs::create_directories(tree / "a");
  fs::create_directories(tree / "b");
  spit(tree / "a" / "summer_1.jpg", "x");
  spit(tree / "b" / "summer_2.jpg", "x");
  spit(tree / "redfox_pics.jpg", "x");
  const std::string cmd = "scan " + tree.string() + " --fnc " +
                          ws.fnc_model.string() + " --fpc " +
                          ws.fpc_model.string();
  const RunResult a = ws.run(cmd);
  const RunResult b = ws.run(cmd);
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("identical cli runs produce identical bytes") {
  CliWorkspace& ws = CliWorkspace::instance();
  const RunResult a = ws.run("eval --compare --fnc " + ws.fnc_model.string() +
                             " --fpc " + ws.fpc_model.string() + " --input " +
                             ws.test_tsv.string());
  const RunResult b = ws.run("eval --compare --fnc " + ws.fnc_model.string() +
                             " --fpc " + ws.fpc_model.string() + " --input " +
                             ws.test_tsv.string());
  CHECK(a.out == b.out);
}
