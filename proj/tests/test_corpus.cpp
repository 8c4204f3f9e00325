#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>
#include <string>

#include "fileclass/corpus.hpp"

using namespace fileclass;

namespace {

Corpus load_tsv(const std::string& text) {
  std::istringstream in(text);
  return load_corpus(in, CorpusFormat::Tsv);
}

Corpus load_jsonl(const std::string& text) {
  std::istringstream in(text);
  return load_corpus(in, CorpusFormat::Jsonl);
}

Corpus names_only(std::initializer_list<std::string> names) {
  Corpus corpus;
  for (const std::string& name : names) {
    corpus.add(FileEntry{name, "", Label::Negative});
  }
  return corpus;
}

}  // namespace

TEST_CASE("tsv rows map straight onto entries") {
  const Corpus corpus = load_tsv("pos\t!!!!yoB0yXX\t\n");
  REQUIRE(corpus.size() == 1);
  CHECK(corpus.entries[0].name == "!!!!yoB0yXX");
  CHECK(corpus.entries[0].path.empty());
  CHECK(corpus.entries[0].label == Label::Positive);
  CHECK(corpus.count(Label::Positive) == 1);
}

TEST_CASE("empty stream loads an empty corpus") {
  CHECK(load_tsv("").size() == 0);
  CHECK(load_jsonl("").size() == 0);
}

TEST_CASE("class counts tally labeled entries") {
  const Corpus corpus = load_tsv(
      "neg\ta.png\t\n"
      "pos\tb.png\t\n"
      "neg\tc.png\t\n"
      "\td.png\t\n");  // unlabeled row counts toward neither class
  CHECK(corpus.size() == 4);
  CHECK(corpus.count(Label::Positive) == 1);
  CHECK(corpus.count(Label::Negative) == 2);
}

TEST_CASE("blank lines are skipped, order preserved") {
  const Corpus corpus = load_tsv("neg\ta\t\n\n\npos\tb\t\n");
  REQUIRE(corpus.size() == 2);
  CHECK(corpus.entries[0].name == "a");
  CHECK(corpus.entries[1].name == "b");
}

TEST_CASE("malformed rows name the line number") {
  CHECK_THROWS_WITH(load_tsv("neg\ta\t\nbad-row\n"),
                    Catch::Matchers::ContainsSubstring("line 2"));
  // Four fields means a stray tab.
  CHECK_THROWS_WITH(load_tsv("neg\ta\tb\tc\n"),
                    Catch::Matchers::ContainsSubstring("line 1"));
  CHECK_THROWS_WITH(load_tsv("maybe\ta\t\n"),
                    Catch::Matchers::ContainsSubstring("label"));
  CHECK_THROWS_WITH(load_tsv("neg\t\t\n"),
                    Catch::Matchers::ContainsSubstring("empty"));
  CHECK_THROWS_WITH(load_tsv("neg\ta/b.png\t\n"),
                    Catch::Matchers::ContainsSubstring("separator"));
}

TEST_CASE("invalid utf-8 is rejected with the line number") {
  std::string bad = "neg\ta";
  bad.push_back(static_cast<char>(0xFF));
  bad += "\t\n";
  CHECK_THROWS_WITH(load_tsv("neg\tok\t\n" + bad),
                    Catch::Matchers::ContainsSubstring("line 2"));
}

TEST_CASE("jsonl rows parse name, path, and optional label") {
  const Corpus corpus = load_jsonl(
      R"({"name":"a.png","path":"/d/a.png","label":"pos"})"
      "\n"
      R"({"name":"b.png","path":"","label":null})"
      "\n"
      R"({"name":"","path":"/d/e/"})"
      "\n");
  REQUIRE(corpus.size() == 3);
  CHECK(corpus.entries[0].label == Label::Positive);
  CHECK_FALSE(corpus.entries[1].label.has_value());
  CHECK_FALSE(corpus.entries[2].label.has_value());
  CHECK(corpus.entries[2].path == "/d/e/");

  CHECK_THROWS_WITH(load_jsonl("not json\n"),
                    Catch::Matchers::ContainsSubstring("line 1"));
  CHECK_THROWS_WITH(load_jsonl(R"(["array"])" "\n"),
                    Catch::Matchers::ContainsSubstring("object"));
}

TEST_CASE("save/load round-trips both formats") {
  std::mt19937_64 rng(99);
  Corpus corpus;
  const std::vector<std::string> stems = {"img", "doc", "клип", "记录"};
  for (int i = 0; i < 40; ++i) {
    FileEntry entry;
    entry.name = stems[rng() % stems.size()] + std::to_string(rng() % 1000) +
                 ".png";
    if (rng() % 3 != 0) {
      entry.path = "/d" + std::to_string(rng() % 10) + "/" + entry.name;
    }
    if (rng() % 4 != 0) {
      entry.label = rng() % 2 ? Label::Positive : Label::Negative;
    }
    corpus.add(entry);
  }
  for (const CorpusFormat format : {CorpusFormat::Tsv, CorpusFormat::Jsonl}) {
    std::ostringstream out;
    save_corpus(corpus, out, format);
    std::istringstream in(out.str());
    const Corpus loaded = load_corpus(in, format);
    REQUIRE(loaded.size() == corpus.size());
    CHECK(loaded.entries == corpus.entries);
    CHECK(loaded.class_counts == corpus.class_counts);
  }
}

TEST_CASE("dedup keeps the first entry per masked name") {
  const Corpus corpus = names_only({"IMG01.png", "IMG02.png", "IMG100.png"});
  const Corpus deduped = dedup_by_masked_name(corpus);
  REQUIRE(deduped.size() == 2);
  CHECK(deduped.entries[0].name == "IMG01.png");   // IMG$$.png group
  CHECK(deduped.entries[1].name == "IMG100.png");  // IMG$$$.png group
}

TEST_CASE("dedup trivial and digit-variant cases") {
  CHECK(dedup_by_masked_name(names_only({"a.txt"})).size() == 1);
  const Corpus deduped = dedup_by_masked_name(
      names_only({"Hot3YoGirlOnBeach", "Hot7YoGirlOnBeach"}));
  REQUIRE(deduped.size() == 1);
  CHECK(deduped.entries[0].name == "Hot3YoGirlOnBeach");
}

TEST_CASE("dedup is idempotent and never grows") {
  std::mt19937_64 rng(7);
  Corpus corpus;
  for (int i = 0; i < 200; ++i) {
    corpus.add(FileEntry{
        "IMG" + std::to_string(rng() % 100) + "." +
            (rng() % 2 ? "png" : "jpg"),
        "", Label::Negative});
  }
  const Corpus once = dedup_by_masked_name(corpus);
  const Corpus twice = dedup_by_masked_name(once);
  CHECK(once.size() <= corpus.size());
  CHECK(once.entries == twice.entries);
}

TEST_CASE("dedup rejects empty names") {
  Corpus corpus;
  corpus.add(FileEntry{"", "/d/x", Label::Negative});
  CHECK_THROWS_AS(dedup_by_masked_name(corpus), DataError);
}

TEST_CASE("tsv save refuses embedded tabs") {
  Corpus corpus;
  corpus.add(FileEntry{"a\tb.png", "", std::nullopt});
  std::ostringstream out;
  CHECK_THROWS_AS(save_corpus(corpus, out, CorpusFormat::Tsv), InputError);
}
