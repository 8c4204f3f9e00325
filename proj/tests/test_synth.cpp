#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <sstream>
#include <string>

#include "fileclass/preprocess.hpp"
#include "fileclass/synth.hpp"

using namespace fileclass;

namespace {

std::size_t block_count(const std::string& s) {
  return binary_blocks(s).size();
}

}  // namespace

TEST_CASE("generation is deterministic in the seed") {
  SynthConfig config;
  config.seed = 12;
  config.n_positive = 50;
  config.n_negative = 200;
  const Corpus a = generate(config);
  const Corpus b = generate(config);
  CHECK(a.entries == b.entries);

  config.seed = 13;
  const Corpus c = generate(config);
  CHECK(a.entries != c.entries);
}

TEST_CASE("class counts follow the config") {
  SynthConfig config;
  config.seed = 4;
  config.n_positive = 100;
  config.n_negative = 900;
  const Corpus corpus = generate(config);
  CHECK(corpus.size() == 1000);
  CHECK(corpus.count(Label::Positive) == 100);
  CHECK(corpus.count(Label::Negative) == 900);
}

TEST_CASE("zero obfuscation keeps keywords verbatim in positive names") {
  SynthConfig config;
  config.seed = 21;
  config.n_positive = 150;
  config.n_negative = 150;
  config.obfuscation_rate = 0.0;
  const Corpus corpus = generate(config);
  for (const FileEntry& entry : corpus.entries) {
    if (entry.label != Label::Positive) continue;
    bool found = false;
    for (const std::string& keyword : config.keyword_list) {
      if (entry.name.find(keyword) != std::string::npos) {
        found = true;
        break;
      }
    }
    CHECK(found);
  }
}

TEST_CASE("positive and negative masked names never collide") {
  SynthConfig config;
  config.seed = 33;
  config.n_positive = 300;
  config.n_negative = 1200;
  config.obfuscation_rate = 0.5;
  const Corpus corpus = generate(config);
  std::set<std::string> pos_masks, neg_masks;
  for (const FileEntry& entry : corpus.entries) {
    (entry.label == Label::Positive ? pos_masks : neg_masks)
        .insert(mask_text(entry.name));
  }
  for (const std::string& mask : pos_masks) {
    CHECK_FALSE(neg_masks.contains(mask));
  }
}

TEST_CASE("entries carry absolute paths ending in the name") {
  SynthConfig config;
  config.seed = 8;
  config.n_positive = 40;
  config.n_negative = 160;
  config.depth_min = 2;
  config.depth_max = 5;
  const Corpus corpus = generate(config);
  for (const FileEntry& entry : corpus.entries) {
    REQUIRE_FALSE(entry.path.empty());
    const auto components = split_path_components(entry.path);
    REQUIRE_FALSE(components.empty());
    CHECK(components.back() == entry.name);
    // depth directories plus the name, plus possibly a drive component.
    CHECK(components.size() >= 3);
    CHECK(components.size() <= 7);
    CHECK(entry.name.find_first_of("/\\") == std::string::npos);
  }
}

TEST_CASE("leet swaps shift binary blocks by a bounded amount") {
  std::mt19937_64 rng(77);
  const std::vector<std::string> words = {"redfox",   "bluecat", "greenowl",
                                          "blackwolf", "oiea",    "holiday"};
  for (int trial = 0; trial < 500; ++trial) {
    const std::string& word = words[trial % words.size()];
    const ObfuscationResult result = leet_obfuscate(word, rng);
    const auto before = static_cast<std::ptrdiff_t>(block_count(word));
    const auto after =
        static_cast<std::ptrdiff_t>(block_count(result.text));
    // One substitution can split a letter run in two: at most two extra
    // blocks per swapped character.
    CHECK(std::abs(after - before) <= 2 * result.substitutions);
    CHECK(result.text.size() == word.size());

    // A punctuation prefix adds at most one more block.
    const std::string prefixed = punctuation_run(rng) + result.text;
    const auto with_prefix =
        static_cast<std::ptrdiff_t>(block_count(prefixed));
    CHECK(std::abs(with_prefix - before) <= 2 * result.substitutions + 1);
  }
}

TEST_CASE("leet swaps always fire on eligible words") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const ObfuscationResult result = leet_obfuscate("redfox", rng);
    CHECK(result.substitutions >= 1);
    CHECK(result.text != "redfox");
  }
  // No eligible characters: nothing to swap.
  const ObfuscationResult none = leet_obfuscate("xyz", rng);
  CHECK(none.substitutions == 0);
  CHECK(none.text == "xyz");
}

TEST_CASE("generated corpus round-trips through tsv") {
  SynthConfig config;
  config.seed = 14;
  config.n_positive = 30;
  config.n_negative = 120;
  const Corpus corpus = generate(config);
  std::ostringstream out;
  save_corpus(corpus, out, CorpusFormat::Tsv);
  std::istringstream in(out.str());
  const Corpus loaded = load_corpus(in, CorpusFormat::Tsv);
  CHECK(loaded.entries == corpus.entries);
}

TEST_CASE("config validation") {
  SynthConfig config;
  config.n_positive = 0;
  CHECK_THROWS_AS(generate(config), InputError);
  config = SynthConfig{};
  config.keyword_list.clear();
  CHECK_THROWS_AS(generate(config), InputError);
  config = SynthConfig{};
  config.depth_min = 3;
  config.depth_max = 2;
  CHECK_THROWS_AS(generate(config), InputError);
  config = SynthConfig{};
  config.obfuscation_rate = 1.5;
  CHECK_THROWS_AS(generate(config), InputError);
}
