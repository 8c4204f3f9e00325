#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "fileclass/corpus.hpp"
#include "fileclass/detail/random.hpp"
#include "fileclass/errors.hpp"
#include "fileclass/preprocess.hpp"

namespace fileclass {

/// Deterministic generator of a labeled toy corpus: benign names and
/// paths on one side, planted-keyword names and paths on the other. The
/// keywords are neutral placeholders; the point is a corpus the pipeline
/// can provably separate, not realism.
struct SynthConfig {
  std::uint64_t seed = 0;
  std::size_t n_positive = 1000;
  std::size_t n_negative = 9000;
  std::vector<std::string> keyword_list = {"redfox", "bluecat", "greenowl",
                                           "blackwolf"};
  double obfuscation_rate = 0.25;  // leet swaps + punctuation-run prefixes
  int depth_min = 1;
  int depth_max = 6;
};

inline void validate(const SynthConfig& config) {
  if (config.n_positive < 1 || config.n_negative < 1) {
    throw InputError("synth: positive and negative counts must be >= 1");
  }
  if (config.keyword_list.empty()) {
    throw InputError("synth: keyword list must not be empty");
  }
  if (config.obfuscation_rate < 0.0 || config.obfuscation_rate > 1.0) {
    throw InputError("synth: obfuscation rate must be in [0, 1]");
  }
  if (config.depth_min < 1 || config.depth_max < config.depth_min) {
    throw InputError("synth: depth range must satisfy 1 <= min <= max");
  }
}

namespace synth_detail {

inline constexpr std::array<std::string_view, 60> kBenignWords = {
    "summer",  "garden",   "recipe",  "holiday", "meeting", "budget",
    "invoice", "sunset",   "mountain", "river",  "forest",  "family",
    "travel",  "music",    "notes",   "project", "lecture", "archive",
    "kitchen", "window",   "coffee",  "bicycle", "painting", "weather",
    "history", "science",  "library", "market",  "harbor",  "village",
    "castle",  "bridge",   "island",  "desert",  "canyon",  "meadow",
    "orchard", "dinner",   "morning", "evening", "autumn",  "winter",
    "spring",  "letter",   "diary",   "journal", "sketch",  "poster",
    "ticket",  "agenda",   "draft",   "sample",  "manual",  "guide",
    "session", "workshop", "concert", "festival", "picnic", "hiking",
};

inline constexpr std::array<std::string_view, 24> kDirWords = {
    "Home",     "Users",   "Documents", "Downloads", "Pictures", "Videos",
    "Music",    "Desktop", "Backup",    "Archive",   "Projects", "Work",
    "Personal", "Family",  "Travel",    "Photos",    "Camera",   "Phone",
    "External", "Shared",  "Public",    "Media",     "Library",  "Misc",
};

inline constexpr std::array<std::string_view, 5> kCameraPrefixes = {
    "IMG", "DSC", "PIC", "VID", "CAM"};

inline constexpr std::array<std::string_view, 8> kExtensions = {
    "jpg", "png", "gif", "bmp", "avi", "mp4", "mov", "mkv"};

inline constexpr std::array<char, 5> kPunctChars = {'!', '#', '_', '-', '~'};

inline char leet_for(char c) {
  switch (c) {
    case 'o':
      return '0';
    case 'i':
      return '1';
    case 'e':
      return '3';
    case 'a':
      return '4';
    default:
      return 0;
  }
}

inline std::string digit_run(std::mt19937_64& rng, int min_len, int max_len) {
  const int len =
      min_len + static_cast<int>(detail::uniform_index(
                    rng, static_cast<std::size_t>(max_len - min_len + 1)));
  std::string out;
  for (int i = 0; i < len; ++i) {
    out.push_back(
        static_cast<char>('0' + detail::uniform_index(rng, 10)));
  }
  return out;
}

inline std::string capitalize(std::string_view word) {
  std::string out(word);
  if (!out.empty() && out[0] >= 'a' && out[0] <= 'z') {
    out[0] = static_cast<char>(out[0] - 'a' + 'A');
  }
  return out;
}

}  // namespace synth_detail

struct ObfuscationResult {
  std::string text;
  int substitutions = 0;
};

/// Classic leet swaps (o->0, i->1, e->3, a->4), each eligible letter with
/// probability one half, forcing at least one swap when possible.
inline ObfuscationResult leet_obfuscate(std::string_view word,
                                        std::mt19937_64& rng) {
  ObfuscationResult result;
  result.text.assign(word);
  int first_eligible = -1;
  for (std::size_t i = 0; i < result.text.size(); ++i) {
    const char sub = synth_detail::leet_for(result.text[i]);
    if (sub == 0) continue;
    if (first_eligible < 0) first_eligible = static_cast<int>(i);
    if (detail::bernoulli(rng, 0.5)) {
      result.text[i] = sub;
      ++result.substitutions;
    }
  }
  if (result.substitutions == 0 && first_eligible >= 0) {
    result.text[first_eligible] =
        synth_detail::leet_for(word[first_eligible]);
    result.substitutions = 1;
  }
  return result;
}

/// Run of one punctuation character, length 1 to 4.
inline std::string punctuation_run(std::mt19937_64& rng) {
  const char c = detail::pick(rng, synth_detail::kPunctChars);
  const std::size_t len = 1 + detail::uniform_index(rng, 4);
  return std::string(len, c);
}

namespace synth_detail {

/// Camel style leaves the part at `verbatim_index` uncapitalized so a
/// planted keyword stays a literal substring of the result.
inline std::string join_with_style(const std::vector<std::string>& parts,
                                   std::mt19937_64& rng,
                                   std::ptrdiff_t verbatim_index = -1) {
  const std::size_t style = detail::uniform_index(rng, 3);
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    switch (style) {
      case 0:  // snake
        if (i > 0) out.push_back('_');
        out += parts[i];
        break;
      case 1:  // kebab
        if (i > 0) out.push_back('-');
        out += parts[i];
        break;
      default:  // camel
        out += static_cast<std::ptrdiff_t>(i) == verbatim_index
                   ? parts[i]
                   : capitalize(parts[i]);
        break;
    }
  }
  return out;
}

inline std::string negative_name(std::mt19937_64& rng) {
  const std::size_t shape = detail::uniform_index(rng, 4);
  std::string stem;
  if (shape == 0) {
    // Camera roll: IMG_0482
    stem.assign(detail::pick(rng, kCameraPrefixes));
    if (detail::bernoulli(rng, 0.7)) stem.push_back('_');
    stem += digit_run(rng, 2, 6);
  } else if (shape == 3) {
    // Keyboard mash: QBD35hmF93df
    const std::size_t len = 8 + detail::uniform_index(rng, 9);
    for (std::size_t i = 0; i < len; ++i) {
      const std::size_t kind = detail::uniform_index(rng, 3);
      if (kind == 0) {
        stem.push_back(
            static_cast<char>('A' + detail::uniform_index(rng, 26)));
      } else if (kind == 1) {
        stem.push_back(
            static_cast<char>('a' + detail::uniform_index(rng, 26)));
      } else {
        stem.push_back(
            static_cast<char>('0' + detail::uniform_index(rng, 10)));
      }
    }
  } else {
    std::vector<std::string> parts;
    const std::size_t n_words = 1 + detail::uniform_index(rng, 3);
    for (std::size_t i = 0; i < n_words; ++i) {
      parts.emplace_back(detail::pick(rng, kBenignWords));
    }
    if (detail::bernoulli(rng, 0.5)) {
      parts.push_back(digit_run(rng, 1, 4));
    }
    stem = join_with_style(parts, rng);
  }
  return stem + "." + std::string(detail::pick(rng, kExtensions));
}

inline std::string positive_name(const SynthConfig& config,
                                 std::mt19937_64& rng) {
  std::string keyword(detail::pick(rng, config.keyword_list));
  const bool obfuscate = detail::bernoulli(rng, config.obfuscation_rate);
  if (obfuscate) {
    keyword = leet_obfuscate(keyword, rng).text;
  }
  std::vector<std::string> parts;
  const bool leading_filler = detail::bernoulli(rng, 0.8);
  if (leading_filler) {
    parts.emplace_back(detail::pick(rng, kBenignWords));
  }
  const std::ptrdiff_t keyword_index =
      static_cast<std::ptrdiff_t>(parts.size());
  parts.push_back(keyword);
  if (detail::bernoulli(rng, 0.6) || !leading_filler) {
    parts.emplace_back(detail::pick(rng, kBenignWords));
  }
  if (detail::bernoulli(rng, 0.5)) {
    parts.push_back(digit_run(rng, 1, 4));
  }
  std::string stem = join_with_style(parts, rng, keyword_index);
  if (obfuscate && detail::bernoulli(rng, 0.5)) {
    stem = punctuation_run(rng) + stem;
  }
  return stem + "." + std::string(detail::pick(rng, kExtensions));
}

inline std::string directory_word(std::mt19937_64& rng) {
  std::string word(detail::pick(rng, kDirWords));
  if (detail::bernoulli(rng, 0.15)) {
    word += " ";
    word += capitalize(std::string(detail::pick(rng, kBenignWords)));
  }
  if (detail::bernoulli(rng, 0.2)) {
    word += detail::bernoulli(rng, 0.5) ? "_" : "";
    word += digit_run(rng, 1, 4);
  }
  return word;
}

inline std::string keyword_directory(const SynthConfig& config,
                                     std::mt19937_64& rng) {
  std::string keyword(detail::pick(rng, config.keyword_list));
  if (detail::bernoulli(rng, config.obfuscation_rate)) {
    keyword = leet_obfuscate(keyword, rng).text;
  }
  switch (detail::uniform_index(rng, 3)) {
    case 0:
      return capitalize(keyword) +
             capitalize(std::string(detail::pick(rng, kBenignWords)));
    case 1:
      return std::string(detail::pick(rng, kDirWords)) + " " +
             capitalize(keyword);
    default:
      return capitalize(keyword);
  }
}

/// Full absolute path ending in the file name. One in five paths uses a
/// Windows drive root and backslashes.
inline std::string build_path(const std::vector<std::string>& dirs,
                              const std::string& name,
                              std::mt19937_64& rng) {
  const bool windows = detail::bernoulli(rng, 0.2);
  std::string path;
  char sep = '/';
  if (windows) {
    path.push_back(
        static_cast<char>('c' + detail::uniform_index(rng, 8)));
    path.push_back(':');
    sep = '\\';
  }
  for (const std::string& dir : dirs) {
    path.push_back(sep);
    path += dir;
  }
  path.push_back(sep);
  path += name;
  return path;
}

}  // namespace synth_detail

inline Corpus generate(const SynthConfig& config) {
  validate(config);
  std::mt19937_64 rng(config.seed);

  std::vector<FileEntry> entries;
  entries.reserve(config.n_positive + config.n_negative);
  std::unordered_set<std::string> negative_masks;
  negative_masks.reserve(config.n_negative);

  const auto make_dirs = [&](bool plant_keyword) {
    const std::size_t depth =
        static_cast<std::size_t>(config.depth_min) +
        detail::uniform_index(
            rng, static_cast<std::size_t>(config.depth_max -
                                          config.depth_min + 1));
    std::vector<std::string> dirs;
    dirs.reserve(depth);
    for (std::size_t i = 0; i < depth; ++i) {
      dirs.push_back(synth_detail::directory_word(rng));
    }
    if (plant_keyword) {
      dirs[detail::uniform_index(rng, depth)] =
          synth_detail::keyword_directory(config, rng);
    }
    return dirs;
  };

  for (std::size_t i = 0; i < config.n_negative; ++i) {
    FileEntry entry;
    entry.label = Label::Negative;
    entry.name = synth_detail::negative_name(rng);
    negative_masks.insert(mask_text(entry.name));
    entry.path = synth_detail::build_path(make_dirs(false), entry.name, rng);
    entries.push_back(std::move(entry));
  }

  for (std::size_t i = 0; i < config.n_positive; ++i) {
    FileEntry entry;
    entry.label = Label::Positive;
    // Keep the two classes disjoint as masked names so the corpus stays
    // separable in principle.
    entry.name = synth_detail::positive_name(config, rng);
    for (int attempt = 0;
         attempt < 200 && negative_masks.count(mask_text(entry.name));
         ++attempt) {
      entry.name = synth_detail::positive_name(config, rng);
    }
    while (negative_masks.count(mask_text(entry.name))) {
      const std::size_t dot = entry.name.rfind('.');
      entry.name.insert(dot == std::string::npos ? entry.name.size() : dot,
                        1, 'q');
    }
    // The keyword lands in exactly one directory component for half the
    // positives; the other half carry it in the name alone.
    entry.path = synth_detail::build_path(
        make_dirs(detail::bernoulli(rng, 0.5)), entry.name, rng);
    entries.push_back(std::move(entry));
  }

  detail::shuffle(entries, rng);
  Corpus corpus;
  for (FileEntry& entry : entries) {
    corpus.add(std::move(entry));
  }
  return corpus;
}

}  // namespace fileclass
