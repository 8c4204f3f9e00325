#pragma once

#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "fileclass/errors.hpp"
#include "fileclass/preprocess.hpp"
#include "fileclass/utf8.hpp"

namespace fileclass {

enum class Label { Negative = 0, Positive = 1 };

inline std::string_view label_tag(Label label) {
  return label == Label::Positive ? "pos" : "neg";
}

inline std::string_view label_name(Label label) {
  return label == Label::Positive ? "positive" : "negative";
}

/// One (name, path, optional label) record. At least one of name/path is
/// non-empty and the name never contains a directory separator.
struct FileEntry {
  std::string name;
  std::string path;
  std::optional<Label> label;

  friend bool operator==(const FileEntry&, const FileEntry&) = default;
};

struct Corpus {
  std::vector<FileEntry> entries;
  std::map<Label, std::size_t> class_counts;

  void add(FileEntry entry) {
    if (entry.label) {
      ++class_counts[*entry.label];
    }
    entries.push_back(std::move(entry));
  }

  std::size_t count(Label label) const {
    const auto it = class_counts.find(label);
    return it == class_counts.end() ? 0 : it->second;
  }

  std::size_t size() const { return entries.size(); }
};

enum class CorpusFormat { Tsv, Jsonl };

namespace detail {

inline std::optional<Label> parse_label(std::string_view tag,
                                        std::size_t line_no) {
  if (tag.empty()) return std::nullopt;
  if (tag == "pos") return Label::Positive;
  if (tag == "neg") return Label::Negative;
  throw InputError("line " + std::to_string(line_no) +
                   ": unknown label \"" + std::string(tag) +
                   "\" (expected pos, neg, or empty)");
}

inline void check_entry_fields(const std::string& name,
                               const std::string& path, std::size_t line_no) {
  if (name.empty() && path.empty()) {
    throw InputError("line " + std::to_string(line_no) +
                     ": both name and path are empty");
  }
  if (name.find_first_of("/\\") != std::string::npos) {
    throw InputError("line " + std::to_string(line_no) +
                     ": name contains a directory separator");
  }
}

inline FileEntry parse_tsv_row(std::string_view line, std::size_t line_no) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == '\t') {
      fields.push_back(line.substr(start, i - start));
      start = i + 1;
    }
  }
  if (fields.size() != 3) {
    throw InputError("line " + std::to_string(line_no) + ": expected 3 "
                     "tab-separated fields (label, name, path), got " +
                     std::to_string(fields.size()));
  }
  FileEntry entry;
  entry.label = parse_label(fields[0], line_no);
  entry.name = std::string(fields[1]);
  entry.path = std::string(fields[2]);
  check_entry_fields(entry.name, entry.path, line_no);
  return entry;
}

inline FileEntry parse_jsonl_row(const std::string& line,
                                 std::size_t line_no) {
  nlohmann::json obj;
  try {
    obj = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("line " + std::to_string(line_no) + ": " + e.what());
  }
  if (!obj.is_object()) {
    throw InputError("line " + std::to_string(line_no) +
                     ": expected a JSON object");
  }
  FileEntry entry;
  entry.name = obj.value("name", std::string());
  entry.path = obj.value("path", std::string());
  if (obj.contains("label") && !obj["label"].is_null()) {
    if (!obj["label"].is_string()) {
      throw InputError("line " + std::to_string(line_no) +
                       ": label must be a string or null");
    }
    entry.label = parse_label(obj["label"].get<std::string>(), line_no);
  }
  check_entry_fields(entry.name, entry.path, line_no);
  return entry;
}

}  // namespace detail

/// Reads a labeled or unlabeled corpus. TSV rows are
/// `label<TAB>name<TAB>path` with label in {pos, neg, ""}; JSONL rows are
/// objects with keys name, path, label. Blank lines are skipped; input
/// order is preserved.
inline Corpus load_corpus(std::istream& in, CorpusFormat format) {
  Corpus corpus;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) continue;
    if (!utf8::is_valid(line)) {
      throw InputError("line " + std::to_string(line_no) +
                       ": invalid UTF-8");
    }
    corpus.add(format == CorpusFormat::Tsv
                   ? detail::parse_tsv_row(line, line_no)
                   : detail::parse_jsonl_row(line, line_no));
  }
  return corpus;
}

inline void save_corpus(const Corpus& corpus, std::ostream& out,
                        CorpusFormat format) {
  for (const FileEntry& entry : corpus.entries) {
    if (format == CorpusFormat::Tsv) {
      if (entry.name.find_first_of("\t\n\r") != std::string::npos ||
          entry.path.find_first_of("\t\n\r") != std::string::npos) {
        throw InputError(
            "tsv fields must not contain tabs or newlines; use jsonl");
      }
      out << (entry.label ? label_tag(*entry.label) : "") << '\t'
          << entry.name << '\t' << entry.path << '\n';
    } else {
      nlohmann::json obj;
      obj["name"] = entry.name;
      obj["path"] = entry.path;
      if (entry.label) {
        obj["label"] = std::string(label_tag(*entry.label));
      } else {
        obj["label"] = nullptr;
      }
      out << obj.dump() << '\n';
    }
  }
}

/// Drops entries whose masked name repeats one seen earlier, so families
/// like IMG01.png, IMG02.png collapse to their first member. Idempotent;
/// order is otherwise preserved.
inline Corpus dedup_by_masked_name(const Corpus& corpus) {
  Corpus result;
  std::unordered_set<std::string> seen;
  for (const FileEntry& entry : corpus.entries) {
    if (entry.name.empty()) {
      throw DataError("dedup_by_masked_name: entry with empty name");
    }
    if (seen.insert(mask_text(entry.name)).second) {
      result.add(entry);
    }
  }
  return result;
}

}  // namespace fileclass
