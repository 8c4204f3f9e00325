#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fileclass/detail/unicode_tables.hpp"
#include "fileclass/errors.hpp"
#include "fileclass/utf8.hpp"

namespace fileclass {

/// Orthographic class of a single Unicode scalar. Caseless letters (e.g.
/// CJK ideographs) fall under Special here; the masking and block
/// transforms below still treat them as letters.
enum class CharClass { Upper, Lower, Digit, Special };

namespace detail {

inline UnicodeKind unicode_kind(char32_t cp) {
  // ASCII fast path covers virtually all file-system names.
  if (cp < 0x80) {
    if (cp >= U'0' && cp <= U'9') return UnicodeKind::Digit;
    if (cp >= U'A' && cp <= U'Z') return UnicodeKind::Upper;
    if (cp >= U'a' && cp <= U'z') return UnicodeKind::Lower;
    return UnicodeKind::Other;
  }
  const auto* begin = kUnicodeRanges;
  const auto* end = kUnicodeRanges + kUnicodeRangeCount;
  const auto* it = std::upper_bound(
      begin, end, cp,
      [](char32_t value, const UnicodeRange& r) { return value < r.first; });
  if (it == begin) return UnicodeKind::Other;
  --it;
  return cp <= it->last ? it->kind : UnicodeKind::Other;
}

}  // namespace detail

inline CharClass classify_char(char32_t cp) {
  switch (detail::unicode_kind(cp)) {
    case detail::UnicodeKind::Upper:
      return CharClass::Upper;
    case detail::UnicodeKind::Lower:
      return CharClass::Lower;
    case detail::UnicodeKind::Digit:
      return CharClass::Digit;
    default:
      return CharClass::Special;
  }
}

/// Letters include caseless letter categories, so masking leaves
/// non-Latin names readable instead of reducing them to '#' runs.
inline bool is_letter(char32_t cp) {
  const auto k = detail::unicode_kind(cp);
  return k == detail::UnicodeKind::Upper || k == detail::UnicodeKind::Lower ||
         k == detail::UnicodeKind::CaselessLetter;
}

inline bool is_digit(char32_t cp) {
  return detail::unicode_kind(cp) == detail::UnicodeKind::Digit;
}

/// Digits become '$', anything that is neither letter nor digit becomes
/// '#'. Scalar count is preserved.
inline std::string mask_text(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t pos = 0;
  while (pos < s.size()) {
    const char32_t cp = utf8::decode(s, pos);
    if (is_letter(cp)) {
      utf8::append(out, cp);
    } else if (is_digit(cp)) {
      out.push_back('$');
    } else {
      out.push_back('#');
    }
  }
  return out;
}

/// Collapses maximal letter runs to '1' and non-letter runs to '0', so
/// the output records oscillation between letter and non-letter blocks.
inline std::string binary_blocks(std::string_view s) {
  std::string out;
  std::size_t pos = 0;
  int prev = -1;
  while (pos < s.size()) {
    const int cur = is_letter(utf8::decode(s, pos)) ? 1 : 0;
    if (cur != prev) {
      out.push_back(cur ? '1' : '0');
      prev = cur;
    }
  }
  return out;
}

/// Per-scalar map: upper 'C', lower 'c', digit 'N', everything else 'P'.
inline std::string orthographic(std::string_view s) {
  std::string out;
  out.reserve(utf8::scalar_count(s));
  std::size_t pos = 0;
  while (pos < s.size()) {
    switch (classify_char(utf8::decode(s, pos))) {
      case CharClass::Upper:
        out.push_back('C');
        break;
      case CharClass::Lower:
        out.push_back('c');
        break;
      case CharClass::Digit:
        out.push_back('N');
        break;
      case CharClass::Special:
        out.push_back('P');
        break;
    }
  }
  return out;
}

/// Inserts a space before an uppercase letter that immediately follows a
/// lowercase letter ("MyImages" -> "My Images"). No split happens inside
/// acronym runs ("HTTPServer" stays joined at "PS").
inline std::string split_camel(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 8);
  std::size_t pos = 0;
  bool prev_lower = false;
  while (pos < s.size()) {
    const char32_t cp = utf8::decode(s, pos);
    const CharClass cls = classify_char(cp);
    if (cls == CharClass::Upper && prev_lower) {
      out.push_back(' ');
    }
    utf8::append(out, cp);
    prev_lower = (cls == CharClass::Lower);
  }
  return out;
}

/// A preprocessed name or path ready for n-gram featurization. `text` is
/// the space-join of the views in declared order. Name documents carry
/// the three single-token views (masked, binary, orthographic); path
/// documents carry one `path_flat` view that may itself contain spaces.
struct EncodedDocument {
  std::string text;
  std::vector<std::pair<std::string, std::string>> views;

  bool degenerate() const { return text.empty(); }
};

inline EncodedDocument encode_name(std::string_view name) {
  if (name.empty()) {
    throw InputError("encode_name: empty file name");
  }
  EncodedDocument doc;
  doc.views.emplace_back("masked", mask_text(name));
  doc.views.emplace_back("binary", binary_blocks(name));
  doc.views.emplace_back("orthographic", orthographic(name));
  doc.text = doc.views[0].second + " " + doc.views[1].second + " " +
             doc.views[2].second;
  return doc;
}

namespace detail {

inline bool is_separator(char c) { return c == '/' || c == '\\'; }

inline std::string collapse_spaces(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending = false;
  for (const char c : s) {
    if (c == ' ') {
      pending = !out.empty();
      continue;
    }
    if (pending) {
      out.push_back(' ');
      pending = false;
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace detail

/// Splits on '/' and '\', dropping empty components. The final element
/// is the file name; order runs root to leaf.
inline std::vector<std::string> split_path_components(std::string_view path) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= path.size(); ++i) {
    if (i == path.size() || detail::is_separator(path[i])) {
      if (i > start) {
        parts.emplace_back(path.substr(start, i - start));
      }
      start = i + 1;
    }
  }
  return parts;
}

/// Flattens the directory part of a path into one maskable string:
/// strip the final component, turn separators into spaces, mask each
/// word, split camel case, and tidy the spacing. A file sitting in the
/// root directory yields a degenerate (empty) document.
inline EncodedDocument encode_path(std::string_view path) {
  if (path.empty()) {
    throw InputError("encode_path: empty path");
  }
  const std::size_t last_sep = path.find_last_of("/\\");
  std::string flat;
  if (last_sep != std::string_view::npos) {
    const std::string_view dirs = path.substr(0, last_sep);
    std::string spaced;
    spaced.reserve(dirs.size());
    for (const char c : dirs) {
      spaced.push_back(detail::is_separator(c) ? ' ' : c);
    }
    // Mask word by word: spaces stay word boundaries, whether they came
    // from separators or from spaces inside a directory name.
    std::string masked;
    masked.reserve(spaced.size());
    std::size_t pos = 0;
    while (pos < spaced.size()) {
      const char32_t cp = utf8::decode(spaced, pos);
      if (cp == U' ') {
        masked.push_back(' ');
      } else if (is_letter(cp)) {
        utf8::append(masked, cp);
      } else if (is_digit(cp)) {
        masked.push_back('$');
      } else {
        masked.push_back('#');
      }
    }
    flat = detail::collapse_spaces(split_camel(masked));
  }
  EncodedDocument doc;
  doc.views.emplace_back("path_flat", flat);
  doc.text = flat;
  return doc;
}

}  // namespace fileclass
