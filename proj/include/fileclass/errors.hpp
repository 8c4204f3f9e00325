#pragma once

#include <stdexcept>
#include <string>

namespace fileclass {

/// Malformed or unusable input: missing files, bad rows, invalid flags.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Data or model problems: single-class corpora, empty vocabularies,
/// unreadable or version-mismatched model files.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fileclass
