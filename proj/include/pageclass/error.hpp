#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pageclass {

// Base for every data/runtime failure raised by the library. The CLI maps
// these to exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent corpus manifest. `line` is 1-based, 0 when the
// failure is not tied to a record (e.g. missing file).
class CorpusError : public Error {
 public:
  CorpusError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ModelFileError : public Error {
 public:
  enum class Kind { Io, VersionMismatch, Truncated, Checksum, Malformed };
  ModelFileError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

}  // namespace pageclass
