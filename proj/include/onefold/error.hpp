#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>

namespace onefold {

enum class FormulaErrc {
  UnknownToken,
  StackUnderflow,
  TrailingOperands,
  OneAsOperand,
  EmptyInput,
  CapExceeded,
  ValueTooLarge,
  InfixSyntax,
  AmbiguousInfix,
};

// Stable, kebab-case name of an error class, e.g. "one-as-operand".
const char* errc_name(FormulaErrc code);

// Rejected formula text or an evaluation that could not produce a value.
// position is the 0-based character offset where the problem was detected.
class FormulaError : public std::runtime_error {
 public:
  FormulaError(FormulaErrc code, std::size_t position, const std::string& detail);

  FormulaErrc code() const noexcept { return code_; }
  std::size_t position() const noexcept { return position_; }

 private:
  FormulaErrc code_;
  std::size_t position_;
};

class IoError : public std::runtime_error {
 public:
  IoError(const std::filesystem::path& path, const std::string& what);

  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  std::filesystem::path path_;
};

enum class CacheErrc { BadMagic, VersionMismatch, CorruptRecord };

const char* errc_name(CacheErrc code);

// A table snapshot that cannot be trusted. line is 1-based.
class CacheError : public std::runtime_error {
 public:
  CacheError(CacheErrc code, std::size_t line, const std::string& detail);

  CacheErrc code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }

 private:
  CacheErrc code_;
  std::size_t line_;
};

}  // namespace onefold
