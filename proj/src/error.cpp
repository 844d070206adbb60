#include "onefold/error.hpp"

namespace onefold {

const char* errc_name(FormulaErrc code) {
  switch (code) {
    case FormulaErrc::UnknownToken: return "unknown-token";
    case FormulaErrc::StackUnderflow: return "stack-underflow";
    case FormulaErrc::TrailingOperands: return "trailing-operands";
    case FormulaErrc::OneAsOperand: return "one-as-operand";
    case FormulaErrc::EmptyInput: return "empty-input";
    case FormulaErrc::CapExceeded: return "cap-exceeded";
    case FormulaErrc::ValueTooLarge: return "value-too-large";
    case FormulaErrc::InfixSyntax: return "infix-syntax";
    case FormulaErrc::AmbiguousInfix: return "ambiguous-infix";
  }
  return "unknown";
}

FormulaError::FormulaError(FormulaErrc code, std::size_t position, const std::string& detail)
    : std::runtime_error(std::string(errc_name(code)) + " at offset " +
                         std::to_string(position) + ": " + detail),
      code_(code),
      position_(position) {}

IoError::IoError(const std::filesystem::path& path, const std::string& what)
    : std::runtime_error(path.string() + ": " + what), path_(path) {}

const char* errc_name(CacheErrc code) {
  switch (code) {
    case CacheErrc::BadMagic: return "bad-magic";
    case CacheErrc::VersionMismatch: return "version-mismatch";
    case CacheErrc::CorruptRecord: return "corrupt-record";
  }
  return "unknown";
}

CacheError::CacheError(CacheErrc code, std::size_t line, const std::string& detail)
    : std::runtime_error(std::string(errc_name(code)) + " at line " + std::to_string(line) +
                         ": " + detail),
      code_(code),
      line_(line) {}

}  // namespace onefold
