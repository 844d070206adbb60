#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "onefold/bignat.hpp"
#include "onefold/enumeration.hpp"
#include "onefold/op_set.hpp"
#include "onefold/shortest.hpp"

namespace onefold {

inline constexpr int kBookFormatVersion = 1;

struct BookSpec {
  OpSet ops = OpSet::ame();
  std::size_t count_upto = 40;      // counts for n = 1..count_upto
  std::size_t shortest_upto = 8000;  // formulas for n = 2..shortest_upto
  std::filesystem::path out;
};

struct BookSummary {
  std::size_t entries = 0;  // content (non-comment) lines
  std::filesystem::path path;
};

// Throws std::invalid_argument unless count_upto >= 1 and shortest_upto >= 2.
void validate(const BookSpec& spec);

// Book layout. Lines starting with '#' are header and section markers; every
// other line is content:
//
//   # onefold book
//   # format-version 1
//   # ops ame
//   # count-upto K1
//   # shortest-upto K2
//   # counts: n total
//   n TAB total                              (n = 1..K1)
//   # formulas: n postfix min_len stack_depth
//   n TAB postfix TAB min_len TAB depth      (n = 2..K2)
//
// The postfix column is the memory-minimal emission of the table's witness.
// Tables must cover K1 and K2 respectively.
void render_book(const BookSpec& spec, const CountTable& counts, const ShortestTable& shortest,
                 std::ostream& out);

// Builds the tables and writes spec.out atomically. Throws IoError when the
// file cannot be written.
BookSummary write_book(const BookSpec& spec);
BookSummary write_book(const BookSpec& spec, const CountTable& counts,
                       const ShortestTable& shortest);

struct BookFormulaLine {
  std::uint64_t n;
  std::string postfix;
  std::size_t min_len;
  std::size_t depth;
};

struct Book {
  std::string ops;
  std::size_t count_upto = 0;
  std::size_t shortest_upto = 0;
  std::vector<std::pair<std::uint64_t, BigNat>> counts;
  std::vector<BookFormulaLine> formulas;
};

// Reads a book back. Syntax only; the caller decides what to verify. Throws
// CacheError(CorruptRecord) with the offending line.
Book parse_book(std::istream& in);

}  // namespace onefold
