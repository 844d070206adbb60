#include "onefold/book.hpp"

#include <charconv>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "onefold/error.hpp"
#include "onefold/stack_eval.hpp"
#include "onefold/table_cache.hpp"

namespace onefold {

void validate(const BookSpec& spec) {
  if (spec.count_upto < 1) throw std::invalid_argument("count-upto must be >= 1");
  if (spec.shortest_upto < 2) throw std::invalid_argument("shortest-upto must be >= 2");
}

void render_book(const BookSpec& spec, const CountTable& counts, const ShortestTable& shortest,
                 std::ostream& out) {
  validate(spec);
  if (counts.size() < spec.count_upto || shortest.size() < spec.shortest_upto) {
    throw std::invalid_argument("tables do not cover the requested book range");
  }
  out << "# onefold book\n"
      << "# format-version " << kBookFormatVersion << '\n'
      << "# ops " << spec.ops.name() << '\n'
      << "# count-upto " << spec.count_upto << '\n'
      << "# shortest-upto " << spec.shortest_upto << '\n'
      << "# counts: n total\n";
  for (std::size_t n = 1; n <= spec.count_upto; ++n) {
    out << n << '\t' << to_decimal(counts.total(n)) << '\n';
  }
  out << "# formulas: n postfix min_len stack_depth\n";
  for (std::size_t n = 2; n <= spec.shortest_upto; ++n) {
    const MinMemoryEmission e = min_memory_postfix(shortest.witness(n));
    out << n << '\t' << e.postfix << '\t' << shortest.min_len(n) << '\t' << e.depth << '\n';
  }
}

BookSummary write_book(const BookSpec& spec, const CountTable& counts,
                       const ShortestTable& shortest) {
  std::ostringstream os;
  render_book(spec, counts, shortest, os);
  write_file_atomically(spec.out, os.str());
  return {spec.count_upto + spec.shortest_upto - 1, spec.out};
}

BookSummary write_book(const BookSpec& spec) {
  validate(spec);
  return write_book(spec, build_count_table(spec.ops, spec.count_upto),
                    build_shortest_table(spec.ops, spec.shortest_upto));
}

namespace {

template <typename T>
bool parse_number(std::string_view text, T& out) {
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

std::vector<std::string_view> fields_of(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t tab; (tab = line.find('\t', start)) != std::string_view::npos; start = tab + 1) {
    out.push_back(line.substr(start, tab - start));
  }
  out.push_back(line.substr(start));
  return out;
}

}  // namespace

Book parse_book(std::istream& in) {
  Book book;
  enum class Section { Header, Counts, Formulas } section = Section::Header;
  std::string line;
  std::size_t line_no = 0;
  auto corrupt = [&](const std::string& detail) {
    throw CacheError(CacheErrc::CorruptRecord, line_no, detail);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (view.starts_with("#")) {
      if (view.starts_with("# ops ")) {
        book.ops = std::string(view.substr(6));
      } else if (view.starts_with("# count-upto ")) {
        if (!parse_number(view.substr(13), book.count_upto)) corrupt("bad count-upto");
      } else if (view.starts_with("# shortest-upto ")) {
        if (!parse_number(view.substr(16), book.shortest_upto)) corrupt("bad shortest-upto");
      } else if (view.starts_with("# counts:")) {
        section = Section::Counts;
      } else if (view.starts_with("# formulas:")) {
        section = Section::Formulas;
      }
      continue;
    }
    const auto f = fields_of(view);
    if (section == Section::Counts) {
      std::uint64_t n = 0;
      BigNat total;
      if (f.size() != 2 || !parse_number(f[0], n) || !parse_decimal(f[1], total)) {
        corrupt("bad count line");
      }
      book.counts.emplace_back(n, std::move(total));
    } else if (section == Section::Formulas) {
      BookFormulaLine entry;
      if (f.size() != 4 || !parse_number(f[0], entry.n) || !parse_number(f[2], entry.min_len) ||
          !parse_number(f[3], entry.depth)) {
        corrupt("bad formula line");
      }
      entry.postfix = std::string(f[1]);
      book.formulas.push_back(std::move(entry));
    } else {
      corrupt("content before any section");
    }
  }
  return book;
}

}  // namespace onefold
