#include "onefold/table_cache.hpp"

#include <atomic>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string_view>
#include <system_error>
#include <vector>

#include <unistd.h>

#include "onefold/error.hpp"
#include "onefold/notation.hpp"

namespace onefold {

namespace fs = std::filesystem;

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    out.push_back(line.substr(start, tab == std::string_view::npos ? tab : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return out;
}

bool parse_size(std::string_view text, std::size_t& out) {
  if (text.empty() || (text.size() > 1 && text.front() == '0')) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

std::string header(const char* kind, OpSet ops, std::size_t size) {
  std::ostringstream os;
  os << kTableMagic << '\n'
     << "version " << kTableVersion << '\n'
     << "kind " << kind << '\n'
     << "ops " << ops.name() << '\n'
     << "size " << size << '\n';
  return os.str();
}

class Reader {
 public:
  explicit Reader(const fs::path& path) : in_(path), path_(path) {
    if (!in_) throw IoError(path, "cannot open for reading");
  }

  // Next line, or nullopt at end of file.
  std::optional<std::string> next() {
    std::string line;
    if (!std::getline(in_, line)) {
      if (in_.bad()) throw IoError(path_, "read failure");
      return std::nullopt;
    }
    ++line_no_;
    return line;
  }

  std::string expect(const std::string& what) {
    auto line = next();
    if (!line) {
      throw CacheError(CacheErrc::CorruptRecord, line_no_ + 1, "truncated before " + what);
    }
    return *line;
  }

  // Reads "key value" and returns value.
  std::string keyed(const std::string& key) {
    const std::string line = expect(key);
    const std::string prefix = key + " ";
    if (line.rfind(prefix, 0) != 0) corrupt("expected '" + key + "'");
    return line.substr(prefix.size());
  }

  [[noreturn]] void corrupt(const std::string& detail) const {
    throw CacheError(CacheErrc::CorruptRecord, line_no_, detail);
  }

  std::size_t line_no() const { return line_no_; }

 private:
  std::ifstream in_;
  fs::path path_;
  std::size_t line_no_ = 0;
};

struct Header {
  std::string kind;
  OpSet ops;
  std::size_t size = 0;
};

Header read_header(Reader& r) {
  auto magic = r.next();
  if (!magic || *magic != kTableMagic) {
    throw CacheError(CacheErrc::BadMagic, 1, std::string("expected '") + kTableMagic + "'");
  }
  const std::string version = r.keyed("version");
  if (version != std::to_string(kTableVersion)) {
    throw CacheError(CacheErrc::VersionMismatch, r.line_no(),
                     "found version " + version + ", this build reads " +
                         std::to_string(kTableVersion));
  }
  Header h;
  h.kind = r.keyed("kind");
  if (h.kind != "counts" && h.kind != "shortest") r.corrupt("unknown kind '" + h.kind + "'");
  const std::string ops = r.keyed("ops");
  auto parsed = OpSet::parse(ops);
  if (!parsed) r.corrupt("unknown ops '" + ops + "'");
  h.ops = *parsed;
  if (!parse_size(r.keyed("size"), h.size)) r.corrupt("bad size");
  return h;
}

CountTable read_counts(Reader& r, const Header& h) {
  std::vector<CountRow> rows;
  rows.reserve(h.size);
  for (std::size_t n = 1; n <= h.size; ++n) {
    const std::string line = r.expect("record " + std::to_string(n));
    const auto fields = split_tabs(line);
    std::size_t index = 0;
    if (fields.size() != 5 || !parse_size(fields[0], index) || index != n) {
      r.corrupt("expected count record for n=" + std::to_string(n));
    }
    CountRow row;
    BigNat* targets[] = {&row.total, &row.add_rooted, &row.mul_rooted, &row.pow_rooted};
    for (std::size_t i = 0; i < 4; ++i) {
      if (!parse_decimal(fields[i + 1], *targets[i])) r.corrupt("bad number");
    }
    const bool consistent =
        n == 1 ? (row.total == 1 && row.add_rooted == 0 && row.mul_rooted == 0 && row.pow_rooted == 0)
               : row.total == row.add_rooted + row.mul_rooted + row.pow_rooted;
    if (!consistent) r.corrupt("root splits do not sum to the total");
    if ((!h.ops.contains(OpKind::Mul) && row.mul_rooted != 0) ||
        (!h.ops.contains(OpKind::Pow) && row.pow_rooted != 0)) {
      r.corrupt("count for an operation outside " + h.ops.name());
    }
    rows.push_back(std::move(row));
  }
  if (r.next()) r.corrupt("unexpected trailing content");
  return CountTable::from_rows(h.ops, std::move(rows));
}

ShortestTable read_shortest(Reader& r, const Header& h) {
  std::vector<Formula> witnesses;
  witnesses.reserve(h.size);
  for (std::size_t n = 1; n <= h.size; ++n) {
    const std::string line = r.expect("record " + std::to_string(n));
    const auto fields = split_tabs(line);
    std::size_t index = 0;
    std::size_t len = 0;
    if (fields.size() != 3 || !parse_size(fields[0], index) || index != n ||
        !parse_size(fields[1], len)) {
      r.corrupt("expected shortest record for n=" + std::to_string(n));
    }
    Formula f;
    try {
      f = from_postfix(fields[2]);
    } catch (const FormulaError& e) {
      r.corrupt(e.what());
    }
    if (f.token_length() != len || to_postfix(f) != fields[2] || !f.uses_only(h.ops)) {
      r.corrupt("witness does not match its record");
    }
    auto value = evaluate(f, big(n));
    if (!value || *value != n) r.corrupt("witness does not evaluate to " + std::to_string(n));
    witnesses.push_back(std::move(f));
  }
  if (r.next()) r.corrupt("unexpected trailing content");
  return ShortestTable::from_witnesses(h.ops, std::move(witnesses));
}

}  // namespace

void write_file_atomically(const fs::path& path, const std::string& contents) {
  const fs::path parent = path.has_parent_path() ? path.parent_path() : fs::path(".");
  static std::atomic<unsigned> counter{0};
  const fs::path tmp = parent / ("." + path.filename().string() + ".tmp" +
                                 std::to_string(::getpid()) + "-" + std::to_string(counter++));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(path, "cannot open for writing");
    out << contents;
    out.flush();
    if (!out) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw IoError(path, "write failure");
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw IoError(path, "rename failed: " + ec.message());
  }
}

void save_table(const CountTable& table, const fs::path& path) {
  std::string out = header("counts", table.ops(), table.size());
  for (std::size_t n = 1; n <= table.size(); ++n) {
    const CountRow& row = table.row(n);
    out += std::to_string(n);
    for (const BigNat* v : {&row.total, &row.add_rooted, &row.mul_rooted, &row.pow_rooted}) {
      out += '\t';
      out += to_decimal(*v);
    }
    out += '\n';
  }
  write_file_atomically(path, out);
}

void save_table(const ShortestTable& table, const fs::path& path) {
  std::string out = header("shortest", table.ops(), table.size());
  for (std::size_t n = 1; n <= table.size(); ++n) {
    out += std::to_string(n);
    out += '\t';
    out += std::to_string(table.min_len(n));
    out += '\t';
    out += to_postfix(table.witness(n));
    out += '\n';
  }
  write_file_atomically(path, out);
}

AnyTable load_table(const fs::path& path) {
  Reader r(path);
  const Header h = read_header(r);
  if (h.kind == "counts") return read_counts(r, h);
  return read_shortest(r, h);
}

CountTable load_count_table(const fs::path& path) {
  AnyTable t = load_table(path);
  if (auto* counts = std::get_if<CountTable>(&t)) return std::move(*counts);
  throw CacheError(CacheErrc::CorruptRecord, 3, "expected a counts table");
}

ShortestTable load_shortest_table(const fs::path& path) {
  AnyTable t = load_table(path);
  if (auto* shortest = std::get_if<ShortestTable>(&t)) return std::move(*shortest);
  throw CacheError(CacheErrc::CorruptRecord, 3, "expected a shortest table");
}

TableStore::TableStore(std::optional<fs::path> dir) : dir_(std::move(dir)) {}

fs::path TableStore::count_path(OpSet ops) const {
  return dir_.value_or(fs::path()) / ("counts-" + ops.name() + ".tbl");
}

fs::path TableStore::shortest_path(OpSet ops) const {
  return dir_.value_or(fs::path()) / ("shortest-" + ops.name() + ".tbl");
}

namespace {

template <typename Table, typename Load>
Table fetch(const std::optional<fs::path>& dir, const fs::path& path, OpSet ops, std::size_t n,
            Load load, std::string& warning) {
  std::optional<Table> table;
  if (dir && fs::exists(path)) {
    try {
      table = load(path);
      if (table->ops() != ops) {
        warning = path.string() + ": cached table is for ops " + table->ops().name();
        table.reset();
      }
    } catch (const std::exception& e) {
      warning = std::string("ignoring cache: ") + e.what();
    }
  }
  if (!table) table.emplace(ops);
  if (table->size() >= n) return std::move(*table);
  table->extend_to(n);
  if (dir) {
    std::error_code ec;
    fs::create_directories(*dir, ec);
    if (ec) throw IoError(*dir, "cannot create cache directory: " + ec.message());
    save_table(*table, path);
  }
  return std::move(*table);
}

}  // namespace

CountTable TableStore::counts(OpSet ops, std::size_t n) {
  return fetch<CountTable>(dir_, count_path(ops), ops, n, load_count_table, warning_);
}

ShortestTable TableStore::shortest(OpSet ops, std::size_t n) {
  return fetch<ShortestTable>(dir_, shortest_path(ops), ops, n, load_shortest_table, warning_);
}

}  // namespace onefold
