#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <variant>

#include "onefold/enumeration.hpp"
#include "onefold/shortest.hpp"

namespace onefold {

// On-disk snapshot layout, one item per LF-terminated line:
//
//   onefold-table
//   version 1
//   kind counts|shortest
//   ops a|am|ame|ae
//   size N
//   <N records>
//
// counts records:   n TAB total TAB add_rooted TAB mul_rooted TAB pow_rooted
// shortest records: n TAB min_len TAB postfix
//
// Big integers are canonical decimal. Files are written to a temporary name
// and renamed into place, so readers never see a partial snapshot.
inline constexpr const char* kTableMagic = "onefold-table";
inline constexpr int kTableVersion = 1;

void save_table(const CountTable& table, const std::filesystem::path& path);
void save_table(const ShortestTable& table, const std::filesystem::path& path);

using AnyTable = std::variant<CountTable, ShortestTable>;

// Throws IoError when unreadable and CacheError (bad-magic, version-mismatch,
// corrupt-record with its line) when the content cannot be trusted. Every
// record is re-checked: count rows must sum, witnesses must evaluate to n.
AnyTable load_table(const std::filesystem::path& path);
CountTable load_count_table(const std::filesystem::path& path);
ShortestTable load_shortest_table(const std::filesystem::path& path);

// Writes contents to path via a sibling temporary file and rename.
void write_file_atomically(const std::filesystem::path& path, const std::string& contents);

// Table provider backed by an optional cache directory. A cached table with
// at least the requested size is reused; a smaller one seeds the build and the
// extended table replaces it. Unusable cache files are rebuilt and
// overwritten; the reason is kept in last_warning().
class TableStore {
 public:
  explicit TableStore(std::optional<std::filesystem::path> dir = std::nullopt);

  CountTable counts(OpSet ops, std::size_t n);
  ShortestTable shortest(OpSet ops, std::size_t n);

  std::filesystem::path count_path(OpSet ops) const;
  std::filesystem::path shortest_path(OpSet ops) const;

  const std::string& last_warning() const noexcept { return warning_; }

 private:
  std::optional<std::filesystem::path> dir_;
  std::string warning_;
};

}  // namespace onefold
