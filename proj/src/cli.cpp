#include "onefold/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>

#include "onefold/asymptotics.hpp"
#include "onefold/book.hpp"
#include "onefold/enumeration.hpp"
#include "onefold/error.hpp"
#include "onefold/notation.hpp"
#include "onefold/sampler.hpp"
#include "onefold/shortest.hpp"
#include "onefold/stack_eval.hpp"
#include "onefold/table_cache.hpp"

namespace onefold {

namespace {

using nlohmann::json;

constexpr const char* kCacheEnv = "ONEFOLD_CACHE_DIR";

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string ops = "ame";
  bool json = false;
  std::string cache_dir;
  bool no_cache = false;

  std::size_t upto = 0;
  bool per_root = false;

  std::uint64_t value = 0;
  std::size_t draws = 1;
  std::uint64_t seed = 0;
  std::string format = "postfix";

  std::string range;
  bool minmemory = false;

  std::string postfix;
  std::string infix;

  std::size_t window = kDefaultZinnWindow;

  std::size_t count_upto = 0;
  std::size_t shortest_upto = 0;
  std::string out_path;
};

OpSet ops_of(const Options& o) {
  auto ops = OpSet::parse(o.ops);
  if (!ops) throw UsageError("--ops must be one of a, am, ame, ae");
  return *ops;
}

TableStore store_of(const Options& o) {
  if (o.no_cache || o.cache_dir.empty()) return TableStore();
  return TableStore(std::filesystem::path(o.cache_dir));
}

void report_cache_warning(const TableStore& store, std::ostream& err) {
  if (!store.last_warning().empty()) err << "onefold: warning: " << store.last_warning() << '\n';
}

std::string render(const Formula& f, const std::string& format) {
  return format == "infix" ? to_infix(f) : to_postfix(f);
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  auto parse = [](std::string_view s, std::uint64_t& v) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    return !s.empty() && ec == std::errc() && ptr == s.data() + s.size();
  };
  if (dots == std::string::npos || !parse(std::string_view(text).substr(0, dots), lo) ||
      !parse(std::string_view(text).substr(dots + 2), hi) || lo < 1 || lo > hi) {
    throw UsageError("--range must look like LO..HI with 1 <= LO <= HI");
  }
  return {lo, hi};
}

void cmd_count(const Options& o, std::ostream& out, std::ostream& err) {
  const OpSet ops = ops_of(o);
  TableStore store = store_of(o);
  const CountTable table = store.counts(ops, o.upto);
  report_cache_warning(store, err);
  if (o.json) {
    json rows = json::array();
    for (std::size_t n = 1; n <= o.upto; ++n) {
      const CountRow& r = table.row(n);
      json row = {{"n", n}, {"total", to_decimal(r.total)}};
      if (o.per_root) {
        row["add"] = to_decimal(r.add_rooted);
        row["mul"] = to_decimal(r.mul_rooted);
        row["pow"] = to_decimal(r.pow_rooted);
      }
      rows.push_back(std::move(row));
    }
    out << json{{"command", "count"}, {"ops", ops.name()}, {"upto", o.upto}, {"rows", rows}}.dump(2)
        << '\n';
    return;
  }
  for (std::size_t n = 1; n <= o.upto; ++n) {
    const CountRow& r = table.row(n);
    out << n << ' ' << to_decimal(r.total);
    if (o.per_root) {
      out << ' ' << to_decimal(r.add_rooted) << ' ' << to_decimal(r.mul_rooted) << ' '
          << to_decimal(r.pow_rooted);
    }
    out << '\n';
  }
}

void cmd_sample(const Options& o, std::ostream& out, std::ostream& err) {
  const OpSet ops = ops_of(o);
  TableStore store = store_of(o);
  const CountTable table = store.counts(ops, o.value);
  report_cache_warning(store, err);
  const auto formulas = sample_many(table, o.value, o.draws, o.seed);
  if (o.json) {
    json list = json::array();
    for (const auto& f : formulas) list.push_back(render(f, o.format));
    out << json{{"command", "sample"}, {"ops", ops.name()},   {"value", o.value},
                {"seed", o.seed},      {"format", o.format}, {"formulas", list}}
               .dump(2)
        << '\n';
    return;
  }
  for (const auto& f : formulas) out << render(f, o.format) << '\n';
}

void cmd_shortest(const Options& o, std::ostream& out, std::ostream& err) {
  const OpSet ops = ops_of(o);
  std::uint64_t lo = o.value;
  std::uint64_t hi = o.value;
  if (!o.range.empty()) {
    std::tie(lo, hi) = parse_range(o.range);
  } else if (o.value == 0) {
    throw UsageError("shortest needs --value or --range");
  }
  TableStore store = store_of(o);
  const ShortestTable table = store.shortest(ops, hi);
  report_cache_warning(store, err);
  json entries = json::array();
  for (std::uint64_t n = lo; n <= hi; ++n) {
    const auto [witness, len] = shortest_formula(table, n);
    std::optional<MinMemoryEmission> emitted;
    if (o.minmemory) emitted = min_memory_postfix(witness);
    const Formula& shown = emitted ? emitted->reordered : witness;
    const std::string text = render(shown, o.format);
    if (o.json) {
      json e = {{"n", n}, {"formula", text}, {"min_len", len}};
      if (emitted) e["depth"] = emitted->depth;
      entries.push_back(std::move(e));
    } else {
      out << n << ' ' << text << ' ' << len;
      if (emitted) out << ' ' << emitted->depth;
      out << '\n';
    }
  }
  if (o.json) {
    out << json{{"command", "shortest"}, {"ops", ops.name()}, {"format", o.format},
                {"entries", entries}}
               .dump(2)
        << '\n';
  }
}

void cmd_eval(const Options& o, std::ostream& out) {
  if (o.postfix.empty() == o.infix.empty()) {
    throw UsageError("eval needs exactly one of --postfix or --infix");
  }
  const std::string postfix = o.postfix.empty() ? to_postfix(parse_infix(o.infix)) : o.postfix;
  const StackEvaluation result = eval_postfix_with_depth(postfix);
  if (o.json) {
    out << json{{"command", "eval"},
                {"postfix", to_postfix(from_postfix(postfix))},
                {"value", to_decimal(result.value)},
                {"depth", result.max_depth}}
               .dump(2)
        << '\n';
    return;
  }
  out << "value " << to_decimal(result.value) << '\n' << "depth " << result.max_depth << '\n';
}

void cmd_validate(const Options& o, std::ostream& out) {
  const Formula f = from_postfix(o.postfix);
  if (o.json) {
    out << json{{"command", "validate"}, {"valid", true}, {"postfix", to_postfix(f)},
                {"tokens", f.token_length()}}
               .dump(2)
        << '\n';
    return;
  }
  out << "valid " << to_postfix(f) << '\n';
}

void cmd_asymptotics(const Options& o, std::ostream& out, std::ostream& err) {
  const OpSet ops = ops_of(o);
  TableStore store = store_of(o);
  const CountTable table = store.counts(ops, o.upto);
  report_cache_warning(store, err);
  const auto terms = table.totals();
  const ZinnEstimate est = zinn_estimate(terms, o.window);
  const auto tail_begin = est.points.end() - static_cast<std::ptrdiff_t>(est.window);
  if (o.json) {
    json tail = json::array();
    for (auto it = tail_begin; it != est.points.end(); ++it) {
      tail.push_back({{"n", it->n}, {"ratio", it->ratio}, {"mu", it->mu}, {"g", it->g},
                      {"exponent", it->exponent}});
    }
    out << json{{"command", "asymptotics"}, {"ops", ops.name()}, {"upto", est.size},
                {"window", est.window},     {"mu_hat", est.mu_hat},
                {"exponent_hat", est.exponent_hat}, {"g_hat", -est.exponent_hat},
                {"tail", tail}}
               .dump(2)
        << '\n';
    return;
  }
  std::ostringstream os;
  os.precision(12);
  os << "n ratio mu g exponent\n";
  for (auto it = tail_begin; it != est.points.end(); ++it) {
    os << it->n << ' ' << it->ratio << ' ' << it->mu << ' ' << it->g << ' ' << it->exponent << '\n';
  }
  os << "mu_hat " << est.mu_hat << '\n' << "exponent_hat " << est.exponent_hat << '\n';
  out << os.str();
}

void cmd_book(const Options& o, std::ostream& out, std::ostream& err) {
  BookSpec spec;
  spec.ops = ops_of(o);
  spec.count_upto = o.count_upto;
  spec.shortest_upto = o.shortest_upto;
  spec.out = o.out_path;
  validate(spec);
  TableStore store = store_of(o);
  const CountTable counts = store.counts(spec.ops, spec.count_upto);
  const ShortestTable shortest = store.shortest(spec.ops, spec.shortest_upto);
  report_cache_warning(store, err);
  const BookSummary summary = write_book(spec, counts, shortest);
  if (o.json) {
    out << json{{"command", "book"}, {"ops", spec.ops.name()}, {"path", summary.path.string()},
                {"entries", summary.entries}}
               .dump(2)
        << '\n';
    return;
  }
  out << "wrote " << summary.entries << " entries to " << summary.path.string() << '\n';
}

void add_ops(CLI::App* cmd, Options& o) {
  cmd->add_option("--ops", o.ops, "Operation set")
      ->check(CLI::IsMember({"a", "am", "ame", "ae"}))
      ->capture_default_str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Enumerate, sample and minimize formulas built from 1, +, * and ^", "onefold"};
  app.require_subcommand(1, 1);
  app.add_flag("--json", o.json, "Emit a single JSON document instead of plain text");
  app.add_option("--cache-dir", o.cache_dir, "Directory for reusable tables")->envname(kCacheEnv);
  app.add_flag("--no-cache", o.no_cache, "Recompute tables, ignoring the cache");
  const auto positive = CLI::PositiveNumber;

  auto* count = app.add_subcommand("count", "Number of representations of n = 1..N");
  add_ops(count, o);
  count->add_option("--upto", o.upto, "Largest n")->required()->check(positive);
  count->add_flag("--per-root", o.per_root, "Also print counts split by root operation");

  auto* sample = app.add_subcommand("sample", "Uniformly random representations of n");
  add_ops(sample, o);
  sample->add_option("--value", o.value, "The integer n")->required()->check(positive);
  sample->add_option("--draws", o.draws, "Number of formulas")->check(positive)->capture_default_str();
  sample->add_option("--seed", o.seed, "64-bit seed")->capture_default_str();
  sample->add_option("--format", o.format)->check(CLI::IsMember({"postfix", "infix"}))->capture_default_str();

  auto* shortest = app.add_subcommand("shortest", "Minimal-length formulas");
  add_ops(shortest, o);
  auto* value_opt = shortest->add_option("--value", o.value, "The integer n")->check(positive);
  auto* range_opt = shortest->add_option("--range", o.range, "LO..HI");
  value_opt->excludes(range_opt);
  shortest->add_flag("--minmemory", o.minmemory, "Reorder operands to minimize stack depth");
  shortest->add_option("--format", o.format)->check(CLI::IsMember({"postfix", "infix"}))->capture_default_str();

  auto* eval = app.add_subcommand("eval", "Evaluate a formula and report its stack depth");
  auto* eval_postfix = eval->add_option("--postfix", o.postfix, "Formula in postfix");
  auto* eval_infix = eval->add_option("--infix", o.infix, "Fully parenthesized infix formula");
  eval_postfix->excludes(eval_infix);

  auto* validate_cmd = app.add_subcommand("validate", "Check a postfix formula");
  validate_cmd->add_option("--postfix", o.postfix, "Formula in postfix")->required();

  auto* asym = app.add_subcommand("asymptotics", "Ratio-method growth estimates");
  add_ops(asym, o);
  asym->add_option("--upto", o.upto, "Sequence length")->required()->check(positive);
  asym->add_option("--window", o.window, "Points averaged at the tail")->check(positive)->capture_default_str();

  auto* book = app.add_subcommand("book", "Write a book of counts and minimal formulas");
  add_ops(book, o);
  book->add_option("--count-upto", o.count_upto, "K1")->required()->check(positive);
  book->add_option("--shortest-upto", o.shortest_upto, "K2")->required()->check(positive);
  book->add_option("--out", o.out_path, "Output path")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "onefold: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ostringstream buffer;
  try {
    if (count->parsed()) {
      cmd_count(o, buffer, err);
    } else if (sample->parsed()) {
      cmd_sample(o, buffer, err);
    } else if (shortest->parsed()) {
      cmd_shortest(o, buffer, err);
    } else if (eval->parsed()) {
      cmd_eval(o, buffer);
    } else if (validate_cmd->parsed()) {
      cmd_validate(o, buffer);
    } else if (asym->parsed()) {
      cmd_asymptotics(o, buffer, err);
    } else if (book->parsed()) {
      cmd_book(o, buffer, err);
    }
  } catch (const FormulaError& e) {
    err << "onefold: " << e.what() << '\n';
    return e.code() == FormulaErrc::AmbiguousInfix ? kExitUsage : kExitInvalidInput;
  } catch (const CacheError& e) {
    err << "onefold: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const IoError& e) {
    err << "onefold: " << e.what() << '\n';
    return kExitIo;
  } catch (const SequenceError& e) {
    err << "onefold: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "onefold: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "onefold: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "onefold: " << e.what() << '\n';
    return kExitIo;
  }
  out << buffer.str();
  out.flush();
  return kExitOk;
}

}  // namespace onefold
