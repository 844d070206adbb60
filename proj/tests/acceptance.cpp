// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <boost/math/distributions/chi_squared.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "onefold/asymptotics.hpp"
#include "onefold/book.hpp"
#include "onefold/brute_force.hpp"
#include "onefold/cli.hpp"
#include "onefold/enumeration.hpp"
#include "onefold/formula.hpp"
#include "onefold/notation.hpp"
#include "onefold/sampler.hpp"
#include "onefold/shortest.hpp"
#include "onefold/stack_eval.hpp"
#include "oracles.hpp"
#include "test_dir.hpp"

namespace {

using namespace onefold;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<void(Outcome&)> body;
};

const std::vector<OpSet> kOpSets = {OpSet::a(), OpSet::am(), OpSet::ame(), OpSet::ae()};

std::string run_cli_capture(const std::vector<std::string>& args, int& code) {
  std::ostringstream out;
  std::ostringstream err;
  code = run_cli(args, out, err);
  return out.str();
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void catalan_closed_form(Outcome& o) {
  const CountTable t = build_count_table(OpSet::a(), 40);
  for (unsigned n = 1; n <= 40; ++n) {
    o.require(t.total(n) == testing::shifted_catalan(n), "total(" + std::to_string(n) + ")");
  }
  o.require(t.total(3) == 2 && t.total(4) == 5, "total(3), total(4)");
}

void census_of_four(Outcome& o) {
  o.require(build_count_table(OpSet::am(), 4).total(4) == 6, "C_am(4) != 6");
  o.require(build_count_table(OpSet::ame(), 4).total(4) == 7, "C_ame(4) != 7");
  std::set<std::string> listed;
  for (const char* s : {"1+(1+(1+1))", "1+((1+1)+1)", "(1+1)+(1+1)", "(1+(1+1))+1",
                        "((1+1)+1)+1", "(1+1)*(1+1)", "(1+1)^(1+1)"}) {
    const Formula f = parse_infix(s);
    o.require(evaluate(f) == 4, std::string("listed formula ") + s);
    listed.insert(to_postfix(f));
  }
  std::set<std::string> generated;
  for (const auto& f : testing::all_formulas(OpSet::ame(), 4)) generated.insert(to_postfix(f));
  o.require(listed == generated, "explicit list differs from the grammar");
}

void oracle_equivalence(Outcome& o) {
  const std::vector<int> am_spot = {1, 1, 2, 6, 16, 52, 160, 536};
  for (OpSet ops : kOpSets) {
    const CountTable t = build_count_table(ops, 12);
    // n ones need 2n-1 tokens.
    const auto oracle = brute_force_counts(ops, 23, BigNat(12));
    for (std::uint64_t n = 1; n <= 12; ++n) {
      const auto it = oracle.find(BigNat(n));
      const BigNat seen = it == oracle.end() ? BigNat(0) : it->second;
      o.require(seen == t.total(n), ops.name() + " n=" + std::to_string(n));
      if (ops == OpSet::am() && n <= am_spot.size()) {
        o.require(t.total(n) == am_spot[n - 1] && seen == am_spot[n - 1],
                  "AM spot value n=" + std::to_string(n));
      }
    }
  }
}

void example_27(Outcome& o) {
  int code = 0;
  const std::string out = run_cli_capture({"eval", "--postfix", "111++11+1+^"}, code);
  o.require(code == kExitOk && out == "value 27\ndepth 3\n", "cli eval output: " + out);

  const ShortestTable table = build_shortest_table(OpSet::ame(), 27);
  o.require(table.min_len(27) == 11, "min_len(27) = " + std::to_string(table.min_len(27)));
  const MinMemoryEmission mm = min_memory_postfix(table.witness(27));
  const StackEvaluation e = eval_postfix_with_depth(mm.postfix);
  o.require(e.value == 27 && e.max_depth == 3 && mm.depth == 3,
            "MinMemory emission " + mm.postfix);

  const auto nine = brute_force_counts(OpSet::ame(), 9, BigNat(27));
  o.require(nine.find(BigNat(27)) == nine.end(), "a 9-token formula reaches 27");
  const auto eleven = brute_force_counts(OpSet::ame(), 11, BigNat(27));
  o.require(eleven.find(BigNat(27)) != eleven.end(), "no 11-token formula reaches 27");
}

void shortest_at_scale(Outcome& o) {
  const ShortestTable table = build_shortest_table(OpSet::ame(), 8000);
  o.require(table.size() == 8000, "table size");
  for (std::uint64_t n = 2; n <= 8000; ++n) {
    const std::string text = to_postfix(table.witness(n));
    const Formula f = from_postfix(text);
    const std::size_t len = f.token_length();
    if (evaluate(f) != n || len != table.min_len(n) || len % 2 == 0 || len > 2 * n - 1) {
      o.require(false, "witness for " + std::to_string(n) + ": " + text);
      return;
    }
  }
  o.require(table.min_len(17) == 13, "min_len(17) = " + std::to_string(table.min_len(17)));
  const Formula paper17 = parse_infix("((1+1)^((1+1)^(1+1)))+1");
  o.require(evaluate(paper17) == 17 && paper17.token_length() == 13, "expression for 17");
}

void sampler_uniformity(Outcome& o) {
  const CountTable am = build_count_table(OpSet::am(), 6);
  RandomSource rng(2013);
  std::map<std::string, int> hits;
  const int draws = 52000;
  for (int i = 0; i < draws; ++i) {
    const Formula f = sample_formula(am, 6, rng);
    if (evaluate(f) != 6) {
      o.require(false, "draw evaluates to " + to_decimal(evaluate(f)));
      return;
    }
    ++hits[to_postfix(f)];
  }
  o.require(hits.size() == 52, "distinct outcomes " + std::to_string(hits.size()));
  const double expected = draws / 52.0;
  double chi = 0;
  for (const auto& [text, h] : hits) chi += (h - expected) * (h - expected) / expected;
  boost::math::chi_squared dist(51);
  const double critical = boost::math::quantile(boost::math::complement(dist, 1e-3));
  o.require(chi < critical, "chi-square " + std::to_string(chi));

  for (OpSet ops : kOpSets) {
    const CountTable t = build_count_table(ops, 40);
    for (std::uint64_t n = 1; n <= 40 && t.total(n) <= 60; ++n) {
      const auto all = testing::all_formulas(ops, n);
      o.require(BigNat(all.size()) == t.total(n), ops.name() + " census n=" + std::to_string(n));
      const mpq_class uniform(BigNat(1), t.total(n));
      for (const auto& f : all) {
        o.require(testing::selection_probability(t, f) == uniform,
                  ops.name() + " probability of " + to_postfix(f));
      }
    }
  }
}

void asymptotics(Outcome& o) {
  struct Case {
    OpSet ops;
    std::size_t n;
    double mu;
    double mu_tol;
    double exp_tol;
  };
  const std::vector<Case> cases = {{OpSet::a(), 2000, 4.0, 0.01, 0.05},
                                   {OpSet::am(), 1000, 4.077, 0.02, 0.1},
                                   {OpSet::ame(), 1000, 4.131, 0.02, 0.1}};
  std::string summary;
  for (const auto& c : cases) {
    const auto terms = build_count_table(c.ops, c.n).totals();
    const ZinnEstimate z = zinn_estimate(terms);
    std::ostringstream msg;
    msg << c.ops.name() << " mu_hat " << z.mu_hat << " exponent_hat " << z.exponent_hat;
    o.require(std::abs(z.mu_hat - c.mu) <= c.mu_tol, msg.str());
    o.require(std::abs(z.exponent_hat - 1.5) <= c.exp_tol, msg.str());
    summary += (summary.empty() ? "" : "; ") + msg.str();
  }
  if (o.ok) o.detail = summary;
}

std::string verify_book_file(const std::filesystem::path& path, OpSet ops) {
  std::ifstream in(path);
  const Book book = parse_book(in);
  if (book.ops != ops.name() || book.count_upto != 40 || book.shortest_upto != 8000) {
    return "header";
  }
  if (book.counts.size() + book.formulas.size() != 40 + 7999) return "entry count";
  const CountTable counts = build_count_table(ops, 40);
  for (const auto& [n, total] : book.counts) {
    if (counts.total(n) != total) return "count line " + std::to_string(n);
  }
  std::uint64_t expect_n = 2;
  for (const auto& line : book.formulas) {
    if (line.n != expect_n++) return "formula index " + std::to_string(line.n);
    const Formula f = from_postfix(line.postfix);
    const StackEvaluation e = eval_postfix_with_depth(line.postfix);
    if (!f.uses_only(ops) || f.token_length() != line.min_len || e.value != line.n ||
        e.max_depth != line.depth) {
      return "formula line " + std::to_string(line.n);
    }
  }
  return "";
}

Outcome book_for(OpSet ops, double& worst_seconds) {
  Outcome o;
  testing::TempDir dir;
  std::string first_text;
  for (int attempt = 0; attempt < 2; ++attempt) {
    const auto start = std::chrono::steady_clock::now();
    const std::string out = (dir / ("book-" + std::to_string(attempt) + ".txt")).string();
    // Each run starts cold, so both builds do the full work.
    int code = 0;
    run_cli_capture({"--no-cache", "book", "--ops", ops.name(), "--count-upto", "40",
                     "--shortest-upto", "8000", "--out", out},
                    code);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    worst_seconds = std::max(worst_seconds, secs);
    o.require(code == kExitOk, ops.name() + " exit code " + std::to_string(code));
    o.require(secs < 120, ops.name() + " run took " + std::to_string(secs) + " s");
    const std::string text = slurp(out);
    if (attempt == 0) {
      first_text = text;
      const std::string bad = verify_book_file(out, ops);
      o.require(bad.empty(), ops.name() + " " + bad);
    } else {
      o.require(text == first_text, ops.name() + " differs between runs");
    }
  }
  return o;
}

void book_reproduction(Outcome& o) {
  double worst = 0;
  for (OpSet ops : {OpSet::am(), OpSet::ame(), OpSet::ae()}) {
    const Outcome one = book_for(ops, worst);
    o.require(one.ok, one.detail);
  }
  if (o.ok) o.detail = "slowest run " + std::to_string(worst) + " s";
}

void round_trip_properties(Outcome& o) {
  RandomSource rng(20130);
  std::vector<CountTable> tables;
  for (OpSet ops : kOpSets) tables.push_back(build_count_table(ops, 120));
  for (int i = 0; i < 10000; ++i) {
    const CountTable& t = tables[i % tables.size()];
    const std::uint64_t n = 1 + to_u64(rng.uniform_below(BigNat(120)));
    const Formula f = sample_formula(t, n, rng);
    const std::string text = to_postfix(f);
    const std::string where = t.ops().name() + " " + text;
    o.require(from_postfix(text) == f, "round trip " + where);

    const StackEvaluation natural = eval_postfix_with_depth(text);
    const MinMemoryEmission mm = min_memory_postfix(f);
    const StackEvaluation reordered = eval_postfix_with_depth(mm.postfix);
    o.require(natural.value == n && reordered.value == n, "value changed " + where);
    o.require(reordered.max_depth <= natural.max_depth, "depth increased " + where);
    o.require(reordered.max_depth == mm.depth, "reported depth " + where);
    if (!f.contains(OpKind::Pow)) {
      o.require(reordered.max_depth == strahler(f), "strahler " + where);
    }
    if (!o.ok) return;
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "catalan closed form", 1, catalan_closed_form},
      {2, "census of 4", 1, census_of_four},
      {3, "oracle equivalence", 120, oracle_equivalence},
      {4, "example 27", 10, example_27},
      {5, "shortest table AME 8000", 60, shortest_at_scale},
      {6, "sampler uniformity", 30, sampler_uniformity},
      {7, "asymptotics", 180, asymptotics},
      {8, "book reproduction", 360, book_reproduction},
      {9, "round trip and validation", 60, round_trip_properties},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs >= c.limit_seconds) {
      o.ok = false;
      o.detail = "over time limit";
    }
    if (!o.ok) ++failures;
    std::printf("criterion %d %-28s %s  %.2fs / %.0fs%s%s\n", c.id, c.name.c_str(),
                o.ok ? "PASS" : "FAIL", secs, c.limit_seconds, o.detail.empty() ? "" : "  ",
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
