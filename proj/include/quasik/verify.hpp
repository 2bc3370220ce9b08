#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quasik/corpus.hpp"

namespace quasik {

/// One line of a verification report.
struct CheckResult {
  std::string suite;
  std::string subject;
  bool pass = false;
  /// The item ran into the closure cap rather than failing an invariant.
  bool cap_exceeded = false;
  std::string expected;
  std::string actual;
};

struct Report {
  std::vector<CheckResult> checks;

  bool passed() const;
  int failures() const;
  int cap_overflows() const;
  /// 0 all pass, 1 some invariant failed, 3 only cap overflows.
  int exit_code() const;
  std::string to_text() const;
  void append(const Report& other);
};

struct VerifyOptions {
  int max_n = 2;
  /// Randomized classes per randomized check.
  int trials = 20;
  std::uint32_t seed = 20240917;
  /// Kunneth pairs need |G| * |H| <= this.
  int kunneth_max_order = 64;
  /// Change-of-group ambient groups need |G| <= this.
  int change_max_order = 24;
  /// lambda-iter skips G-sets larger than this.
  int iter_max_points = 12;
  /// Items run on this many worker threads; 0 picks the hardware count.
  int workers = 0;
};

const std::vector<std::string>& suite_names();

/// Runs one suite (or "all") over the corpus. Throws InputError on an
/// unknown suite name. Report order does not depend on `workers`.
Report run_suite(const std::string& suite, const std::vector<NamedGroup>& corpus,
                 const VerifyOptions& opt = {});

/// Number of pairwise commuting k-tuples in `g`.
std::int64_t commuting_tuple_count(const FiniteGroup& g, int k);

}  // namespace quasik
