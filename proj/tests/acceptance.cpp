// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "oracles.hpp"
#include "quasik/io.hpp"
#include "quasik/verify.hpp"

using namespace quasik;

namespace {

// pinned limits
constexpr double kFreenessSeconds = 60.0;
constexpr double kCachedTableSeconds = 10.0;
constexpr double kNumericTolerance = 1e-9;
constexpr int kRandomTrials = 100;
constexpr int kMaxN = 2;
constexpr int kKunnethMaxOrder = 64;
constexpr int kChangeMaxOrder = 24;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

VerifyOptions options() {
  VerifyOptions opt;
  opt.max_n = kMaxN;
  opt.trials = kRandomTrials;
  opt.kunneth_max_order = kKunnethMaxOrder;
  opt.change_max_order = kChangeMaxOrder;
  return opt;
}

// Summarizes the checks of a report whose subject satisfies `keep`.
Outcome summarize(const Report& r, const std::function<bool(const CheckResult&)>& keep = {}) {
  int total = 0, bad = 0;
  std::string first;
  for (const auto& c : r.checks) {
    if (keep && !keep(c)) continue;
    ++total;
    if (!c.pass) {
      ++bad;
      if (first.empty())
        first = "; first failure: " + c.subject + " (expected " + c.expected + ", actual " + c.actual + ")";
    }
  }
  Outcome o;
  o.pass = bad == 0 && total > 0;
  o.detail = std::to_string(total - bad) + "/" + std::to_string(total) + " checks" + first;
  return o;
}

Outcome merge(Outcome a, const Outcome& b) {
  a.pass = a.pass && b.pass;
  a.detail += ", " + b.detail;
  return a;
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << " s";
  return os.str();
}

Outcome criterion1() {
  auto t0 = Clock::now();
  Report r = run_suite("freeness", builtin_corpus(), options());
  const double secs = seconds_since(t0);
  Outcome o = summarize(r);
  o.pass = o.pass && secs <= kFreenessSeconds;
  o.detail += ", " + fmt_seconds(secs) + " (limit " + fmt_seconds(kFreenessSeconds) + ")";
  return o;
}

Outcome criterion2() {
  int total = 0, bad = 0;
  std::string first;
  for (const auto& ng : builtin_corpus())
    for (int n = 1; n <= kMaxN; ++n) {
      ++total;
      const auto rank = qk_compute(ng.group, GSet::point(ng.group), n)->total_rank();
      const auto brute = oracle::commuting_tuple_orbits(*ng.group, n + 1);
      if (static_cast<std::size_t>(rank) != brute) {
        ++bad;
        if (first.empty())
          first = "; " + ng.name + " n=" + std::to_string(n) + ": rank " + std::to_string(rank) + " vs " +
                  std::to_string(brute);
      }
    }
  const auto s3 = qk_compute(corpus_group("S3"), GSet::point(corpus_group("S3")), 1)->total_rank();
  Outcome o;
  o.pass = bad == 0 && s3 == 8;
  o.detail = std::to_string(total - bad) + "/" + std::to_string(total) + " ranks match brute force, S3 n=1 rank " +
             std::to_string(s3) + first;
  return o;
}

Outcome criterion3() { return summarize(run_suite("kunneth", builtin_corpus(), options())); }

Outcome criterion4() {
  Outcome o = summarize(run_suite("change-of-group", builtin_corpus(), options()));
  auto s3 = corpus_group("S3");
  auto h = FiniteGroup::from_generators(3, {Perm::from_cycles(3, {{0, 1}})});
  auto c = change_of_group(s3, GroupHom::inclusion(h, s3), GSet::point(h), 1);
  const int src = c.rho.domain->total_rank(), dst = c.rho.codomain->total_rank();
  o.pass = o.pass && c.bijective && src == 4 && dst == 4;
  o.detail += ", <(0 1)> in S3 on pt: " + std::to_string(src) + " = " + std::to_string(dst);
  return o;
}

Outcome criterion5() {
  VerifyOptions opt = options();
  Report r = run_suite("ring-axioms", builtin_corpus(), opt);
  return summarize(r, [](const CheckResult& c) {
    return c.subject.find("phi^*") != std::string::npos || c.subject.find("restriction multiplicative") != std::string::npos;
  });
}

Outcome criterion6() {
  Outcome o = summarize(run_suite("free-action", builtin_corpus(), options()));
  Report t = run_suite("trivial-action", builtin_corpus(), options());
  // ten triples, each at every n
  o = merge(o, summarize(t));
  o.pass = o.pass && static_cast<int>(t.checks.size()) == 10 * kMaxN;
  return o;
}

Outcome criterion7() {
  Outcome o = summarize(run_suite("lambda-iter", builtin_corpus(), options()), [](const CheckResult& c) {
    return c.subject.find("component count") != std::string::npos;
  });
  int total = 0, bad = 0;
  for (const auto& ng : builtin_corpus()) {
    std::vector<GSet> spaces = {GSet::point(ng.group), GSet::natural(ng.group)};
    if (ng.group->order() <= 12) spaces.push_back(GSet::regular(ng.group));
    for (const auto& x : spaces)
      for (int n = 1; n <= kMaxN; ++n) {
        ++total;
        const auto skel = lambda_skeleton(ng.group, x, n).components().size();
        if (skel != oracle::loop_components(*ng.group, x, n)) ++bad;
      }
  }
  o.pass = o.pass && bad == 0;
  o.detail += ", " + std::to_string(total - bad) + "/" + std::to_string(total) + " skeletons match brute force";
  return o;
}

// exact checks plus floating-point orthogonality as a second opinion
int table_violations(const CharacterTable& t) {
  const auto& g = *t.group();
  int bad = 0;
  std::int64_t sum_sq = 0;
  for (const auto& row : t.rows()) sum_sq += static_cast<std::int64_t>(row.degree) * row.degree;
  if (sum_sq != g.order()) ++bad;
  if (t.size() != g.classes().count()) ++bad;
  for (int a = 0; a < t.size(); ++a)
    for (int b = 0; b < t.size(); ++b) {
      if (t.inner_product(t.row(a).values, t.row(b).values) != (a == b ? 1 : 0)) ++bad;
      std::complex<double> s = 0;
      for (int c = 0; c < g.classes().count(); ++c)
        s += static_cast<double>(g.classes().size(c)) * oracle::numeric(t.row(a).values[static_cast<std::size_t>(c)]) *
             std::conj(oracle::numeric(t.row(b).values[static_cast<std::size_t>(c)]));
      if (std::abs(s / static_cast<double>(g.order()) - (a == b ? 1.0 : 0.0)) > kNumericTolerance) ++bad;
    }
  return bad;
}

Outcome criterion8() {
  Outcome o = summarize(run_suite("freeness", builtin_corpus(), options()), [](const CheckResult& c) {
    return c.subject.find("character table") != std::string::npos ||
           c.subject.find("squared degrees") != std::string::npos ||
           c.subject.find("orthogonality") != std::string::npos ||
           c.subject.find("central scalar") != std::string::npos ||
           c.subject.find("irreducible count") != std::string::npos;
  });

  auto dir = std::filesystem::temp_directory_path() / ("quasik-accept-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  ::setenv("QUASIK_CACHE", dir.c_str(), 1);
  clear_character_table_cache();
  std::vector<json> fresh;
  for (const auto& ng : builtin_corpus()) fresh.push_back(table_to_json(*character_table(ng.group)));
  clear_character_table_cache();

  auto t0 = Clock::now();
  int bad = 0;
  std::size_t i = 0;
  for (const auto& ng : builtin_corpus()) {
    auto t = character_table(ng.group);
    if (table_to_json(*t) != fresh[i++]) ++bad;
    bad += table_violations(*t);
  }
  const double secs = seconds_since(t0);
  ::unsetenv("QUASIK_CACHE");
  clear_character_table_cache();
  std::filesystem::remove_all(dir);

  o.pass = o.pass && bad == 0 && secs <= kCachedTableSeconds;
  o.detail += ", cached rerun " + std::to_string(bad) + " violations in " + fmt_seconds(secs) + " (limit " +
              fmt_seconds(kCachedTableSeconds) + ")";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"lambda basis freeness over the corpus", criterion1},
      {"rank of QK over a point equals brute-force count", criterion2},
      {"Kunneth bijective and balanced", criterion3},
      {"change of group bijective", criterion4},
      {"restriction functorial and multiplicative", criterion5},
      {"free and trivial action splittings", criterion6},
      {"skeleton counts match iterated recursion", criterion7},
      {"character tables exact, cached rerun", criterion8},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    auto t0 = Clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failed;
    std::cout << "criterion " << (i + 1) << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << " ["
              << o.detail << "] " << fmt_seconds(seconds_since(t0)) << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
