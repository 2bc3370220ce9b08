#include "quasik/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "quasik/character_table.hpp"
#include "quasik/error.hpp"
#include "quasik/quasi_theory.hpp"

namespace quasik {

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

int Report::failures() const {
  return static_cast<int>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.pass && !c.cap_exceeded; }));
}

int Report::cap_overflows() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.cap_exceeded; }));
}

int Report::exit_code() const {
  if (failures() > 0) return 1;
  if (cap_overflows() > 0) return 3;
  return 0;
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.pass ? "PASS " : c.cap_exceeded ? "CAP  " : "FAIL ") << '[' << c.suite << "] " << c.subject
       << ": expected " << c.expected << ", actual " << c.actual << '\n';
  }
  os << checks.size() << " checks, " << failures() << " failed, " << cap_overflows() << " cap overflows\n";
  return os.str();
}

void Report::append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"freeness",     "kunneth",        "change-of-group", "free-action",
                                              "trivial-action", "lambda-iter", "ring-axioms"};
  return names;
}

std::int64_t commuting_tuple_count(const FiniteGroup& g, int k) {
  std::function<std::int64_t(const std::vector<int>&, int)> count = [&](const std::vector<int>& s, int depth) {
    if (depth == 0) return std::int64_t{1};
    std::int64_t total = 0;
    for (int h : s) {
      std::vector<int> c;
      for (int x : s)
        if (g.commute(x, h)) c.push_back(x);
      total += count(c, depth - 1);
    }
    return total;
  };
  std::vector<int> all(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) all[static_cast<std::size_t>(i)] = i;
  return count(all, k);
}

namespace {

using Item = std::function<std::vector<CheckResult>()>;

struct Job {
  std::string suite;
  std::string subject;
  Item run;
};

CheckResult make_check(const std::string& suite, const std::string& subject, bool pass, std::string expected,
                       std::string actual) {
  return CheckResult{suite, subject, pass, false, std::move(expected), std::move(actual)};
}

Report run_jobs(std::vector<Job> jobs, int workers) {
  std::vector<std::vector<CheckResult>> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      const Job& job = jobs[i];
      try {
        results[i] = job.run();
      } catch (const CapExceeded& e) {
        CheckResult c{job.suite, job.subject, false, true, "within cap", e.what()};
        results[i] = {c};
      } catch (const std::exception& e) {
        results[i] = {make_check(job.suite, job.subject, false, "no error", e.what())};
      }
    }
  };
  int n = workers > 0 ? workers : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  n = std::min<int>(n, static_cast<int>(jobs.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  Report r;
  for (auto& v : results) r.checks.insert(r.checks.end(), v.begin(), v.end());
  return r;
}

LaurentPoly random_poly(int nvars, std::mt19937& rng) {
  std::uniform_int_distribution<int> terms(1, 3), coeff(-3, 3), expo(-2, 2);
  LaurentPoly p(nvars);
  const int t = terms(rng);
  for (int i = 0; i < t; ++i) {
    LaurentPoly::Exponent e(static_cast<std::size_t>(nvars));
    for (auto& x : e) x = expo(rng);
    p.add_term(e, coeff(rng));
  }
  return p;
}

QTheoryClass random_class(const RingPtr& ring, std::mt19937& rng) {
  QTheoryClass x(ring);
  std::uniform_int_distribution<int> terms(1, 3), idx(0, ring->total_rank() - 1);
  const int t = terms(rng);
  for (int i = 0; i < t; ++i) x.add(idx(rng), random_poly(ring->n(), rng));
  return x;
}

GSet trivially_extended(const GroupPtr& product, const GSet& x, const FiniteGroup& h) {
  std::vector<Perm> acts = x.generator_action();
  for (std::size_t i = 0; i < h.generators().size(); ++i) acts.push_back(Perm::identity(x.points()));
  return GSet(product, x.points(), std::move(acts));
}

/// Subgroup generated by the least non-identity element, or the group
/// itself when trivial.
GroupPtr first_cyclic_subgroup(const GroupPtr& h) {
  if (h->order() == 1) return h;
  return FiniteGroup::from_generators(h->degree(), {h->element(1)});
}

// ---- suites ----

void freeness_jobs(std::vector<Job>& jobs, const std::vector<NamedGroup>& corpus, const VerifyOptions& opt) {
  const std::string suite = "freeness";
  for (const auto& ng : corpus) {
    GroupPtr g = ng.group;
    jobs.push_back({suite, ng.name + " character table", [=] {
                      std::vector<CheckResult> out;
                      TablePtr t = character_table(g);
                      std::int64_t sum_sq = 0;
                      for (const auto& row : t->rows()) sum_sq += std::int64_t{row.degree} * row.degree;
                      out.push_back(make_check(suite, ng.name + " sum of squared degrees", sum_sq == g->order(),
                                               std::to_string(g->order()), std::to_string(sum_sq)));
                      out.push_back(make_check(suite, ng.name + " irreducible count", t->size() == g->classes().count(),
                                               std::to_string(g->classes().count()), std::to_string(t->size())));
                      int bad = 0;
                      for (int a = 0; a < t->size(); ++a)
                        for (int b = 0; b < t->size(); ++b)
                          if (t->inner_product(t->row(a).values, t->row(b).values) != (a == b ? 1 : 0)) ++bad;
                      out.push_back(make_check(suite, ng.name + " orthogonality", bad == 0, "identity Gram matrix",
                                               std::to_string(bad) + " wrong entries"));
                      // central scalars are additive in the central element
                      std::vector<int> center;
                      for (int z = 0; z < g->order(); ++z) {
                        bool central = true;
                        for (int s : g->generator_indices()) central = central && g->commute(z, s);
                        if (central) center.push_back(z);
                      }
                      int bad_add = 0;
                      for (int row = 0; row < t->size(); ++row) {
                        IrreducibleCharacter chi{t, row};
                        for (int a : center)
                          for (int b : center) {
                            Fraction lhs = central_scalar(chi, g->element(g->mul(a, b)));
                            Fraction rhs = central_scalar(chi, g->element(a)) + central_scalar(chi, g->element(b));
                            Fraction diff = rhs - lhs;
                            if (diff.denominator() != 1) ++bad_add;
                          }
                      }
                      out.push_back(make_check(suite, ng.name + " central scalar additivity", bad_add == 0, "0 violations",
                                               std::to_string(bad_add) + " violations"));
                      return out;
                    }});
    for (int n = 1; n <= opt.max_n; ++n) {
      const std::string subject = ng.name + " n=" + std::to_string(n);
      jobs.push_back({suite, subject + " lambda basis", [=] {
                        int bad_rank = 0, bad_degree = 0;
                        const auto tuples = commuting_tuples(g, n);
                        for (const auto& sigma : tuples) {
                          GroupPtr c = centralizer(g, sigma);
                          auto basis = lambda_basis(c, sigma);
                          if (static_cast<int>(basis.size()) != c->classes().count()) ++bad_rank;
                          for (const auto& b : basis)
                            for (int i = 0; i < n; ++i) {
                              const Fraction& f = b.qdeg.fractions[static_cast<std::size_t>(i)];
                              const int l = sigma.orders()[static_cast<std::size_t>(i)];
                              if (f < Fraction(0) || f >= Fraction(1) || l % f.denominator() != 0) ++bad_degree;
                            }
                        }
                        return std::vector<CheckResult>{
                            make_check(suite, subject + " basis size = class count of centralizer (" +
                                                  std::to_string(tuples.size()) + " tuples)",
                                       bad_rank == 0, "0 mismatches", std::to_string(bad_rank) + " mismatches"),
                            make_check(suite, subject + " q-degrees in [0,1) dividing orders", bad_degree == 0,
                                       "0 violations", std::to_string(bad_degree) + " violations")};
                      }});
      jobs.push_back({suite, subject + " rank", [=] {
                        RingPtr ring = qk_compute(g, GSet::point(g), n);
                        const std::int64_t expected = commuting_tuple_count(*g, n + 2) / g->order();
                        return std::vector<CheckResult>{make_check(
                            suite, subject + " rank of QK(pt) = commuting (n+1)-tuple classes",
                            ring->total_rank() == expected, std::to_string(expected), std::to_string(ring->total_rank()))};
                      }});
    }
  }
}

void kunneth_jobs(std::vector<Job>& jobs, const std::vector<NamedGroup>& corpus, const VerifyOptions& opt) {
  const std::string suite = "kunneth";
  for (std::size_t a = 0; a < corpus.size(); ++a)
    for (std::size_t b = a; b < corpus.size(); ++b) {
      const auto& ga = corpus[a];
      const auto& gb = corpus[b];
      if (static_cast<long long>(ga.group->order()) * gb.group->order() > opt.kunneth_max_order) continue;
      for (int n = 1; n <= opt.max_n; ++n) {
        const std::string subject = ga.name + " x " + gb.name + " n=" + std::to_string(n);
        jobs.push_back({suite, subject, [=] {
                          std::vector<CheckResult> out;
                          RingPtr left = qk_compute(ga.group, GSet::point(ga.group), n);
                          RingPtr right = qk_compute(gb.group, GSet::point(gb.group), n);
                          KunnethMap k = kunneth(left, right);
                          const int src = left->total_rank() * right->total_rank();
                          const int dst = k.target->total_rank();
                          const bool bij = src == dst && k.bijective();
                          out.push_back(make_check(suite, subject + " bijective on points",
                                                   bij, std::to_string(src) + "=" + std::to_string(src) + " bijective",
                                                   std::to_string(src) + "=" + std::to_string(dst) + " " +
                                                       (bij ? "bijective" : "not bijective")));
                          std::mt19937 rng(opt.seed + static_cast<std::uint32_t>(a * 131 + b * 17 + static_cast<std::size_t>(n)));
                          int bad_balance = 0, bad_mult = 0;
                          for (int t = 0; t < opt.trials; ++t) {
                            QTheoryClass x = random_class(left, rng);
                            QTheoryClass y = random_class(right, rng);
                            std::uniform_int_distribution<int> var(0, n - 1);
                            LaurentPoly q = LaurentPoly::variable(n, var(rng));
                            QTheoryClass base = kunneth_map(k, x, y);
                            QTheoryClass l = kunneth_map(k, x.scaled(q), y);
                            QTheoryClass r = kunneth_map(k, x, y.scaled(q));
                            if (!(l == r) || !(l == base.scaled(q))) ++bad_balance;
                            QTheoryClass x2 = random_class(left, rng);
                            QTheoryClass y2 = random_class(right, rng);
                            if (!(kunneth_map(k, qk_mul(x, x2), qk_mul(y, y2)) ==
                                  qk_mul(base, kunneth_map(k, x2, y2))))
                              ++bad_mult;
                          }
                          out.push_back(make_check(suite, subject + " balanced over " + std::to_string(opt.trials) + " classes",
                                                   bad_balance == 0, "0 violations", std::to_string(bad_balance) + " violations"));
                          out.push_back(make_check(suite, subject + " multiplicative over " + std::to_string(opt.trials) + " pairs",
                                                   bad_mult == 0, "0 violations", std::to_string(bad_mult) + " violations"));
                          return out;
                        }});
      }
    }
}

void change_of_group_jobs(std::vector<Job>& jobs, const std::vector<NamedGroup>& corpus, const VerifyOptions& opt) {
  const std::string suite = "change-of-group";
  for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
    const auto& ng = corpus[gi];
    if (ng.group->order() > opt.change_max_order) continue;
    const auto subgroups = all_subgroups(*ng.group);
    for (std::size_t hi = 0; hi < subgroups.size(); ++hi) {
      GroupPtr g = ng.group;
      GroupPtr h = subgroups[hi];
      for (int n = 1; n <= opt.max_n; ++n) {
        const std::string subject =
            ng.name + " H#" + std::to_string(hi) + " (order " + std::to_string(h->order()) + ") n=" + std::to_string(n);
        jobs.push_back({suite, subject, [=] {
                          std::vector<CheckResult> out;
                          GroupHom incl = GroupHom::inclusion(h, g);
                          const std::vector<std::pair<std::string, GSet>> spaces{
                              {"pt", GSet::point(h)},
                              {"cosets", GSet::cosets(h, *first_cyclic_subgroup(h))},
                              {"regular", GSet::regular(h)}};
                          std::mt19937 rng(opt.seed + static_cast<std::uint32_t>(gi * 1009 + hi * 7 + static_cast<std::size_t>(n)));
                          for (const auto& [xname, x] : spaces) {
                            ChangeOfGroup c = change_of_group(g, incl, x, n);
                            const int src = c.rho.domain->total_rank();
                            const int dst = c.rho.codomain->total_rank();
                            out.push_back(make_check(suite, subject + " X=" + xname + " rho bijective", c.bijective && src == dst,
                                                     std::to_string(src) + "=" + std::to_string(src) + " bijective",
                                                     std::to_string(src) + "=" + std::to_string(dst) + " " +
                                                         (c.bijective ? "bijective" : "not bijective")));
                            int bad = 0;
                            const int trials = std::max(1, opt.trials / 5);
                            for (int t = 0; t < trials; ++t) {
                              QTheoryClass a = random_class(c.rho.domain, rng);
                              QTheoryClass b = random_class(c.rho.domain, rng);
                              if (!(c.rho.apply(qk_mul(a, b)) == qk_mul(c.rho.apply(a), c.rho.apply(b)))) ++bad;
                            }
                            if (!(c.rho.apply(QTheoryClass::unit(c.rho.domain)) == QTheoryClass::unit(c.rho.codomain))) ++bad;
                            out.push_back(make_check(suite, subject + " X=" + xname + " rho multiplicative", bad == 0,
                                                     "0 violations", std::to_string(bad) + " violations"));
                          }
                          return out;
                        }});
      }
    }
  }
}

void free_action_jobs(std::vector<Job>& jobs, const std::vector<NamedGroup>& corpus, const VerifyOptions& opt) {
  const std::string suite = "free-action";
  for (const auto& ng : corpus)
    for (int n = 1; n <= opt.max_n; ++n) {
      const std::string subject = ng.name + " regular n=" + std::to_string(n);
      GroupPtr g = ng.group;
      jobs.push_back({suite, subject, [=] {
                        SplitCheck s = verify_free_action(g, GSet::regular(g), n);
                        return std::vector<CheckResult>{make_check(
                            suite, subject, s.holds, "1=1 identity tuple only",
                            std::to_string(s.source_rank) + "=" + std::to_string(s.target_rank) +
                                (s.holds ? " identity tuple only" : " mismatch"))};
                      }});
    }
}

struct TrivialCase {
  std::string g;
  std::string h;
  std::string x;  // pt, natural, regular, cosets
};

void trivial_action_jobs(std::vector<Job>& jobs, const std::vector<NamedGroup>& corpus, const VerifyOptions& opt) {
  const std::string suite = "trivial-action";
  auto find = [&](const std::string& name) -> GroupPtr {
    for (const auto& ng : corpus)
      if (ng.name == name) return ng.group;
    return nullptr;
  };
  std::vector<TrivialCase> cases{{"Z2", "trivial", "regular"}, {"Z2", "Z2", "regular"},  {"trivial", "S3", "pt"},
                                 {"S3", "Z2", "natural"},      {"Z3", "Z2", "pt"},        {"Z2", "Z3", "natural"},
                                 {"S3", "Z3", "cosets"},       {"Z4", "Z2", "natural"},   {"Z2xZ2", "Z2", "natural"},
                                 {"A4", "Z2", "natural"}};
  // a user corpus without these names falls back to pairing its own groups
  bool named = std::all_of(cases.begin(), cases.end(), [&](const TrivialCase& c) { return find(c.g) && find(c.h); });
  if (!named) {
    cases.clear();
    for (const auto& a : corpus)
      for (const auto& b : corpus)
        if (a.group->order() * b.group->order() <= opt.kunneth_max_order) cases.push_back({a.name, b.name, "natural"});
  }
  for (const auto& tc : cases) {
    GroupPtr g = find(tc.g);
    GroupPtr h = find(tc.h);
    for (int n = 1; n <= opt.max_n; ++n) {
      const std::string subject = tc.g + " x " + tc.h + " on " + tc.x + " n=" + std::to_string(n);
      jobs.push_back({suite, subject, [=] {
                        GSet xg = tc.x == "pt"        ? GSet::point(g)
                                  : tc.x == "regular" ? GSet::regular(g)
                                  : tc.x == "cosets"  ? GSet::cosets(g, *first_cyclic_subgroup(g))
                                                      : GSet::natural(g);
                        GroupPtr product = direct_product(*g, *h);
                        SplitCheck s = verify_trivial_action_split(g, h, trivially_extended(product, xg, *h), n);
                        return std::vector<CheckResult>{make_check(
                            suite, subject, s.holds,
                            std::to_string(s.source_rank) + "=" + std::to_string(s.source_rank) + " bijective",
                            std::to_string(s.source_rank) + "=" + std::to_string(s.target_rank) +
                                (s.holds ? " bijective" : " not bijective"))};
                      }});
    }
  }
}

void lambda_iter_jobs(std::vector<Job>& jobs, const std::vector<NamedGroup>& corpus, const VerifyOptions& opt) {
  const std::string suite = "lambda-iter";
  for (const auto& ng : corpus) {
    GroupPtr g = ng.group;
    std::vector<std::pair<std::string, GSet>> spaces{{"pt", GSet::point(g)}, {"natural", GSet::natural(g)}};
    if (g->order() <= opt.iter_max_points) spaces.push_back({"regular", GSet::regular(g)});
    GroupPtr k = first_cyclic_subgroup(g);
    if (g->order() / k->order() <= opt.iter_max_points && k->order() > 1)
      spaces.push_back({"cosets", GSet::cosets(g, *k)});
    for (const auto& [xname, x] : spaces) {
      if (x.points() > opt.iter_max_points) continue;
      for (int n = 1; n <= opt.max_n; ++n) {
        const std::string subject = ng.name + " on " + xname + " n=" + std::to_string(n);
        GSet xs = x;
        jobs.push_back({suite, subject, [=] {
                          std::vector<CheckResult> out;
                          auto sk = lambda_skeleton(g, xs, n);
                          const long long iter = iterated_component_count(g, xs, n);
                          const long long comps = static_cast<long long>(sk.components().size());
                          out.push_back(make_check(suite, subject + " component count", comps == iter, std::to_string(iter),
                                                   std::to_string(comps)));
                          int bad = 0;
                          for (const auto& c : sk.components()) {
                            if (c.orbit_size * c.stabilizer->order() != c.centralizer->order()) ++bad;
                            for (const auto& s : c.sigma.entries())
                              if (!c.stabilizer->contains(s)) ++bad;
                          }
                          const auto& ts = sk.tuples();
                          for (std::size_t i = 0; i < ts.size(); ++i)
                            for (std::size_t j = i + 1; j < ts.size(); ++j)
                              if (!transporter(g, ts[i], ts[j]).empty()) ++bad;
                          out.push_back(make_check(suite, subject + " orbit-stabilizer and distinct classes", bad == 0,
                                                   "0 violations", std::to_string(bad) + " violations"));
                          return out;
                        }});
      }
    }
  }
}

void ring_axiom_jobs(std::vector<Job>& jobs, const std::vector<NamedGroup>& corpus, const VerifyOptions& opt) {
  const std::string suite = "ring-axioms";
  for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
    const auto& ng = corpus[gi];
    GroupPtr g = ng.group;
    for (int n = 1; n <= opt.max_n; ++n) {
      for (const std::string xname : {"pt", "natural"}) {
        const std::string subject = ng.name + " on " + xname + " n=" + std::to_string(n);
        jobs.push_back({suite, subject, [=] {
                          GSet x = xname == "pt" ? GSet::point(g) : GSet::natural(g);
                          RingPtr ring = qk_compute(g, x, n);
                          std::mt19937 rng(opt.seed + static_cast<std::uint32_t>(gi * 97 + static_cast<std::size_t>(n) * 3 +
                                                                                 (xname == "pt" ? 0 : 1)));
                          const QTheoryClass one = QTheoryClass::unit(ring);
                          int comm = 0, assoc = 0, dist = 0, unit = 0, pistar = 0, inject = 0;
                          for (int t = 0; t < opt.trials; ++t) {
                            QTheoryClass a = random_class(ring, rng), b = random_class(ring, rng), c = random_class(ring, rng);
                            if (!(qk_mul(a, b) == qk_mul(b, a))) ++comm;
                            if (!(qk_mul(qk_mul(a, b), c) == qk_mul(a, qk_mul(b, c)))) ++assoc;
                            if (!(qk_mul(a, b + c) == qk_mul(a, b) + qk_mul(a, c))) ++dist;
                            if (!(qk_mul(one, a) == a)) ++unit;
                            LaurentPoly p = random_poly(n, rng), r = random_poly(n, rng);
                            if (!(qk_mul(one.scaled(p), one.scaled(r)) == one.scaled(p * r))) ++pistar;
                            if (!(qk_mul(one.scaled(p), a) == a.scaled(p))) ++pistar;
                            std::uniform_int_distribution<int> var(0, n - 1);
                            QTheoryClass qa = qk_mul(QTheoryClass::q(ring, var(rng)), a);
                            if (qa.is_zero() != a.is_zero()) ++inject;
                          }
                          auto line = [&](const std::string& what, int bad) {
                            return make_check(suite, subject + " " + what, bad == 0, "0 violations",
                                              std::to_string(bad) + " violations");
                          };
                          return std::vector<CheckResult>{line("commutative", comm),     line("associative", assoc),
                                                          line("distributive", dist),    line("unital", unit),
                                                          line("pi_star is a ring map", pistar),
                                                          line("q_i acts injectively", inject)};
                        }});
      }
    }
  }
  // restriction functoriality over the fixed composable pairs; only for
  // the built-in corpus, since the pairs refer to its groups
  bool builtin = corpus.size() == builtin_corpus().size() &&
                 std::equal(corpus.begin(), corpus.end(), builtin_corpus().begin(),
                            [](const NamedGroup& a, const NamedGroup& b) { return a.name == b.name; });
  if (!builtin) return;
  const auto& pairs = corpus_hom_pairs();
  for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
    for (int n = 1; n <= opt.max_n; ++n) {
      for (const std::string xname : {"pt", "natural"}) {
        const std::string subject = pairs[pi].name + " on " + xname + " n=" + std::to_string(n);
        jobs.push_back({suite, subject, [=] {
                          const HomPair& hp = corpus_hom_pairs()[pi];
                          const GroupPtr& k = hp.psi.target();
                          GSet x = xname == "pt" ? GSet::point(k) : GSet::natural(k);
                          QTheoryMap psi_star = qk_restriction(hp.psi, x, n);
                          QTheoryMap phi_star = qk_restriction(hp.phi, GSet::pullback(hp.psi, x), n);
                          QTheoryMap composite = qk_restriction(hp.phi.then(hp.psi), x, n);
                          QTheoryMap chained = psi_star.then(phi_star);
                          const bool functorial = chained.matrix == composite.matrix;
                          std::mt19937 rng(opt.seed + static_cast<std::uint32_t>(pi * 13 + static_cast<std::size_t>(n)));
                          int bad = 0;
                          for (int t = 0; t < opt.trials; ++t) {
                            QTheoryClass a = random_class(composite.domain, rng), b = random_class(composite.domain, rng);
                            for (const QTheoryMap* m : {&psi_star, &composite}) {
                              if (!(m->apply(qk_mul(a, b)) == qk_mul(m->apply(a), m->apply(b)))) ++bad;
                            }
                            QTheoryClass c = psi_star.apply(a), d = psi_star.apply(b);
                            if (!(phi_star.apply(qk_mul(c, d)) == qk_mul(phi_star.apply(c), phi_star.apply(d)))) ++bad;
                          }
                          for (int i = 0; i < n; ++i)
                            if (!(composite.apply(QTheoryClass::q(composite.domain, i)) ==
                                  QTheoryClass::q(composite.codomain, i)))
                              ++bad;
                          return std::vector<CheckResult>{
                              make_check(suite, subject + " (psi o phi)^* = phi^* psi^*", functorial, "equal matrices",
                                         functorial ? "equal matrices" : "different matrices"),
                              make_check(suite, subject + " restriction multiplicative over " + std::to_string(opt.trials) +
                                                    " pairs",
                                         bad == 0, "0 violations", std::to_string(bad) + " violations")};
                        }});
      }
    }
  }
}

}  // namespace

Report run_suite(const std::string& suite, const std::vector<NamedGroup>& corpus, const VerifyOptions& opt) {
  if (suite == "all") {
    Report r;
    for (const auto& s : suite_names()) r.append(run_suite(s, corpus, opt));
    return r;
  }
  std::vector<Job> jobs;
  if (suite == "freeness") freeness_jobs(jobs, corpus, opt);
  else if (suite == "kunneth") kunneth_jobs(jobs, corpus, opt);
  else if (suite == "change-of-group") change_of_group_jobs(jobs, corpus, opt);
  else if (suite == "free-action") free_action_jobs(jobs, corpus, opt);
  else if (suite == "trivial-action") trivial_action_jobs(jobs, corpus, opt);
  else if (suite == "lambda-iter") lambda_iter_jobs(jobs, corpus, opt);
  else if (suite == "ring-axioms") ring_axiom_jobs(jobs, corpus, opt);
  else throw InputError("unknown suite '" + suite + "'");
  return run_jobs(std::move(jobs), opt.workers);
}

}  // namespace quasik
