#include <map>

#include "doctest.h"
#include "oracles.hpp"
#include "quasik/character_table.hpp"
#include "quasik/error.hpp"
#include "quasik/tuples.hpp"
#include "support.hpp"

using namespace quasik;
using support::cyc;
using support::group;

namespace {

int row_with_value(const TablePtr& t, const Perm& g, const Cyclotomic& v) {
  for (int r = 0; r < t->size(); ++r)
    if (IrreducibleCharacter{t, r}.value_at(g) == v) return r;
  return -1;
}

std::map<int, std::int64_t> as_map(const std::vector<std::pair<int, std::int64_t>>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

TEST_SUITE("char-theory") {

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  CHECK(euler_phi(8) == 4);
  CHECK(euler_phi(9) == 6);
}

TEST_CASE("cyclotomic arithmetic is exact and canonical") {
  for (int m : {1, 2, 3, 4, 5, 6, 8, 12}) {
    CAPTURE(m);
    CHECK(Cyclotomic::root_power(m, m) == Cyclotomic(m, 1));
    CHECK(Cyclotomic::root_power(m, -1) * Cyclotomic::root_power(m, 1) == Cyclotomic(m, 1));
    Cyclotomic sum(m);
    for (int k = 0; k < m; ++k) sum += Cyclotomic::root_power(m, k);
    CHECK(sum == Cyclotomic(m, m == 1 ? 1 : 0));
  }
  auto z3 = Cyclotomic::root_power(3, 1);
  CHECK(z3.conj() == Cyclotomic::root_power(3, 2));
  CHECK(z3 == Cyclotomic::root_power(6, 2));
  CHECK(z3.lift(12) == Cyclotomic::root_power(12, 4));
  std::int64_t v = 0;
  CHECK((z3 + z3.conj()).is_integer(&v));
  CHECK(v == -1);
  CHECK_FALSE(z3.is_integer());
  CHECK(std::abs(oracle::numeric(Cyclotomic::root_power(12, 5)) - std::polar(1.0, 2 * M_PI * 5 / 12)) < 1e-12);
}

TEST_CASE("S3 table matches the classical table") {
  auto t = character_table(group("S3"));
  REQUIRE(t->size() == 3);
  // classes: e, (0 1 2), (1 2)
  std::vector<std::vector<int>> expected{{1, 1, 1}, {1, 1, -1}, {2, -1, 0}};
  for (int r = 0; r < 3; ++r) {
    CHECK(t->row(r).degree == expected[static_cast<std::size_t>(r)][0]);
    for (int c = 0; c < 3; ++c)
      CHECK(t->row(r).values[static_cast<std::size_t>(c)] ==
            Cyclotomic(t->conductor(), expected[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]));
  }
}

TEST_CASE("small table examples") {
  auto e = character_table(group("trivial"));
  CHECK(e->size() == 1);
  CHECK(e->row(0).degree == 1);
  auto z4 = character_table(group("Z4"));
  CHECK(z4->size() == 4);
  CHECK(z4->conductor() == 4);
  for (const auto& row : z4->rows()) CHECK(row.degree == 1);
  auto q8 = character_table(group("Q8"));
  std::vector<int> degrees;
  for (const auto& row : q8->rows()) degrees.push_back(row.degree);
  CHECK(degrees == std::vector<int>{1, 1, 1, 1, 2});
  auto s4 = character_table(group("S4"));
  degrees.clear();
  for (const auto& row : s4->rows()) degrees.push_back(row.degree);
  CHECK(degrees == std::vector<int>{1, 1, 2, 3, 3});
}

TEST_CASE("cyclic tables are the powers of a primitive root") {
  for (std::string name : {"Z2", "Z3", "Z4", "Z6"}) {
    auto g = group(name);
    auto t = character_table(g);
    const int m = g->order();
    const Perm gen = g->generators()[0];
    std::set<int> seen;
    for (int r = 0; r < t->size(); ++r) {
      IrreducibleCharacter chi{t, r};
      int found = -1;
      for (int j = 0; j < m && found < 0; ++j) {
        bool all = true;
        Perm x = Perm::identity(g->degree());
        for (int k = 0; k < m; ++k, x = gen * x) all = all && chi.value_at(x) == Cyclotomic::root_power(m, j * k);
        if (all) found = j;
      }
      CHECK(found >= 0);
      seen.insert(found);
    }
    CHECK(static_cast<int>(seen.size()) == m);
  }
}

TEST_CASE("row and column orthogonality, checked numerically") {
  for (const auto& ng : builtin_corpus()) {
    CAPTURE(ng.name);
    auto g = ng.group;
    auto t = character_table(g);
    CHECK(t->size() == g->classes().count());
    int sum_sq = 0;
    for (const auto& row : t->rows()) sum_sq += row.degree * row.degree;
    CHECK(sum_sq == g->order());
    CHECK(t->row(0).degree == 1);
    for (int c = 0; c < g->classes().count(); ++c) CHECK(t->row(0).values[static_cast<std::size_t>(c)] == Cyclotomic(t->conductor(), 1));
    for (int a = 0; a < t->size(); ++a)
      for (int b = 0; b < t->size(); ++b) {
        std::complex<double> s = 0;
        for (int i = 0; i < g->order(); ++i)
          s += oracle::numeric(t->value(a, i)) * std::conj(oracle::numeric(t->value(b, i)));
        s /= g->order();
        CHECK(std::abs(s - std::complex<double>(a == b ? 1 : 0)) < 1e-9);
        CHECK(t->inner_product(t->row(a).values, t->row(b).values) == (a == b ? 1 : 0));
      }
    const auto& cp = g->classes();
    for (int x = 0; x < cp.count(); ++x)
      for (int y = 0; y < cp.count(); ++y) {
        std::complex<double> s = 0;
        for (int r = 0; r < t->size(); ++r)
          s += oracle::numeric(t->row(r).values[static_cast<std::size_t>(x)]) *
               std::conj(oracle::numeric(t->row(r).values[static_cast<std::size_t>(y)]));
        const double expected = x == y ? static_cast<double>(g->order()) / cp.size(x) : 0.0;
        CHECK(std::abs(s - expected) < 1e-9);
      }
  }
}

TEST_CASE("fresh computation is deterministic") {
  auto g = group("A4");
  auto a = compute_character_table(g);
  auto b = compute_character_table(g);
  REQUIRE(a->size() == b->size());
  for (int r = 0; r < a->size(); ++r) CHECK(a->row(r).values == b->row(r).values);
}

TEST_CASE("central scalar examples") {
  auto z2 = group("Z2");
  auto t2 = character_table(z2);
  const Perm s = cyc(2, {{0, 1}});
  int sign = row_with_value(t2, s, Cyclotomic(2, -1));
  REQUIRE(sign >= 0);
  CHECK(central_scalar({t2, sign}, s) == Fraction(1, 2));
  for (const auto& ng : builtin_corpus()) {
    auto t = character_table(ng.group);
    for (const auto& z : ng.group->elements())
      if (centralizer(ng.group, CommutingTuple(ng.group, {z}))->order() == ng.group->order())
        CHECK(central_scalar({t, 0}, z) == Fraction(0, 1));
  }
  auto z3 = group("Z3");
  auto t3 = character_table(z3);
  const Perm g = cyc(3, {{0, 1, 2}});
  int r = row_with_value(t3, g, Cyclotomic::root_power(3, 1));
  REQUIRE(r >= 0);
  CHECK(central_scalar({t3, r}, g) == Fraction(1, 3));
  CHECK(to_string(central_scalar({t3, 0}, g)) == "0/1");
}

TEST_CASE("central scalar rejects non-central elements") {
  auto s3 = group("S3");
  CHECK_THROWS_AS(central_scalar({character_table(s3), 2}, cyc(3, {{0, 1}})), InputError);
}

TEST_CASE("central scalars add along products") {
  for (const auto& ng : builtin_corpus()) {
    auto g = ng.group;
    auto t = character_table(g);
    std::vector<Perm> center;
    for (const auto& z : g->elements()) {
      bool central = true;
      for (const auto& s : g->generators()) central = central && z * s == s * z;
      if (central) center.push_back(z);
    }
    for (int r = 0; r < t->size(); ++r)
      for (const auto& a : center)
        for (const auto& b : center) {
          Fraction d = central_scalar({t, r}, a) + central_scalar({t, r}, b) - central_scalar({t, r}, a * b);
          CHECK(d.denominator() == 1);
        }
  }
}

TEST_CASE("q-degree examples") {
  auto z2 = group("Z2");
  auto t2 = character_table(z2);
  const Perm s = cyc(2, {{0, 1}});
  CommutingTuple sig(z2, {s});
  CHECK(q_degree({t2, 0}, sig).is_zero());
  CHECK(q_degree({t2, row_with_value(t2, s, Cyclotomic(2, -1))}, sig).to_strings() == std::vector<std::string>{"1/2"});
  auto z3 = group("Z3");
  auto t3 = character_table(z3);
  const Perm g = cyc(3, {{0, 1, 2}});
  int r = row_with_value(t3, g, Cyclotomic::root_power(3, 2));
  CHECK(q_degree({t3, r}, CommutingTuple(z3, {g, g})).to_strings() == std::vector<std::string>{"2/3", "2/3"});
}

TEST_CASE("tensor decomposition examples") {
  auto ts3 = character_table(group("S3"));
  CHECK(as_map(tensor_decompose({ts3, 2}, {ts3, 2})) == std::map<int, std::int64_t>{{0, 1}, {1, 1}, {2, 1}});
  for (int r = 0; r < 3; ++r) CHECK(as_map(tensor_decompose({ts3, 0}, {ts3, r})) == std::map<int, std::int64_t>{{r, 1}});
  auto t2 = character_table(group("Z2"));
  CHECK(as_map(tensor_decompose({t2, 1}, {t2, 1})) == std::map<int, std::int64_t>{{0, 1}});
}

TEST_CASE("tensor products preserve degree and q-degrees add mod 1") {
  for (const auto& ng : builtin_corpus())
    for (const auto& sigma : commuting_tuples(ng.group, 1)) {
      auto c = centralizer(ng.group, sigma);
      auto t = character_table(c);
      for (int a = 0; a < t->size(); ++a)
        for (int b = 0; b < t->size(); ++b) {
          std::int64_t deg = 0;
          for (auto [nu, m] : tensor_decompose({t, a}, {t, b})) {
            CHECK(m > 0);
            deg += m * t->row(nu).degree;
            auto qa = q_degree({t, a}, sigma).fractions[0];
            auto qb = q_degree({t, b}, sigma).fractions[0];
            auto qn = q_degree({t, nu}, sigma).fractions[0];
            CHECK((qa + qb - qn).denominator() == 1);
          }
          CHECK(deg == std::int64_t{t->row(a).degree} * t->row(b).degree);
        }
    }
}

TEST_CASE("restriction examples") {
  auto s3 = group("S3");
  auto ts3 = character_table(s3);
  for (int r = 0; r < 3; ++r)
    CHECK(as_map(restrict_decompose({ts3, r}, GroupHom::identity(s3))) == std::map<int, std::int64_t>{{r, 1}});
  auto h2 = support::generated(3, {cyc(3, {{0, 1}})});
  CHECK(as_map(restrict_decompose({ts3, 2}, GroupHom::inclusion(h2, s3))) ==
        std::map<int, std::int64_t>{{0, 1}, {1, 1}});
  auto h3 = support::generated(3, {cyc(3, {{0, 1, 2}})});
  CHECK(as_map(restrict_decompose({ts3, 2}, GroupHom::inclusion(h3, s3))) ==
        std::map<int, std::int64_t>{{1, 1}, {2, 1}});
}

TEST_CASE("restriction preserves degree and commutes with tensor products") {
  for (const auto& hp : corpus_hom_pairs())
    for (const GroupHom* phi : {&hp.phi, &hp.psi}) {
      auto src = character_table(phi->source());
      auto dst = character_table(phi->target());
      auto restrict_multiset = [&](const std::map<int, std::int64_t>& in) {
        std::map<int, std::int64_t> out;
        for (auto [nu, m] : in)
          for (auto [r, k] : restrict_decompose({dst, nu}, *phi)) out[r] += m * k;
        return out;
      };
      for (int a = 0; a < dst->size(); ++a) {
        std::int64_t deg = 0;
        for (auto [r, k] : restrict_decompose({dst, a}, *phi)) deg += k * src->row(r).degree;
        CHECK(deg == dst->row(a).degree);
        for (int b = 0; b < dst->size(); ++b) {
          auto lhs = restrict_multiset(as_map(tensor_decompose({dst, a}, {dst, b})));
          std::map<int, std::int64_t> rhs;
          for (auto [i, x] : restrict_decompose({dst, a}, *phi))
            for (auto [j, y] : restrict_decompose({dst, b}, *phi))
              for (auto [nu, m] : tensor_decompose({src, i}, {src, j})) rhs[nu] += x * y * m;
          CHECK(lhs == rhs);
        }
      }
    }
}

}  // TEST_SUITE
